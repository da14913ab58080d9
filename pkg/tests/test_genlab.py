import json

import pytest

from spiralchains.genlab.corpus import NAMES, corpus, corpus_entry
from spiralchains.genlab.fuzz import FuzzConfig, fuzz, instance_config, instance_seed
from spiralchains.genlab.generate import GenConfig, flip_edge, generate_triangulation
from spiralchains.planar import reducibility_check, serialize, validate_triangulation


def test_n4_is_k4(k4):
    for seed in range(5):
        assert generate_triangulation(GenConfig(4, seed)) == k4


def test_generate_n50():
    G = generate_triangulation(GenConfig(50, 7, 200))
    assert validate_triangulation(G).ok
    assert G.num_edges == 144


def test_generate_deterministic():
    a = generate_triangulation(GenConfig(40, 9, 100))
    b = generate_triangulation(GenConfig(40, 9, 100))
    assert serialize(a) == serialize(b)
    assert serialize(a) != serialize(generate_triangulation(GenConfig(40, 10, 100)))


@pytest.mark.parametrize("kw", [dict(n=3), dict(n=10, flips=-1)])
def test_genconfig_rejects(kw):
    with pytest.raises(ValueError):
        GenConfig(**kw)


def test_flip_involution():
    G = generate_triangulation(GenConfig(30, 2, 50))
    flipped = 0
    for u, v in list(G.edges()):
        H = flip_edge(G, (u, v))
        if H is None:
            continue
        flipped += 1
        assert validate_triangulation(H).ok
        assert not H.has_edge(u, v)
        new = [e for e in H.edges() if not G.has_edge(*e)]
        assert len(new) == 1
        assert flip_edge(H, new[0]) == G
    assert flipped > 0


def test_flip_octahedron(corpus_graphs):
    G = corpus_graphs["octahedron"]
    a, b, c = G.outer
    legal = 0
    for e in G.edges():
        H = flip_edge(G, e)
        if set(e) <= {a, b, c}:
            assert H is None
        elif H is not None:
            legal += 1
            assert (H.n, H.num_edges) == (6, 12) and validate_triangulation(H).ok
    assert legal > 0


def test_flip_refused_when_diagonal_exists(k4):
    # in K4 the opposite diagonal of every interior edge is already an edge
    for e in [(0, 3), (1, 3), (2, 3)]:
        assert flip_edge(k4, e) is None
    assert flip_edge(k4, (0, 1)) is None


def test_corpus_entries():
    entries = {e.name: e for e in corpus()}
    assert set(entries) == set(NAMES)
    assert (entries["errera"].n, entries["errera"].e) == (17, 45)
    assert (entries["kittell"].n, entries["kittell"].e) == (23, 63)
    for e in entries.values():
        G = e.graph()
        assert validate_triangulation(G).ok
        assert (G.n, G.num_edges) == (e.n, e.e) and e.e == 3 * e.n - 6
    with pytest.raises(KeyError):
        corpus_entry("heawood")


def test_stacked_is_3_reducible_icosahedron_is_not_4(corpus_graphs):
    for seed in range(20):
        assert reducibility_check(generate_triangulation(GenConfig(40, seed)), 3).reducible
    assert not reducibility_check(corpus_graphs["icosahedron"], 4).reducible


def test_instance_seeds_are_order_independent():
    cfg = FuzzConfig(10, seed=5)
    assert instance_seed(5, 3) == instance_seed(5, 3) != instance_seed(5, 4)
    c = instance_config(cfg, 7)
    assert 4 <= c.n <= 64 and 0 <= c.flips <= 4 * c.n


def test_fuzz_k4(tmp_path):
    r = fuzz(1, nmin=4, nmax=4, seed=0, witness_dir=tmp_path)
    assert r.instances == 1
    for t in r.tallies.values():
        assert t == {"success": 1, "failure": 0, "improper": 0}
    assert r.witness_files == [] and list(tmp_path.iterdir()) == []
    assert r.exact == {"checked": 1, "colorable": 1}


def test_fuzz_small_exact_oracle():
    r = fuzz(1000, nmin=4, nmax=12, seed=11)
    assert r.exact == {"checked": 1000, "colorable": 1000}
    assert r.violations == [] and r.invalid_graphs == 0
    for t in r.tallies.values():
        assert sum(t.values()) == 1000 and t["improper"] == 0


def test_fuzz_reproducible_and_worker_independent(tmp_path):
    a = fuzz(60, nmax=30, seed=3, witness_dir=tmp_path / "a")
    b = fuzz(60, nmax=30, seed=3, witness_dir=tmp_path / "b", workers=2)
    assert a.to_json() == b.to_json()
    names = sorted(p.name for p in (tmp_path / "a").iterdir())
    assert names == a.witness_files
    for name in names:
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
    doc = json.loads(a.to_json(timing=True))
    assert "seconds" in doc and "seconds" not in json.loads(a.to_json())


def test_fuzz_report_strata_and_stages():
    r = fuzz(80, nmax=40, seed=8)
    assert sum(s["instances"] for s in r.strata.values()) == 80
    for algo, t in r.tallies.items():
        assert sum(r.stages.get(algo, {}).values()) == t["success"]
    assert sum(r.chains.values()) == 80


def test_fuzz_rejects_bad_config():
    with pytest.raises(ValueError):
        fuzz(0)
    with pytest.raises(ValueError):
        fuzz(5, algorithms=("nope",))
    with pytest.raises(ValueError):
        fuzz(5, nmin=3)
