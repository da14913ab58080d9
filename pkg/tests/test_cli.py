import json

import pytest

from spiralchains.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_color_spiral_errera_pure_then_repaired(capsys, tmp_path):
    code, out, err = run(capsys, "color", "--algo", "spiral", "corpus/errera",
                         "--witness-dir", str(tmp_path))
    assert code == 1
    w = json.loads(out)
    assert w["kind"] == "failure-witness" and "stuck at vertex" in err
    assert len(list(tmp_path.iterdir())) == 1
    code, out, _ = run(capsys, "color", "--algo", "spiral", "--kempe-repair", "corpus/errera")
    doc = json.loads(out)
    assert code == 0 and doc["verified"] is True and len(doc["colors"]) == 17


def test_color_kempe_kittell_prints_default_seed(capsys):
    code, out, err = run(capsys, "color", "--algo", "kempe-kittell", "corpus/kittell")
    assert code == 0 and "seed: 0 (default)" in err
    doc = json.loads(out)
    assert doc["seed"] == 0 and doc["verified"] is True


def test_color_exact(capsys):
    code, out, _ = run(capsys, "color", "--algo", "exact", "--k", "3", "corpus/octahedron")
    assert code == 0 and json.loads(out)["verified"]
    code, out, _ = run(capsys, "color", "--algo", "exact", "--k", "3", "corpus/errera")
    assert code == 1 and json.loads(out)["colorable"] is False


def test_validate_malformed(capsys, tmp_path):
    bad = tmp_path / "bad.rot"
    bad.write_text("n 4\nouter 0 2 1\n0: 1 3 2\n1: 0 x 3\n")
    code, out, _ = run(capsys, "validate", str(bad))
    doc = json.loads(out)
    assert code == 2 and doc["violations"][0]["line"] == 4


def test_validate_invalid_and_valid(capsys, tmp_path):
    bad = tmp_path / "bad.rot"
    bad.write_text("n 4\nouter 0 2 1\n0: 1 2\n1: 0 2 3\n2: 0 3 1\n3: 1 2\n")
    code, out, _ = run(capsys, "validate", str(bad))
    assert code == 2 and "edge-count" in [v["rule"] for v in json.loads(out)["violations"]]
    code, out, _ = run(capsys, "validate", "corpus/kittell")
    assert code == 0 and json.loads(out)["ok"]


def test_missing_input_and_unknown_verb(capsys):
    assert run(capsys, "chains", "/nonexistent.rot")[0] == 2
    assert run(capsys, "chains", "corpus/heawood")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["color", "corpus/k4", "--bogus"])
    assert exc.value.code == 2


def test_chains(capsys):
    code, out, _ = run(capsys, "chains", "corpus/kittell")
    doc = json.loads(out)
    assert code == 0 and doc["chains"][1] == [12] and len(doc["theta_separators"]) == 1


def test_gen_and_verify(capsys, tmp_path):
    g = tmp_path / "g.rot"
    code, _, _ = run(capsys, "gen", "--n", "30", "--flips", "60", "--seed", "4", "--out", str(g))
    assert code == 0 and g.read_text().startswith("n 30\n")
    c = tmp_path / "c.json"
    code, _, _ = run(capsys, "color", "--algo", "kempe-kittell", "--seed", "1", str(g),
                     "--out", str(c))
    assert code == 0
    assert run(capsys, "verify", str(g), str(c))[0] == 0
    doc = json.loads(c.read_text())
    # give vertex 0 the color of its first neighbour
    nb = int(g.read_text().splitlines()[2].split(":")[1].split()[0])
    doc["colors"][0] = doc["colors"][nb]
    c.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(g), str(c))
    assert code == 1 and json.loads(out)["violations"]
    assert run(capsys, "gen", "--n", "3")[0] == 2


def test_fuzz_byte_identical(capsys):
    args = ("fuzz", "--count", "100", "--nmax", "12", "--seed", "1")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0 and out1 == out2
    assert json.loads(out1)["exact"] == {"checked": 100, "colorable": 100}


def test_replay(capsys, tmp_path):
    run(capsys, "color", "corpus/kittell", "--witness-dir", str(tmp_path))
    (w,) = tmp_path.iterdir()
    code, out, err = run(capsys, "replay", str(w))
    assert code == 1 and json.loads(out)["reproduced"] and "reproduced" in err
    doc = json.loads(w.read_text())
    doc["stuck_vertex"] = (doc["stuck_vertex"] + 1) % 23
    w.write_text(json.dumps(doc))
    assert run(capsys, "replay", str(w))[0] == 2


def test_export(capsys):
    code, out, _ = run(capsys, "export", "corpus/icosahedron", "--format", "svg", "--color")
    assert code == 0 and out.startswith("<svg") and "polyline" in out
    code, out, _ = run(capsys, "export", "corpus/icosahedron", "--format", "dot")
    assert code == 0 and out.startswith("graph G {")
