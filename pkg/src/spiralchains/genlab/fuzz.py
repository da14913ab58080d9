"""Randomized campaigns: generate, color with every engine, verify, record witnesses."""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from ..coloring.core import verify_coloring
from ..coloring.exact import exact_four_color
from ..coloring.kempe import MAX_RESTARTS, MAX_SWITCHES, kempe_kittell_color
from ..coloring.spiral_color import spiral_color
from ..coloring.witness import FailureWitness
from ..planar import validate_triangulation
from ..spiral import extract_spiral_chains
from .generate import GenConfig, generate_triangulation

ALGORITHMS = ("spiral", "spiral-kempe", "kempe-kittell")
EXACT_BOUND = 12


@dataclass(frozen=True)
class FuzzConfig:
    count: int
    nmin: int = 4
    nmax: int = 64
    seed: int = 0
    algorithms: tuple[str, ...] = ALGORITHMS
    exact_bound: int = EXACT_BOUND
    max_flip_factor: int = 4
    kk_restarts: int = MAX_RESTARTS
    kk_switches: int = MAX_SWITCHES

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if not 4 <= self.nmin <= self.nmax:
            raise ValueError("need 4 <= nmin <= nmax")
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown:
            raise ValueError(f"unknown algorithms {sorted(unknown)}")

    def to_dict(self):
        return {"count": self.count, "nmin": self.nmin, "nmax": self.nmax, "seed": self.seed,
                "algorithms": list(self.algorithms), "exact_bound": self.exact_bound,
                "max_flip_factor": self.max_flip_factor,
                "kk_caps": [self.kk_restarts, self.kk_switches]}


def instance_seed(campaign_seed: int, index: int) -> int:
    """Seed of instance ``index``, independent of evaluation order."""
    digest = hashlib.sha256(f"{campaign_seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def instance_config(cfg: FuzzConfig, index: int) -> GenConfig:
    s = instance_seed(cfg.seed, index)
    span = cfg.nmax - cfg.nmin + 1
    n = cfg.nmin + s % span
    flips = (s >> 20) % (cfg.max_flip_factor * n + 1)
    return GenConfig(n, s, flips)


def _highest_stage(stages) -> str:
    for name in ("kempe", "c-type"):
        if stages.get(name):
            return name
    return "greedy"


def run_instance(cfg: FuzzConfig, index: int) -> dict:
    """Evaluate one instance; witnesses are returned, not written."""
    gc = instance_config(cfg, index)
    G = generate_triangulation(gc)
    rep = validate_triangulation(G)
    rec = {"index": index, "n": gc.n, "flips": gc.flips, "valid": rep.ok,
           "min_degree": rep.advisories.get("min_degree"), "results": {}, "witnesses": [],
           "violations": []}
    if "spiral" in cfg.algorithms or "spiral-kempe" in cfg.algorithms:
        d = extract_spiral_chains(G)
        rec["chains"] = len(d.chains)
    for algo in cfg.algorithms:
        if algo == "kempe-kittell":
            out = kempe_kittell_color(G, seed=gc.seed, max_restarts=cfg.kk_restarts,
                                      max_switches=cfg.kk_switches)
        else:
            out = spiral_color(G, kempe_repair=(algo == "spiral-kempe"), decomposition=d)
        if isinstance(out, FailureWitness):
            rec["results"][algo] = {"outcome": "failure", "stage": out.stage}
            rec["witnesses"].append(out.to_json())
            continue
        vr = verify_coloring(G, out)
        rec["results"][algo] = {"outcome": "success" if vr.ok else "improper",
                                "stage": _highest_stage(out.stages)}
        if not vr.ok:
            rec["violations"].append({"index": index, "algorithm": algo,
                                      "violations": [list(v) for v in vr.violations]})
    if gc.n <= cfg.exact_bound:
        ex = exact_four_color(G, bound=cfg.exact_bound)
        rec["exact"] = bool(ex) and verify_coloring(G, ex).ok
    return rec


@dataclass
class FuzzReport:
    config: FuzzConfig
    instances: int = 0
    tallies: dict = field(default_factory=dict)
    stages: dict = field(default_factory=dict)
    strata: dict = field(default_factory=dict)
    chains: dict = field(default_factory=dict)
    exact: dict = field(default_factory=lambda: {"checked": 0, "colorable": 0})
    invalid_graphs: int = 0
    violations: list = field(default_factory=list)
    witness_files: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def improper(self) -> int:
        return len(self.violations)

    def to_dict(self, timing: bool = False) -> dict:
        doc = {
            "config": self.config.to_dict(),
            "instances": self.instances,
            "invalid_graphs": self.invalid_graphs,
            "tallies": self.tallies,
            "stage_activation": self.stages,
            "min_degree_strata": self.strata,
            "chain_counts": self.chains,
            "exact": self.exact,
            "soundness_violations": self.violations,
            "witnesses": sorted(self.witness_files),
        }
        if timing:
            doc["seconds"] = round(self.seconds, 3)
        return doc

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=1) + "\n"


def _absorb(report: FuzzReport, rec: dict):
    report.instances += 1
    report.invalid_graphs += not rec["valid"]
    stratum = report.strata.setdefault(str(rec["min_degree"]), {"instances": 0})
    stratum["instances"] += 1
    if "chains" in rec:
        key = str(rec["chains"])
        report.chains[key] = report.chains.get(key, 0) + 1
    for algo, res in rec["results"].items():
        t = report.tallies.setdefault(algo, {"success": 0, "failure": 0, "improper": 0})
        t[res["outcome"]] += 1
        if res["outcome"] == "success":
            st = report.stages.setdefault(algo, {})
            st[res["stage"]] = st.get(res["stage"], 0) + 1
            stratum[algo] = stratum.get(algo, 0) + 1
    if "exact" in rec:
        report.exact["checked"] += 1
        report.exact["colorable"] += bool(rec["exact"])
    report.violations.extend(rec["violations"])


def fuzz(count: int, nmin: int = 4, nmax: int = 64, seed: int = 0,
         algorithms=ALGORITHMS, witness_dir: str | Path | None = None,
         exact_bound: int = EXACT_BOUND, workers: int = 1, **caps) -> FuzzReport:
    """Run a campaign of ``count`` generated triangulations.

    Instance ``i`` is generated from a seed derived from ``(seed, i)``, with
    ``n`` uniform in ``[nmin, nmax]`` and up to ``4 n`` flip attempts, so
    results do not depend on ``workers``. Every coloring is verified;
    instances with ``n <= exact_bound`` are also solved exactly. Witnesses go
    to ``witness_dir`` (one JSON file per distinct witness, named by content
    hash) when it is given. ``tallies[algo]`` splits the instances into
    success, failure (a witness) and improper (a coloring that failed the
    verifier).
    """
    cfg = FuzzConfig(count, nmin, nmax, seed, tuple(algorithms), exact_bound,
                     kk_restarts=caps.get("max_restarts", MAX_RESTARTS),
                     kk_switches=caps.get("max_switches", MAX_SWITCHES))
    report = FuzzReport(cfg)
    start = time.perf_counter()
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            records = list(pool.map(run_instance, [cfg] * count, range(count), chunksize=64))
    else:
        records = (run_instance(cfg, i) for i in range(count))
    out = Path(witness_dir) if witness_dir is not None else None
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
    names = set()
    for rec in records:
        _absorb(report, rec)
        for text in rec["witnesses"]:
            w = json.loads(text)
            name = f"{w['algorithm']}-{hashlib.sha256(text.encode()).hexdigest()[:16]}.json"
            if name not in names:
                names.add(name)
                if out is not None:
                    (out / name).write_text(text)
    report.witness_files = sorted(names)
    report.seconds = time.perf_counter() - start
    return report
