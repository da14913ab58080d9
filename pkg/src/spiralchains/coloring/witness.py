"""Replayable records of coloring impasses."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any

from .core import PaletteEntry


@dataclass(frozen=True)
class FailureWitness:
    """Everything needed to rerun an engine into the same impasse.

    ``graph_document`` is the canonical rotation-system text, so a witness
    file is self-contained.
    """

    algorithm: str
    graph_document: str
    stuck_vertex: int
    blocking: tuple[int, ...]
    partial: tuple[int, ...]
    schedule: tuple[PaletteEntry, ...] = ()
    decomposition: dict | None = None
    seed: int | None = None
    options: dict = field(default_factory=dict)
    stage: str = ""
    trace: dict = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": "failure-witness",
            "algorithm": self.algorithm,
            "seed": self.seed,
            "options": dict(sorted(self.options.items())),
            "stage": self.stage,
            "stuck_vertex": self.stuck_vertex,
            "blocking_colors": list(self.blocking),
            "palette_schedule": [e.to_dict() for e in self.schedule],
            "partial_coloring": list(self.partial),
            "decomposition": self.decomposition,
            "trace": self.trace,
            "graph_document": self.graph_document,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FailureWitness":
        if d.get("kind") != "failure-witness":
            raise ValueError("not a failure witness document")
        return cls(
            algorithm=d["algorithm"],
            graph_document=d["graph_document"],
            stuck_vertex=d["stuck_vertex"],
            blocking=tuple(d["blocking_colors"]),
            partial=tuple(d["partial_coloring"]),
            schedule=tuple(PaletteEntry.from_dict(e) for e in d.get("palette_schedule", ())),
            decomposition=d.get("decomposition"),
            seed=d.get("seed"),
            options=dict(d.get("options", {})),
            stage=d.get("stage", ""),
            trace=dict(d.get("trace", {})),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "FailureWitness":
        return cls.from_dict(json.loads(text))

    def content_hash(self) -> str:
        return hashlib.sha256(self.to_json().encode()).hexdigest()[:16]

    def same_impasse(self, other: "FailureWitness") -> bool:
        return (self.algorithm == other.algorithm
                and self.stuck_vertex == other.stuck_vertex
                and self.blocking == other.blocking
                and self.partial == other.partial)


@dataclass(frozen=True)
class ReplayResult:
    reproduced: bool
    outcome: Any  # Coloring or FailureWitness from the rerun


def replay_witness(witness: FailureWitness) -> ReplayResult:
    """Rerun the recorded engine on the embedded graph and compare impasses."""
    from ..planar import load_rotation_system
    from .kempe import kempe_kittell_color
    from .spiral_color import spiral_color

    G = load_rotation_system(witness.graph_document)
    opts = witness.options
    if witness.algorithm == "spiral":
        outcome = spiral_color(G, ctype_switch=opts.get("ctype_switch", True),
                               kempe_repair=opts.get("kempe_repair", False))
    elif witness.algorithm == "kempe-kittell":
        outcome = kempe_kittell_color(G, seed=witness.seed,
                                      max_restarts=opts["max_restarts"],
                                      max_switches=opts["max_switches"])
    else:
        raise ValueError(f"cannot replay algorithm {witness.algorithm!r}")
    ok = isinstance(outcome, FailureWitness) and outcome.same_impasse(witness)
    return ReplayResult(ok, outcome)
