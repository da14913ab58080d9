"""Colors, palettes, colorings and the independent verifier."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from ..planar import PlanarTriangulation

COLORS = (1, 2, 3, 4)
COLOR_NAMES = {1: "yellow", 2: "blue", 3: "red", 4: "green"}
PALETTES = tuple(combinations(COLORS, 3))

Palette = tuple[int, int, int]


def choose_palette(previous: Sequence[int] | None, constraints: Iterable[int] = ()) -> Palette:
    """Pick the 3-color palette for the next segment.

    The result differs from ``previous`` (so the two share exactly two
    colors) and contains every color in ``constraints``. Among admissible
    palettes the one leaving out the color farthest from the color
    ``previous`` leaves out is preferred, which makes ``(1, 2, 3)`` and
    ``(2, 3, 4)`` alternate; remaining ties go to the smaller palette.
    """
    need = set(constraints)
    if not need <= set(COLORS) or len(need) > 3:
        raise ValueError(f"infeasible palette constraints {sorted(need)}")
    if previous is None:
        candidates = [p for p in PALETTES if need <= set(p)]
        if not candidates:
            raise ValueError(f"infeasible palette constraints {sorted(need)}")
        return candidates[0]
    prev = tuple(sorted(previous))
    if prev not in PALETTES:
        raise ValueError(f"not a palette: {previous}")
    left_out = (set(COLORS) - set(prev)).pop()
    candidates = [p for p in PALETTES if p != prev and need <= set(p)]
    if not candidates:
        raise ValueError(f"no palette other than {prev} contains {sorted(need)}")

    def rank(p):
        missing = (set(COLORS) - set(p)).pop()
        return -abs(missing - left_out), p

    return min(candidates, key=rank)


@dataclass(frozen=True)
class PaletteEntry:
    """Palette in force from ``position`` of global segment ``segment`` on.

    ``reason`` is ``"segment"`` for the palette chosen when a segment starts,
    ``"c-type"`` for a corner-fan switch and ``"kempe"`` when a stage-3 repair
    freed a color outside the current palette.
    """

    segment: int
    position: int
    palette: Palette
    reason: str = "segment"

    def to_dict(self):
        return {"segment": self.segment, "position": self.position,
                "palette": list(self.palette), "reason": self.reason}

    @classmethod
    def from_dict(cls, d):
        return cls(d["segment"], d["position"], tuple(d["palette"]), d["reason"])


@dataclass(frozen=True)
class Coloring:
    """Vertex colors (``0`` marks an uncolored vertex) plus provenance."""

    colors: tuple[int, ...]
    algorithm: str
    seed: int | None = None
    schedule: tuple[PaletteEntry, ...] = ()
    stages: Mapping[str, int] = field(default_factory=dict)
    notes: tuple = ()

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, v):
        return self.colors[v]

    @property
    def complete(self) -> bool:
        return all(self.colors)

    def used_colors(self) -> set[int]:
        return set(self.colors) - {0}

    def with_colors(self, colors: Sequence[int]) -> "Coloring":
        return replace(self, colors=tuple(colors))

    def to_dict(self, verified: bool | None = None) -> dict:
        doc = {
            "algorithm": self.algorithm,
            "seed": self.seed,
            "palette_schedule": [e.to_dict() for e in self.schedule],
            "colors": list(self.colors),
            "stages": dict(sorted(self.stages.items())),
        }
        if self.notes:
            doc["notes"] = [list(x) if isinstance(x, tuple) else x for x in self.notes]
        if verified is not None:
            doc["verified"] = verified
        return doc

    @classmethod
    def from_dict(cls, d: dict) -> "Coloring":
        return cls(tuple(d["colors"]), d.get("algorithm", "unknown"), d.get("seed"),
                   tuple(PaletteEntry.from_dict(e) for e in d.get("palette_schedule", ())),
                   dict(d.get("stages", {})), tuple(tuple(x) for x in d.get("notes", ())))


def _color_list(coloring, n: int) -> list[int]:
    if isinstance(coloring, Coloring):
        return list(coloring.colors)
    if isinstance(coloring, Mapping):
        return [coloring.get(v, 0) for v in range(n)]
    return list(coloring)


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[tuple, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def verify_coloring(G: PlanarTriangulation, coloring) -> VerificationReport:
    """Check totality, the 4-color range and every edge.

    Accepts a :class:`Coloring`, a vertex-indexed sequence or a mapping.
    Violations are ``("length", got, n)``, ``("uncolored", v)``,
    ``("bad-color", v, c)`` and ``("monochromatic", u, v, c)``; every
    offending vertex and edge is listed.
    """
    colors = _color_list(coloring, G.n)
    out = []
    if len(colors) != G.n:
        out.append(("length", len(colors), G.n))
        colors = (colors + [0] * G.n)[:G.n]
    for v, c in enumerate(colors):
        if c in (0, None):
            out.append(("uncolored", v))
        elif c not in COLORS:
            out.append(("bad-color", v, c))
    for u, v in G.edges():
        if colors[u] and colors[u] == colors[v]:
            out.append(("monochromatic", u, v, colors[u]))
    return VerificationReport(tuple(out))
