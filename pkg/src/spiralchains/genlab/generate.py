"""Random triangulations built natively as rotation systems."""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..planar import PlanarTriangulation

# K4 with vertex 3 inside; the outer face traces clockwise as 0 -> 1 -> 2.
K4_ROTATION = ((1, 3, 2), (2, 3, 0), (0, 3, 1), (0, 1, 2))


@dataclass(frozen=True)
class GenConfig:
    n: int
    seed: int = 0
    flips: int = 0

    def __post_init__(self):
        if self.n < 4:
            raise ValueError("n must be >= 4")
        if self.flips < 0:
            raise ValueError("flips must be >= 0")


class _Builder:
    """Mutable rotation lists with local insert/flip updates."""

    def __init__(self):
        self.rot = [list(r) for r in K4_ROTATION]
        self.outer = (0, 2, 1)
        # interior faces, each traced counterclockwise
        self.faces = [(0, 3, 1), (1, 3, 2), (2, 3, 0)]

    def _insert_after(self, v, anchor, w):
        r = self.rot[v]
        r.insert(r.index(anchor) + 1, w)

    def split_face(self, k: int) -> int:
        u, v, w = self.faces[k]
        x = len(self.rot)
        self._insert_after(v, u, x)
        self._insert_after(w, v, x)
        self._insert_after(u, w, x)
        self.rot.append([v, u, w])
        self.faces[k] = (u, v, x)
        self.faces.append((v, w, x))
        self.faces.append((w, u, x))
        return x

    def is_outer_edge(self, u, v) -> bool:
        return u in self.outer and v in self.outer

    def flip(self, u: int, v: int) -> tuple[int, int] | None:
        """Replace edge uv by the opposite diagonal; None when illegal."""
        if self.is_outer_edge(u, v):
            return None
        rot = self.rot
        rv, ru = rot[v], rot[u]
        w = rv[(rv.index(u) + 1) % len(rv)]
        z = ru[(ru.index(v) + 1) % len(ru)]
        if w == z or z in rot[w]:
            return None
        ru.remove(v)
        rv.remove(u)
        self._insert_after(z, u, w)
        self._insert_after(w, v, z)
        return w, z


def _apply_flips(b: _Builder, rng: random.Random, flips: int):
    edges = [(u, v) for u, r in enumerate(b.rot) for v in r if u < v]
    for _ in range(flips):
        k = rng.randrange(len(edges))
        new = b.flip(*edges[k])
        if new is not None:
            edges[k] = new


def generate_triangulation(config: GenConfig) -> PlanarTriangulation:
    """Stacked triangulation from K4 followed by ``config.flips`` flip attempts.

    Each new vertex goes into an interior face chosen uniformly at random; the
    outer triangle ``(0, 2, 1)`` never changes. Flip attempts pick a uniform
    edge and are skipped when illegal, so ``flips`` counts attempts.
    """
    rng = random.Random(config.seed)
    b = _Builder()
    for _ in range(config.n - 4):
        b.split_face(rng.randrange(len(b.faces)))
    _apply_flips(b, rng, config.flips)
    return PlanarTriangulation(b.rot, b.outer)


def flip_edge(G: PlanarTriangulation, edge: tuple[int, int]) -> PlanarTriangulation | None:
    """Flip an interior edge of ``G``; returns None when the flip is refused.

    Refusal happens for outer-triangle edges, non-edges, and when the opposite
    diagonal already exists (the flip would create a multi-edge).
    """
    u, v = edge
    if not G.has_edge(u, v):
        return None
    b = _Builder.__new__(_Builder)
    b.rot = [list(r) for r in G.rotation]
    b.outer = G.outer
    if b.flip(u, v) is None:
        return None
    return PlanarTriangulation(b.rot, G.outer)
