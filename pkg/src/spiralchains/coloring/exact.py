"""Exact k-coloring by DSatur-style backtracking with forward checking."""

from __future__ import annotations

from dataclasses import dataclass

from ..planar import PlanarTriangulation
from .core import Coloring

DEFAULT_BOUND = 60


@dataclass(frozen=True)
class NoColoring:
    """Exhaustion certificate: the complete search tree had no k-coloring."""

    k: int
    nodes: int

    def __bool__(self):
        return False


def exact_four_color(G: PlanarTriangulation, k: int = 4, bound: int = DEFAULT_BOUND) -> Coloring | NoColoring:
    """Find a proper ``k``-coloring or prove there is none.

    The next vertex is the uncolored one with the fewest remaining colors,
    ties broken by higher degree then lower id; an assignment that empties a
    neighbour's domain is pruned at once. Color symmetry is broken by never
    opening more than one new color at a time.

    Raises
    ------
    ValueError
        If ``G.n`` exceeds ``bound`` or ``k`` is not in 1..4.
    """
    if G.n > bound:
        raise ValueError(f"exact solver refuses n={G.n} above bound {bound}")
    if not 1 <= k <= 4:
        raise ValueError("k must be between 1 and 4")
    n = G.n
    rot = G.rotation
    full = (1 << k) - 1
    domain = [full] * n
    colors = [0] * n
    nodes = 0

    def pick():
        best, key = -1, None
        for v in range(n):
            if not colors[v]:
                kk = (bin(domain[v]).count("1"), -len(rot[v]), v)
                if key is None or kk < key:
                    best, key = v, kk
        return best

    def search(opened: int) -> bool:
        nonlocal nodes
        v = pick()
        if v < 0:
            return True
        for c in range(1, min(opened + 1, k) + 1):
            bit = 1 << (c - 1)
            if not domain[v] & bit:
                continue
            nodes += 1
            changed = []
            ok = True
            for w in rot[v]:
                if not colors[w] and domain[w] & bit:
                    domain[w] &= ~bit
                    changed.append(w)
                    if not domain[w]:
                        ok = False
                        break
            if ok:
                colors[v] = c
                if search(max(opened, c)):
                    return True
                colors[v] = 0
            for w in changed:
                domain[w] |= bit
        return False

    if search(0):
        return Coloring(tuple(colors), "exact", stages={"nodes": nodes, "k": k})
    return NoColoring(k, nodes)
