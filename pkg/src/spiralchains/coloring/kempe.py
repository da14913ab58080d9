"""Kempe chains, chain switches and the Kempe-Kittell baseline colorer."""

from __future__ import annotations

import heapq
import logging
import random
from collections import deque
from dataclasses import dataclass
from itertools import permutations

from ..planar import PlanarTriangulation, serialize
from .core import COLORS, Coloring, _color_list
from .witness import FailureWitness

log = logging.getLogger(__name__)

MAX_SWITCHES = 100_000
MAX_RESTARTS = 50


@dataclass(frozen=True)
class KempeChain:
    """Maximal connected ``(a, b)``-component containing ``start``."""

    pair: tuple[int, int]
    vertices: frozenset[int]
    start: int

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.vertices


def _component(rot, colors, start, a, b) -> list[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in rot[u]:
            if w not in seen and colors[w] in (a, b):
                seen.add(w)
                queue.append(w)
    return list(seen)


def _swap(colors, verts, a, b):
    for v in verts:
        colors[v] = b if colors[v] == a else a


def kempe_chain(G: PlanarTriangulation, coloring, start: int, pair: tuple[int, int]) -> KempeChain:
    a, b = pair
    if a == b:
        raise ValueError("Kempe pair needs two distinct colors")
    colors = _color_list(coloring, G.n)
    if colors[start] not in (a, b):
        raise ValueError(f"vertex {start} has color {colors[start]}, not in pair {pair}")
    verts = _component(G.rotation, colors, start, a, b)
    return KempeChain((a, b), frozenset(verts), start)


def kempe_switch(G: PlanarTriangulation, coloring, chain: KempeChain):
    """Exchange the pair's colors on ``chain``.

    The chain is recomputed from its start vertex and rejected unless it is
    exactly that maximal component. Returns the same kind of object that was
    passed in (a :class:`Coloring` or a list).
    """
    a, b = chain.pair
    colors = _color_list(coloring, G.n)
    if colors[chain.start] not in (a, b):
        raise ValueError("chain start is not colored from the chain's pair")
    actual = frozenset(_component(G.rotation, colors, chain.start, a, b))
    if actual != chain.vertices:
        raise ValueError("not a maximal connected Kempe chain of this coloring")
    _swap(colors, chain.vertices, a, b)
    if isinstance(coloring, Coloring):
        return coloring.with_colors(colors)
    return colors


def free_color_by_exchange(rot, colors, v, candidates, partners=COLORS):
    """Try to free a color at ``v`` with one ``(c, d)`` exchange.

    For each ``c`` in ``candidates`` and partner ``d``, the ``(c, d)`` chains
    through the ``c``-colored neighbours of ``v`` are switched together,
    provided none of them reaches a ``d``-colored neighbour. Mutates
    ``colors`` and returns ``(c, d, switched_vertices)`` or None.
    """
    nbrs = rot[v]
    for c in candidates:
        c_nbrs = [w for w in nbrs if colors[w] == c]
        if not c_nbrs:
            return c, None, []
        for d in partners:
            if d == c:
                continue
            targets = {w for w in nbrs if colors[w] == d}
            region: set[int] = set()
            ok = True
            for w in c_nbrs:
                if w in region:
                    continue
                comp = _component(rot, colors, w, c, d)
                if targets.intersection(comp):
                    ok = False
                    break
                region.update(comp)
            if ok:
                _swap(colors, region, c, d)
                return c, d, sorted(region)
    return None


def _proper_at(rot, colors, verts) -> bool:
    return all(colors[w] != colors[u] for u in verts if colors[u] for w in rot[u])


def _double_switch(rot, colors, v):
    """Kempe's simultaneous two-chain argument, checked afterwards.

    For a color ``c`` on exactly two neighbours ``w1, w2`` and distinct
    partners ``d1, d2``, the ``(c, d1)`` chain at ``w1`` and the ``(c, d2)``
    chain at ``w2`` are computed on the same coloring and switched together,
    as in the historical proof. The attempt is kept only if the result is
    proper and frees ``c`` at ``v``.
    """
    nbrs = rot[v]
    for c in COLORS:
        cs = [w for w in nbrs if colors[w] == c]
        if len(cs) != 2:
            continue
        for d1, d2 in permutations([d for d in COLORS if d != c], 2):
            r1 = _component(rot, colors, cs[0], c, d1)
            r2 = _component(rot, colors, cs[1], c, d2)
            if any(colors[w] == d1 for w in r1 if w in nbrs) or \
                    any(colors[w] == d2 for w in r2 if w in nbrs):
                continue
            trial = list(colors)
            _swap(trial, r1, c, d1)
            _swap(trial, r2, c, d2)
            touched = set(r1) | set(r2)
            if all(trial[w] != c for w in nbrs) and _proper_at(rot, trial, touched):
                colors[:] = trial
                return sorted(touched)
    return None


def kempe_order(G: PlanarTriangulation, labels) -> list[int]:
    """Removal order: repeatedly delete the lowest-label vertex of current degree <= 5."""
    rot = G.rotation
    deg = [len(r) for r in rot]
    removed = bytearray(G.n)
    heap = [(labels[v], v) for v in range(G.n) if deg[v] <= 5]
    heapq.heapify(heap)
    order = []
    while heap:
        _, v = heapq.heappop(heap)
        if removed[v]:
            continue
        removed[v] = 1
        order.append(v)
        for w in rot[v]:
            if not removed[w]:
                deg[w] -= 1
                if deg[w] == 5:
                    heapq.heappush(heap, (labels[w], w))
    if len(order) != G.n:
        raise AssertionError("planar graph without a vertex of degree <= 5")
    return order


def kempe_kittell_color(G: PlanarTriangulation, seed: int | None = 0,
                        max_restarts: int = MAX_RESTARTS,
                        max_switches: int = MAX_SWITCHES) -> Coloring | FailureWitness:
    """Kempe's insertion coloring with Kittell's random chain switches.

    Each attempt labels the vertices randomly, builds the removal order,
    colors the last removed vertex red (3) and adds vertices back in reverse.
    An impasse is attacked by a single Kempe exchange, then Kempe's double
    switch, then uniformly random switches (a random colored neighbour and a
    random second color) until a color frees up. ``max_switches`` bounds the
    random switches of one attempt; after it runs out the graph is relabelled,
    up to ``max_restarts`` times.
    """
    if max_restarts < 0 or max_switches < 1:
        raise ValueError("caps must be positive")
    rng = random.Random(seed)
    rot = G.rotation
    n = G.n
    trace = []
    stages = {"greedy": 0, "kempe": 0, "double": 0, "kittell": 0}
    colors: list[int] = []
    stuck = -1
    for attempt in range(max_restarts + 1):
        labels = list(range(n))
        rng.shuffle(labels)
        order = kempe_order(G, labels)
        colors = [0] * n
        switches = 0
        stuck = -1
        for i, v in enumerate(reversed(order)):
            if i == 0:
                colors[v] = 3
                continue
            used = {colors[w] for w in rot[v]}
            free = [c for c in COLORS if c not in used]
            if free:
                colors[v] = free[0]
                stages["greedy"] += 1
                continue
            got = free_color_by_exchange(rot, colors, v, COLORS)
            if got is not None:
                colors[v] = got[0]
                stages["kempe"] += 1
                continue
            if _double_switch(rot, colors, v) is not None:
                colors[v] = min(set(COLORS) - {colors[w] for w in rot[v]})
                stages["double"] += 1
                continue
            nbrs = [w for w in rot[v] if colors[w]]
            while switches < max_switches:
                w = rng.choice(nbrs)
                d = rng.choice([c for c in COLORS if c != colors[w]])
                _swap(colors, _component(rot, colors, w, colors[w], d), colors[w], d)
                switches += 1
                left = set(COLORS) - {colors[x] for x in rot[v]}
                if left:
                    colors[v] = min(left)
                    stages["kittell"] += 1
                    break
            else:
                stuck = v
                break
        trace.append({"attempt": attempt, "switches": switches, "stuck": stuck})
        if stuck < 0:
            return Coloring(tuple(colors), "kempe-kittell", seed,
                            stages={**stages, "restarts": attempt, "switches": switches})
        log.info("kempe-kittell attempt %d stuck at %d after %d switches", attempt, stuck, switches)
    return FailureWitness(
        algorithm="kempe-kittell",
        graph_document=serialize(G),
        stuck_vertex=stuck,
        blocking=tuple(sorted({colors[w] for w in rot[stuck]} - {0})),
        partial=tuple(colors),
        seed=seed,
        options={"max_restarts": max_restarts, "max_switches": max_switches},
        stage="kittell",
        trace={"attempts": trace, "stages": stages},
    )
