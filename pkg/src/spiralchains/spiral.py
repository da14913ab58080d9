"""Spiral chains, full-revolution segments and the fan structures between them.

The walk starts on the outer triangle ``(a, b, c)``: it goes ``a -> c -> b``
and then, from a current vertex ``u`` entered from ``p``, moves to the first
unvisited neighbour of ``u`` met when scanning the rotation of ``u``
clockwise from just after ``p``. When the tail has no unvisited neighbour the
walk backs up through the visited vertices (most recent first) to the first
one that still has an unvisited neighbour and starts a new chain there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .planar import PlanarTriangulation

__all__ = [
    "Fan",
    "LadderFan",
    "SpiralChain",
    "SpiralDecomposition",
    "SpiralSegment",
    "ThetaSeparator",
    "decomposition_document",
    "detect_theta_separator",
    "extract_spiral_chains",
    "fan_decomposition",
    "is_revolution_boundary",
    "ladder_fan_between",
    "segment_chain",
]


@dataclass(frozen=True)
class SpiralChain:
    vertices: tuple[int, ...]

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]


@dataclass(frozen=True)
class SpiralSegment:
    """Positions ``start..end`` (inclusive, 0-based) of chain ``chain``."""

    chain: int
    start: int
    end: int

    def __len__(self):
        return self.end - self.start + 1

    def vertices(self, d: "SpiralDecomposition") -> tuple[int, ...]:
        return d.chains[self.chain].vertices[self.start:self.end + 1]


@dataclass(frozen=True)
class SpiralDecomposition:
    """Chains ordered outermost first, each split into segments.

    ``steps`` counts the rotation entries examined during extraction.
    ``parents[k]`` is the already-visited vertex from which chain ``k`` was
    entered (``None`` for the first chain).
    """

    chains: tuple[SpiralChain, ...]
    segments: tuple[tuple[SpiralSegment, ...], ...]
    parents: tuple[int | None, ...] = ()
    steps: int = field(default=0, compare=False)

    def all_segments(self) -> Iterator[SpiralSegment]:
        for segs in self.segments:
            yield from segs

    def vertex_order(self) -> list[int]:
        return [v for c in self.chains for v in c.vertices]

    def segment_index(self, n: int) -> list[int]:
        """Global segment number (outermost first) for every vertex."""
        index = [-1] * n
        for k, seg in enumerate(self.all_segments()):
            for v in seg.vertices(self):
                index[v] = k
        return index

    def chain_position(self, n: int) -> tuple[list[int], list[int]]:
        chain_of = [-1] * n
        pos = [-1] * n
        for ci, c in enumerate(self.chains):
            for i, v in enumerate(c.vertices):
                chain_of[v] = ci
                pos[v] = i
        return chain_of, pos


def extract_spiral_chains(G: PlanarTriangulation) -> SpiralDecomposition:
    """Decompose ``V(G)`` into vertex-disjoint spiral chains and segment them.

    Runs in O(n + e): every vertex keeps a rotation cursor that only moves
    forward, so each rotation entry is examined at most once.
    """
    n = G.n
    rot = G.rotation
    a, b, c = G.outer
    visited = bytearray(n)
    # cursor[v]: offset (relative to start[v]) of the next rotation entry to examine
    start = [0] * n
    cursor = [0] * n
    steps = 0

    def enter(v, p):
        visited[v] = 1
        start[v] = rot[v].index(p) + 1
        cursor[v] = 0

    def next_unvisited(u):
        nonlocal steps
        r = rot[u]
        d = len(r)
        k = cursor[u]
        s = start[u]
        while k < d:
            w = r[(s + k) % d]
            steps += 1
            if not visited[w]:
                cursor[u] = k
                return w
            k += 1
        cursor[u] = d
        return None

    chains = []
    parents: list[int | None] = [None]
    current = [a, c, b]
    visited[a] = 1
    start[a] = rot[a].index(c)
    enter(c, a)
    enter(b, c)
    stack = [a, c, b]
    u = b
    remaining = n - 3
    while remaining:
        w = next_unvisited(u)
        if w is not None:
            enter(w, u)
            current.append(w)
            stack.append(w)
            remaining -= 1
            u = w
            continue
        chains.append(SpiralChain(tuple(current)))
        while True:
            t = stack[-1]
            w = next_unvisited(t)
            if w is not None:
                break
            stack.pop()
        enter(w, t)
        parents.append(t)
        current = [w]
        stack.append(w)
        remaining -= 1
        u = w
    chains.append(SpiralChain(tuple(current)))
    segments = tuple(tuple(segment_chain(G, ch, k)) for k, ch in enumerate(chains))
    return SpiralDecomposition(tuple(chains), segments, tuple(parents), steps)


def is_revolution_boundary(G: PlanarTriangulation, chain: Sequence[int], i: int, j: int) -> bool:
    """Full-revolution predicate for positions ``i < j`` of ``chain``.

    ``chain[j]`` is adjacent to ``chain[i]`` but not to ``chain[i+1]``. The
    trivial case ``j == i + 1`` is excluded.
    """
    if j <= i + 1:
        return False
    return G.has_edge(chain[j], chain[i]) and not G.has_edge(chain[j], chain[i + 1])


def segment_chain(G: PlanarTriangulation, chain: SpiralChain | Sequence[int],
                  chain_index: int = 0) -> list[SpiralSegment]:
    """Cut a chain into full-revolution segments.

    From the current start ``i`` the segment ends at the largest ``j`` whose
    vertex is adjacent to ``chain[i]`` and not to ``chain[i+1]``. When no such
    ``j`` exists the rest of the chain forms the closing segment.
    """
    verts = tuple(chain)
    m = len(verts)
    pos = {v: k for k, v in enumerate(verts)}
    segs = []
    i = 0
    while i < m:
        if i + 1 >= m:
            segs.append(SpiralSegment(chain_index, i, m - 1))
            break
        nxt = verts[i + 1]
        best = -1
        for w in G.rotation[verts[i]]:
            j = pos.get(w, -1)
            if j > i + 1 and j > best and not G.has_edge(w, nxt):
                best = j
        if best < 0:
            segs.append(SpiralSegment(chain_index, i, m - 1))
            break
        segs.append(SpiralSegment(chain_index, i, best))
        i = best + 1
    return segs


@dataclass(frozen=True)
class Fan:
    """Triangles sharing one apex.

    ``side`` is ``"upper"`` (apex on the outer line), ``"lower"`` (apex on the
    inner line), ``"corner"`` (all vertices on one line, a c-type fan) or
    ``"junction"`` (a triangle reaching a third segment).
    """

    apex: int
    side: str
    triangles: tuple[tuple[int, int, int], ...]

    @property
    def ctype(self) -> bool:
        return self.side == "corner"

    def vertices(self) -> set[int]:
        return {v for t in self.triangles for v in t}


@dataclass(frozen=True)
class LadderFan:
    """Strip of fans between an outer segment (upper line) and an inner one.

    ``outerplanar`` records whether the subgraph of ``G`` induced on both
    segments has every vertex on a single face of the inherited embedding.
    """

    upper: tuple[int, ...]
    lower: tuple[int, ...]
    fans: tuple[Fan, ...]
    outerplanar: bool
    key: tuple[int, int] = (-1, -1)

    @property
    def triangles(self) -> list[tuple[int, int, int]]:
        return [t for f in self.fans for t in f.triangles]

    @property
    def ctype_flags(self) -> list[bool]:
        return [f.ctype for f in self.fans]

    def vertices(self) -> set[int]:
        return {v for t in self.triangles for v in t}

    def edges(self) -> set[tuple[int, int]]:
        """Edges of the union of the fans' triangles."""
        out = set()
        for t in self.triangles:
            for i in range(3):
                u, v = t[i], t[(i + 1) % 3]
                out.add((u, v) if u < v else (v, u))
        return out


@dataclass(frozen=True)
class ThetaSeparator:
    """Three internally vertex-disjoint paths joining ``branches``.

    ``blocked`` is the pair (tail of the terminated chain, head of the next
    chain) that the separator keeps apart.
    """

    branches: tuple[int, int]
    paths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    blocked: tuple[int, int]


def _canon(t):
    k = min(range(3), key=t.__getitem__)
    return t[k:] + t[:k]


class _Frame:
    """Per-vertex segment/chain lookups shared by the fan builders."""

    def __init__(self, G: PlanarTriangulation, d: SpiralDecomposition):
        self.G = G
        self.d = d
        self.seg = d.segment_index(G.n)
        self.chain_of, self.pos = d.chain_position(G.n)
        self.nseg = sum(len(s) for s in d.segments)
        a, b, c = G.outer
        self.outer_face = _canon((a, c, b))

    def chain_edges(self, t):
        """Directed chain edges ``x -> y`` (consecutive chain vertices) inside ``t``."""
        out = []
        for x in t:
            for y in t:
                if (x != y and self.chain_of[x] == self.chain_of[y]
                        and self.pos[y] == self.pos[x] + 1):
                    out.append((x, y))
        return out

    def corner_side(self, t) -> str | None:
        """``"outer"`` or ``"inner"`` for a triangle on a chain edge, else None.

        The face traced forward along a chain edge lies on the outer (already
        walked) side of the spiral.
        """
        edges = self.chain_edges(t)
        if not edges:
            return None
        x, y = edges[0]
        return "outer" if _canon(self.G.face_of(x, y)) == _canon(t) else "inner"


def _interior_faces(G: PlanarTriangulation, verts, outer_face):
    """Triangles of ``G`` incident to ``verts`` (deduplicated, outer face excluded)."""
    seen = set()
    out = []
    for v in verts:
        for w in G.rotation[v]:
            t = _canon(G.face_of(v, w))
            if t not in seen and t != outer_face:
                seen.add(t)
                out.append(t)
    return out


def _is_outerplane(G: PlanarTriangulation, verts: set[int]) -> bool:
    """All vertices of the induced subgraph lie on one face of the inherited embedding."""
    rot = {v: tuple(w for w in G.rotation[v] if w in verts) for v in verts}
    if any(not r for r in rot.values()):
        return len(verts) == 1
    used = set()
    for u0 in sorted(verts):
        for v0 in rot[u0]:
            if (u0, v0) in used:
                continue
            on_face = set()
            u, v = u0, v0
            while (u, v) not in used:
                used.add((u, v))
                on_face.add(u)
                rv = rot[v]
                u, v = v, rv[(rv.index(u) + 1) % len(rv)]
            if on_face == verts:
                return True
    return False


def _build_ladder(frame: _Frame, upper: Sequence[int], lower: Sequence[int],
                  faces, key=(-1, -1)) -> LadderFan:
    up, low = set(upper), set(lower)
    pos = frame.pos

    def tag(v):
        return "u" if v in up else ("l" if v in low else "x")

    groups: dict[tuple[str, int], list] = {}
    for t in faces:
        tags = [tag(v) for v in t]
        if "x" in tags:
            side = "junction"
            xs = [v for v, g in zip(t, tags) if g == "x"]
            apex = xs[0] if len(xs) == 1 else min(t)
        elif tags.count("u") == 3 or tags.count("l") == 3:
            side = "corner"
            apex = sorted(t, key=lambda v: pos[v])[1]
            groups.setdefault((side, apex, t), []).append(t)
            continue
        elif tags.count("u") == 1:
            side = "upper"
            apex = t[tags.index("u")]
        else:
            side = "lower"
            apex = t[tags.index("l")]
        groups.setdefault((side, apex), []).append(t)

    def base_key(item):
        (side, apex, *_), tris = item
        return (pos[apex], side, min(min(pos[v] for v in t if v != apex) for t in tris))

    fans = []
    for (side, apex, *_), tris in sorted(groups.items(), key=base_key):
        tris.sort(key=lambda t: sorted(pos[v] for v in t if v != apex))
        fans.append(Fan(apex, side, tuple(tris)))
    outerplanar = _is_outerplane(frame.G, up | low)
    return LadderFan(tuple(upper), tuple(lower), tuple(fans), outerplanar, key)


def ladder_fan_between(G: PlanarTriangulation, d: SpiralDecomposition,
                       inner: SpiralSegment, outer: SpiralSegment) -> LadderFan:
    """Fans between two consecutive segments, ``outer`` surrounding ``inner``.

    Takes every face whose vertices all lie on the two segments and that sits
    in the strip between them: triangles touching both lines, plus corner
    triangles lying on the inner side of the outer line or the outer side of
    the inner line (the c-type fans).
    """
    frame = _Frame(G, d)
    upper = outer.vertices(d)
    lower = inner.vertices(d)
    up, low = set(upper), set(lower)
    faces = []
    for t in _interior_faces(G, upper + lower, frame.outer_face):
        if not all(v in up or v in low for v in t):
            continue
        n_up = sum(v in up for v in t)
        if 0 < n_up < 3:
            faces.append(t)
            continue
        side = frame.corner_side(t)
        if n_up == 3 and side in ("inner", None):
            faces.append(t)
        elif n_up == 0 and side == "outer":
            faces.append(t)
    return _build_ladder(frame, upper, lower, faces)


def _face_owner(frame: _Frame, t) -> tuple[int, int]:
    segs = sorted({frame.seg[v] for v in t})
    if len(segs) > 1:
        return segs[0], segs[-1]
    s = segs[0]
    side = frame.corner_side(t)
    prefer = (s - 1, s) if side == "outer" else (s, s + 1)
    other = (s, s + 1) if side == "outer" else (s - 1, s)
    for a, b in (prefer, other):
        if 0 <= a and b < frame.nseg:
            return a, b
    return s, s


def fan_decomposition(G: PlanarTriangulation, d: SpiralDecomposition) -> list[LadderFan]:
    """Partition the interior faces of ``G`` into ladder fans.

    Each face goes to the segment pair it spans (outermost and innermost of
    its segments); faces on a single segment go to the neighbouring segment
    on whichever side of the chain they lie. Ladders are returned innermost
    first, i.e. in coloring order.
    """
    frame = _Frame(G, d)
    segs = list(d.all_segments())
    by_owner: dict[tuple[int, int], list] = {}
    for t in _interior_faces(G, range(G.n), frame.outer_face):
        by_owner.setdefault(_face_owner(frame, t), []).append(t)
    ladders = []
    for key in sorted(by_owner, key=lambda k: (-k[1], -k[0])):
        s, t = key
        ladders.append(_build_ladder(frame, segs[s].vertices(d), segs[t].vertices(d),
                                     by_owner[key], key))
    return ladders


def _disjoint_paths(G: PlanarTriangulation, src: int, dst: int, banned: set[int], k: int):
    """Up to ``k`` internally vertex-disjoint src-dst paths avoiding ``banned``.

    Unit-capacity max flow on the vertex-split graph (``2v`` in, ``2v+1`` out)
    with BFS augmenting paths.
    """
    cap: dict[int, dict[int, int]] = {}

    def arc(a, b, c):
        cap.setdefault(a, {})[b] = cap.get(a, {}).get(b, 0) + c
        cap.setdefault(b, {}).setdefault(a, 0)

    for v in range(G.n):
        if v in banned:
            continue
        arc(2 * v, 2 * v + 1, k if v in (src, dst) else 1)
        for w in G.rotation[v]:
            if w not in banned:
                arc(2 * v + 1, 2 * w, 1)
    source, sink = 2 * src + 1, 2 * dst
    found = 0
    while found < k:
        prev = {source: source}
        queue = [source]
        for a in queue:
            if a == sink:
                break
            for b, c in cap[a].items():
                if c > 0 and b not in prev:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while b != source:
            a = prev[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        found += 1
    # saturated out->in arcs carry the flow
    nxt: dict[int, list[int]] = {}
    for v in range(G.n):
        for w in G.rotation[v]:
            if v in banned or w in banned:
                continue
            if cap[2 * w].get(2 * v + 1, 0) > 0 and cap[2 * v + 1][2 * w] == 0:
                nxt.setdefault(v, []).append(w)
    paths = []
    for first in nxt.get(src, []):
        path = [src, first]
        while path[-1] != dst:
            path.append(nxt[path[-1]][0])
        paths.append(tuple(path))
    return paths


def detect_theta_separator(G: PlanarTriangulation, d: SpiralDecomposition,
                           chain_index: int) -> ThetaSeparator | None:
    """Theta subgraph keeping chain ``chain_index`` apart from the next chain.

    Branch vertices are the tail ``x`` of the chain and the head ``y`` of the
    next one (never adjacent: the chain stopped because ``x`` had no unvisited
    neighbour). One path runs back along the visited chain to the vertex the
    next chain was entered from, the other two come from a disjoint-path
    search. Returns None when there is no next chain.
    """
    if chain_index + 1 >= len(d.chains):
        return None
    chain = d.chains[chain_index].vertices
    x = chain[-1]
    y = d.chains[chain_index + 1].vertices[0]
    parent = d.parents[chain_index + 1] if len(d.parents) > chain_index + 1 else None
    paths = []
    if parent is not None and parent in chain:
        back = chain[chain.index(parent):][::-1] + (y,)
        others = _disjoint_paths(G, x, y, set(back[1:-1]), 2)
        if len(others) == 2:
            paths = [back] + others
    if len(paths) != 3:
        paths = _disjoint_paths(G, x, y, set(), 3)
    if len(paths) != 3:
        return None
    paths.sort(key=lambda p: (len(p), p))
    return ThetaSeparator((x, y), tuple(paths), (x, y))


def decomposition_document(G: PlanarTriangulation, d: SpiralDecomposition,
                           thetas: bool | None = None) -> dict:
    """JSON-ready description of chains, segments and theta separators.

    Theta separators cost a flow computation per chain break and are left out
    by default above 5000 vertices.
    """
    if thetas is None:
        thetas = G.n <= 5000
    doc = {
        "n": G.n,
        "chains": [list(c.vertices) for c in d.chains],
        "segments": [[s.chain, s.start, s.end] for s in d.all_segments()],
        "steps": d.steps,
    }
    if thetas:
        out = []
        for k in range(len(d.chains) - 1):
            th = detect_theta_separator(G, d, k)
            if th is not None:
                out.append({"chain": k, "branches": list(th.branches),
                            "blocked": list(th.blocked),
                            "paths": [list(p) for p in th.paths]})
        doc["theta_separators"] = out
    return doc
