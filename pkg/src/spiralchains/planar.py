"""Embedded maximal planar graphs stored as rotation systems.

A :class:`PlanarTriangulation` keeps, for every vertex, the clockwise cyclic
order of its neighbours plus a declared outer triangle. Everything else in the
package (spiral walks, face tracing, rendering) reads the embedding from these
rotations and nothing else.

Face tracing convention: the face following the directed edge ``u -> v`` turns
at ``v`` to the neighbour that comes right after ``u`` in the rotation of
``v``. With clockwise rotations this traces the outer face clockwise and every
interior face counterclockwise.

The outer triangle is declared as ``(a, b, c)`` where the clockwise walk
around it is ``a -> c -> b``; that walk is where every spiral starts. The
traced outer face is therefore ``(a, c, b)``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

__all__ = [
    "DocumentError",
    "Face",
    "PlanarTriangulation",
    "Reduction",
    "RotationSyntaxError",
    "TriangulationError",
    "ValidationReport",
    "Violation",
    "load_rotation_system",
    "reducibility_check",
    "serialize",
    "trace_faces",
    "validate_triangulation",
]


class DocumentError(ValueError):
    """Base class for rotation-system documents that cannot be loaded."""


class RotationSyntaxError(DocumentError):
    """A line of a rotation-system document could not be parsed."""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


class TriangulationError(DocumentError):
    """The document parsed but does not describe a valid triangulation."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        rules = ", ".join(v.rule for v in report.violations)
        super().__init__(f"not a maximal planar embedding ({rules})")


def _canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    if not seq:
        return ()
    k = min(range(len(seq)), key=seq.__getitem__)
    return tuple(seq[k:]) + tuple(seq[:k])


@dataclass(frozen=True, eq=False)
class PlanarTriangulation:
    """Immutable rotation-system embedding.

    Parameters
    ----------
    rotation :
        ``rotation[v]`` lists the neighbours of ``v`` in clockwise order. Each
        cycle is stored starting from its smallest neighbour id.
    outer :
        The outer triangle ``(a, b, c)``; the clockwise walk around it is
        ``a -> c -> b``. Its order is kept exactly as given because the
        spiral walk starts there.

    The constructor normalises but does not validate; use
    :func:`validate_triangulation` or :func:`load_rotation_system`.
    """

    rotation: tuple[tuple[int, ...], ...]
    outer: tuple[int, int, int]

    def __post_init__(self):
        rot = tuple(_canonical_cycle([int(w) for w in r]) for r in self.rotation)
        object.__setattr__(self, "rotation", rot)
        object.__setattr__(self, "outer", tuple(int(x) for x in self.outer))

    @classmethod
    def from_rotations(cls, rotations: Iterable[Sequence[int]],
                       outer: Sequence[int], validate: bool = True) -> "PlanarTriangulation":
        g = cls(tuple(tuple(r) for r in rotations), tuple(outer))
        if validate:
            report = validate_triangulation(g)
            if not report.ok:
                raise TriangulationError(report)
        return g

    def __eq__(self, other):
        if not isinstance(other, PlanarTriangulation):
            return NotImplemented
        return self.rotation == other.rotation and self.outer == other.outer

    def __hash__(self):
        return hash((self.rotation, self.outer))

    def __repr__(self):
        return f"PlanarTriangulation(n={self.n}, e={self.num_edges}, outer={self.outer})"

    @property
    def n(self) -> int:
        return len(self.rotation)

    @cached_property
    def num_edges(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotation[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rotation[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Undirected edges as ``(u, v)`` with ``u < v``."""
        for u, r in enumerate(self.rotation):
            for v in r:
                if u < v:
                    yield u, v

    def successor(self, v: int, u: int) -> int:
        """Neighbour of ``v`` immediately clockwise after ``u``."""
        r = self.rotation[v]
        return r[(r.index(u) + 1) % len(r)]

    def predecessor(self, v: int, u: int) -> int:
        r = self.rotation[v]
        return r[r.index(u) - 1]

    def face_of(self, u: int, v: int) -> tuple[int, int, int]:
        """The triangle traced from the directed edge ``u -> v``."""
        return u, v, self.successor(v, u)


@dataclass(frozen=True)
class Face:
    vertices: tuple[int, ...]

    def __len__(self):
        return len(self.vertices)

    def key(self) -> tuple[int, ...]:
        """Rotation-invariant, orientation-preserving identity."""
        return _canonical_cycle(self.vertices)


@dataclass(frozen=True)
class Violation:
    rule: str
    items: tuple = ()


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()
    advisories: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def rules(self) -> list[str]:
        return [v.rule for v in self.violations]

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [{"rule": v.rule, "items": [list(i) if isinstance(i, tuple) else i
                                                       for i in v.items]}
                           for v in self.violations],
            "advisories": dict(self.advisories),
        }


def trace_faces(G: PlanarTriangulation) -> list[Face]:
    """Trace every face boundary of the rotation system.

    Each directed edge is used exactly once. Requires symmetric, simple
    rotations; raises ``ValueError`` otherwise.
    """
    rot = G.rotation
    offsets = [0] * (G.n + 1)
    for v, r in enumerate(rot):
        offsets[v + 1] = offsets[v] + len(r)
    used = bytearray(offsets[-1])
    faces = []
    for u0 in range(G.n):
        for i0 in range(len(rot[u0])):
            if used[offsets[u0] + i0]:
                continue
            boundary = []
            u, i = u0, i0
            while not used[offsets[u] + i]:
                used[offsets[u] + i] = 1
                boundary.append(u)
                v = rot[u][i]
                rv = rot[v]
                try:
                    j = rv.index(u)
                except ValueError:
                    raise ValueError(f"rotation of {v} does not contain {u}") from None
                u, i = v, (j + 1) % len(rv)
            if (u, i) != (u0, i0):
                raise ValueError("face tracing did not close; rotations are not a permutation")
            faces.append(Face(tuple(boundary)))
    return faces


def _separating_triangles(G: PlanarTriangulation, face_keys: set) -> int:
    count = 0
    rot = G.rotation
    for u in range(G.n):
        nu = set(rot[u])
        for v in rot[u]:
            if v <= u:
                continue
            for w in rot[v]:
                if w > v and w in nu:
                    tri = {(u, v, w), (v, w, u), (w, u, v), (u, w, v), (w, v, u), (v, u, w)}
                    if not tri & face_keys:
                        count += 1
    return count


def validate_triangulation(G: PlanarTriangulation) -> ValidationReport:
    """Check every triangulation invariant; failures are returned, not raised."""
    n = G.n
    rot = G.rotation
    out: list[Violation] = []

    if n < 4:
        out.append(Violation("vertex-count", (n,)))
        return ValidationReport(tuple(out))

    bad_range = [(v, w) for v, r in enumerate(rot) for w in r if not 0 <= w < n]
    if bad_range:
        out.append(Violation("vertex-range", tuple(bad_range)))
        return ValidationReport(tuple(out))

    loops = [v for v, r in enumerate(rot) if v in r]
    if loops:
        out.append(Violation("self-loop", tuple(loops)))
    repeated = [v for v, r in enumerate(rot) if len(set(r)) != len(r)]
    if repeated:
        out.append(Violation("repeated-neighbor", tuple(repeated)))
    asym = [(v, w) for v, r in enumerate(rot) for w in r if v not in rot[w]]
    if asym:
        out.append(Violation("asymmetric", tuple(asym)))

    if len(G.outer) != 3 or len(set(G.outer)) != 3 or not all(0 <= x < n for x in G.outer):
        out.append(Violation("outer-shape", tuple(G.outer)))

    e = sum(len(r) for r in rot)
    if e % 2 or e // 2 != 3 * n - 6:
        out.append(Violation("edge-count", (e / 2, 3 * n - 6)))

    seen = bytearray(n)
    stack = [0]
    seen[0] = 1
    while stack:
        v = stack.pop()
        for w in rot[v]:
            if not seen[w]:
                seen[w] = 1
                stack.append(w)
    if not all(seen):
        out.append(Violation("connectivity", tuple(v for v in range(n) if not seen[v])))

    advisories: dict = {"min_degree": min(len(r) for r in rot),
                        "low_degree_vertices": sum(1 for r in rot if len(r) <= 4)}

    if loops or repeated or asym:
        return ValidationReport(tuple(out), advisories)

    faces = trace_faces(G)
    bad_faces = [f.vertices for f in faces if len(f) != 3]
    if bad_faces:
        out.append(Violation("face-size", tuple(bad_faces[:10])))
    if len(faces) != 2 * n - 4:
        out.append(Violation("face-count", (len(faces), 2 * n - 4)))
    keys = {f.key() for f in faces}
    a, b, c = G.outer if len(G.outer) == 3 else (0, 0, 0)
    if not any(x.rule == "outer-shape" for x in out) and _canonical_cycle((a, c, b)) not in keys:
        out.append(Violation("outer-face", tuple(G.outer)))
    if not out and n <= 5000:
        advisories["separating_triangles"] = _separating_triangles(
            G, {f.vertices for f in faces})
    return ValidationReport(tuple(out), advisories)


def load_rotation_system(text: str) -> PlanarTriangulation:
    """Parse a rotation-system document and validate it.

    Raises :class:`RotationSyntaxError` (with a line number) on malformed text
    and :class:`TriangulationError` when the embedding is not a triangulation.
    """
    n = None
    outer = None
    rotations: dict[int, tuple[int, ...]] = {}
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "n":
                raise RotationSyntaxError(lineno, "expected 'n <count>'")
            n = _parse_int(parts[1], lineno)
            if n < 1:
                raise RotationSyntaxError(lineno, "vertex count must be positive")
            continue
        if outer is None:
            parts = line.split()
            if len(parts) != 4 or parts[0] != "outer":
                raise RotationSyntaxError(lineno, "expected 'outer <a> <b> <c>'")
            outer = tuple(_parse_int(p, lineno) for p in parts[1:])
            for x in outer:
                if not 0 <= x < n:
                    raise RotationSyntaxError(lineno, f"outer vertex {x} out of range")
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise RotationSyntaxError(lineno, "expected '<v>: <w1> <w2> ...'")
        v = _parse_int(head.strip(), lineno)
        if not 0 <= v < n:
            raise RotationSyntaxError(lineno, f"vertex {v} out of range [0, {n})")
        if v in rotations:
            raise RotationSyntaxError(lineno, f"duplicate rotation for vertex {v}")
        nbrs = tuple(_parse_int(t, lineno) for t in tail.split())
        for w in nbrs:
            if not 0 <= w < n:
                raise RotationSyntaxError(lineno, f"neighbour {w} out of range [0, {n})")
        rotations[v] = nbrs
    if n is None:
        raise RotationSyntaxError(last_line + 1, "missing 'n <count>' header")
    if outer is None:
        raise RotationSyntaxError(last_line + 1, "missing 'outer <a> <b> <c>' line")
    missing = [v for v in range(n) if v not in rotations]
    if missing:
        raise RotationSyntaxError(last_line + 1, f"missing rotation for vertex {missing[0]}")
    return PlanarTriangulation.from_rotations([rotations[v] for v in range(n)], outer)


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise RotationSyntaxError(lineno, f"not an integer: {tok!r}") from None


def serialize(G: PlanarTriangulation) -> str:
    """Canonical document: ascending vertex ids, rotations from the smallest id."""
    lines = [f"n {G.n}", "outer {} {} {}".format(*G.outer)]
    lines.extend(f"{v}: " + " ".join(map(str, r)) for v, r in enumerate(G.rotation))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Reduction:
    """Outcome of repeatedly deleting vertices of small current degree.

    ``order`` is the removal order (complete on success, the prefix that
    could be removed otherwise). On refusal ``residual`` holds the stuck
    vertices and ``residual_min_degree`` their minimum degree.
    """

    reducible: bool
    bound: int
    order: tuple[int, ...]
    residual: tuple[int, ...] = ()
    residual_min_degree: int | None = None


def reducibility_check(G: PlanarTriangulation, n_bound: int) -> Reduction:
    """Try to empty ``G`` by deleting vertices of current degree <= ``n_bound``.

    Among the eligible vertices the smallest id is removed first.
    """
    if n_bound < 1:
        raise ValueError("n_bound must be >= 1")
    deg = [len(r) for r in G.rotation]
    removed = bytearray(G.n)
    heap = [v for v in range(G.n) if deg[v] <= n_bound]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        if removed[v]:
            continue
        removed[v] = 1
        order.append(v)
        for w in G.rotation[v]:
            if not removed[w]:
                deg[w] -= 1
                if deg[w] == n_bound:
                    heapq.heappush(heap, w)
    if len(order) == G.n:
        return Reduction(True, n_bound, tuple(order))
    residual = tuple(v for v in range(G.n) if not removed[v])
    return Reduction(False, n_bound, tuple(order), residual, min(deg[v] for v in residual))
