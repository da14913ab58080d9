"""Drawings of chains and colorings: Tutte layout, DOT and SVG."""

from __future__ import annotations

from typing import Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.linalg import spsolve

from .coloring.core import COLOR_NAMES
from .planar import PlanarTriangulation
from .spiral import SpiralDecomposition


def tutte_layout(G: PlanarTriangulation) -> np.ndarray:
    """Barycentric coordinates with the outer triangle pinned.

    Returns an ``(n, 2)`` array in the unit box, y pointing down so that the
    stored clockwise rotations appear clockwise on screen.
    """
    n = G.n
    a, b, c = G.outer
    pos = np.zeros((n, 2))
    # a on top, then clockwise on screen: c lower right, b lower left
    pos[a] = (0.5, 0.0)
    pos[c] = (1.0, 0.866)
    pos[b] = (0.0, 0.866)
    fixed = np.zeros(n, dtype=bool)
    fixed[[a, b, c]] = True
    inner = np.flatnonzero(~fixed)
    if inner.size == 0:
        return pos
    index = np.full(n, -1)
    index[inner] = np.arange(inner.size)
    rows, cols, vals = [], [], []
    rhs = np.zeros((inner.size, 2))
    for v in inner:
        i = index[v]
        rows.append(i)
        cols.append(i)
        vals.append(float(len(G.rotation[v])))
        for w in G.rotation[v]:
            if fixed[w]:
                rhs[i] += pos[w]
            else:
                rows.append(i)
                cols.append(index[w])
                vals.append(-1.0)
    L = coo_matrix((vals, (rows, cols)), shape=(inner.size, inner.size)).tocsc()
    sol = spsolve(L, rhs)
    pos[inner] = sol.reshape(inner.size, 2)
    return pos


def _fill(colors, v) -> str:
    if colors is None or not colors[v]:
        return "white"
    return COLOR_NAMES[colors[v]]


def to_dot(G: PlanarTriangulation, d: SpiralDecomposition | None = None,
           colors: Sequence[int] | None = None) -> str:
    """Undirected DOT with pinned Tutte positions; chain edges are bold."""
    pos = tutte_layout(G)
    chain_edges = set()
    starts = set()
    if d is not None:
        for c in d.chains:
            for u, v in zip(c.vertices, c.vertices[1:]):
                chain_edges.add((min(u, v), max(u, v)))
        starts = {s.vertices(d)[0] for s in d.all_segments()}
    lines = ["graph G {", '  node [shape=circle, style=filled, fontsize=10];']
    for v in range(G.n):
        x, y = pos[v] * 400
        shape = ', shape=doublecircle' if v in starts else ''
        lines.append(f'  {v} [pos="{x:.2f},{0.0 - y:.2f}!", fillcolor={_fill(colors, v)}{shape}];')
    for u, v in G.edges():
        style = " [penwidth=3]" if (u, v) in chain_edges else " [color=gray]"
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_svg(G: PlanarTriangulation, d: SpiralDecomposition | None = None,
           colors: Sequence[int] | None = None, size: int = 600) -> str:
    """Standalone SVG: edges in gray, chains as polylines, segment starts as squares."""
    margin = 20
    pos = tutte_layout(G) * (size - 2 * margin) + margin
    r = max(2.0, min(8.0, size / (4 * G.n ** 0.5)))
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">',
           f'<rect width="{size}" height="{size}" fill="white"/>',
           '<g stroke="#bbbbbb" stroke-width="1">']
    for u, v in G.edges():
        (x1, y1), (x2, y2) = pos[u], pos[v]
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}"/>')
    out.append("</g>")
    if d is not None:
        out.append('<g fill="none" stroke="black" stroke-width="2.5">')
        for k, c in enumerate(d.chains):
            pts = " ".join(f"{pos[v][0]:.2f},{pos[v][1]:.2f}" for v in c.vertices)
            out.append(f'<polyline class="chain" data-chain="{k}" points="{pts}"/>')
        out.append("</g>")
        out.append('<g fill="black">')
        for s in d.all_segments():
            x, y = pos[s.vertices(d)[0]]
            h = r * 1.6
            out.append(f'<rect class="segment-start" x="{x - h:.2f}" y="{y - h:.2f}" '
                       f'width="{2 * h:.2f}" height="{2 * h:.2f}"/>')
        out.append("</g>")
    out.append('<g stroke="black" stroke-width="0.8">')
    for v in range(G.n):
        x, y = pos[v]
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{r:.2f}" fill="{_fill(colors, v)}">'
                   f'<title>{v}</title></circle>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
