"""Spiral-chain coloring: segments colored innermost first under safe palettes.

The engine escalates through three stages at an impasse:

1. greedy: the smallest color of the segment's palette missing from the
   colored neighbourhood;
2. c-type switch: when the stuck vertex lies on a corner (c-type) fan, the
   palette changes to one containing a free color for the rest of the segment;
3. Kempe repair (off by default, beyond the published method): one exchange
   of a color pair on already-colored vertices that frees a color; freeing
   the color outside the palette also switches the palette.

If all enabled stages fail, a :class:`FailureWitness` is returned.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from ..planar import PlanarTriangulation, serialize
from ..spiral import (Fan, LadderFan, SpiralDecomposition, SpiralSegment,
                      decomposition_document, extract_spiral_chains)
from .core import COLORS, Coloring, PaletteEntry, _color_list, choose_palette
from .kempe import free_color_by_exchange
from .witness import FailureWitness

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SegmentConflict:
    """A segment vertex whose colored neighbourhood covers the palette."""

    vertex: int
    blocking: tuple[int, ...]
    position: int
    partial: tuple[int, ...]


def _segment_vertices(segment, decomposition) -> tuple[int, ...]:
    if isinstance(segment, SpiralSegment):
        if decomposition is None:
            raise ValueError("a SpiralSegment needs its decomposition")
        return segment.vertices(decomposition)
    return tuple(segment)


def color_segment(G: PlanarTriangulation, segment, palette: Sequence[int], partial,
                  decomposition: SpiralDecomposition | None = None) -> Coloring | SegmentConflict:
    """Color one segment in chain order with the smallest free palette color.

    ``segment`` is a :class:`SpiralSegment` (with ``decomposition``) or a
    plain vertex sequence. Already-colored segment vertices are kept. On the
    first vertex whose colored neighbours use the whole palette, returns a
    :class:`SegmentConflict` carrying the coloring up to that point.
    """
    verts = _segment_vertices(segment, decomposition)
    colors = _color_list(partial, G.n)
    pal = sorted(palette)
    rot = G.rotation
    for i, v in enumerate(verts):
        if colors[v]:
            continue
        used = {colors[w] for w in rot[v]}
        free = [c for c in pal if c not in used]
        if not free:
            return SegmentConflict(v, tuple(sorted(used - {0})), i, tuple(colors))
        colors[v] = free[0]
    if isinstance(partial, Coloring):
        return partial.with_colors(colors)
    return Coloring(tuple(colors), "spiral")


def ctype_switch(partial: Coloring, fan: Fan | LadderFan, old: Sequence[int], new: Sequence[int],
                 segment: int = 0, position: int = 0) -> Coloring:
    """Schedule the uncolored vertices of a c-type fan under ``new``.

    Colors already assigned are left alone; the switch is appended to the
    palette schedule, starting at ``position`` of global segment ``segment``.
    """
    fans = fan.fans if isinstance(fan, LadderFan) else (fan,)
    if not any(f.ctype for f in fans):
        raise ValueError("palette switch requested on a fan that is not c-type")
    if tuple(sorted(old)) == tuple(sorted(new)):
        raise ValueError("old and new palettes coincide")
    verts = set().union(*(f.vertices() for f in fans))
    if all(partial.colors[v] for v in verts):
        return partial
    entry = PaletteEntry(segment, position, tuple(sorted(new)), "c-type")
    return Coloring(partial.colors, partial.algorithm, partial.seed,
                    partial.schedule + (entry,), partial.stages, partial.notes)


def _corner_fan(G: PlanarTriangulation, seg_of, v) -> Fan | None:
    """A corner triangle at ``v`` (all three vertices in one segment), if any."""
    rot = G.rotation[v]
    outer = set(G.outer)
    k = len(rot)
    for i in range(k):
        w, x = rot[i], rot[(i + 1) % k]
        # v, w, x is a face when x follows w clockwise around v
        if seg_of[w] == seg_of[v] == seg_of[x] and not {v, w, x} == outer:
            return Fan(v, "corner", ((v, w, x),))
    return None


def _chord_notes(G: PlanarTriangulation, verts, seg_index) -> list[tuple]:
    """Chord patterns v_i~v_{i+2}~v_{i+4}~v_i inside a segment.

    When the chord v_{i+1}v_{i+3} is present as well the segment would need
    re-cutting and recoloring; the engine only records it.
    """
    out = []
    has = G.has_edge
    for i in range(len(verts) - 4):
        a, b, c, d, e = verts[i:i + 5]
        if has(a, c) and has(c, e) and has(a, e):
            tag = "chord-recolor" if has(b, d) else "chord-fan"
            out.append((tag, seg_index, i))
    return out


def spiral_color(G: PlanarTriangulation, *, ctype_switch: bool = True, kempe_repair: bool = False,
                 decomposition: SpiralDecomposition | None = None,
                 exhaustive: bool = False) -> Coloring | FailureWitness:
    """Color ``G`` segment by segment from the innermost spiral segment outward.

    Palettes follow :func:`choose_palette`, each new segment's palette
    differing from the one in force just before it. ``stages`` in the result
    counts greedy choices, c-type switches and Kempe repairs; ``notes``
    collects segment chord patterns and the vertices recolored by repairs.

    With ``exhaustive=True`` an impasse does not stop the run: the vertex is
    left uncolored, noted as ``("impasse", v)`` and counted under
    ``stages["impasse"]``, and the result is an incomplete coloring. This is
    a measurement mode; the default returns a :class:`FailureWitness`.
    """
    d = decomposition if decomposition is not None else extract_spiral_chains(G)
    segs = list(d.all_segments())
    seg_of = d.segment_index(G.n)
    rot = G.rotation
    colors = [0] * G.n
    schedule: list[PaletteEntry] = []
    stages = {"greedy": 0, "c-type": 0, "kempe": 0}
    if exhaustive:
        stages["impasse"] = 0
    notes: list[tuple] = []
    palette = None
    for k in range(len(segs) - 1, -1, -1):
        verts = segs[k].vertices(d)
        palette = choose_palette(palette)
        schedule.append(PaletteEntry(k, 0, palette))
        notes.extend(_chord_notes(G, verts, k))
        for i, v in enumerate(verts):
            used = {colors[w] for w in rot[v]}
            free = [c for c in palette if c not in used]
            if free:
                colors[v] = free[0]
                stages["greedy"] += 1
                continue
            spare = [c for c in COLORS if c not in used]
            if ctype_switch and spare and _corner_fan(G, seg_of, v) is not None:
                palette = choose_palette(palette, {spare[0]})
                schedule.append(PaletteEntry(k, i, palette, "c-type"))
                colors[v] = spare[0]
                stages["c-type"] += 1
                log.debug("c-type switch at vertex %d to %s", v, palette)
                continue
            if kempe_repair:
                outside = [c for c in COLORS if c not in palette]
                got = free_color_by_exchange(rot, colors, v, list(palette) + outside,
                                             partners=list(palette) + outside)
                if got is not None:
                    c, pair, moved = got
                    if c not in palette:
                        palette = choose_palette(palette, {c})
                        schedule.append(PaletteEntry(k, i, palette, "kempe"))
                    colors[v] = c
                    stages["kempe"] += 1
                    notes.append(("kempe", v, c, pair, len(moved)))
                    log.debug("kempe repair at vertex %d via (%d,%d)", v, c, pair)
                    continue
            if exhaustive:
                stages["impasse"] += 1
                notes.append(("impasse", v))
                continue
            stage = "kempe" if kempe_repair else ("c-type" if ctype_switch else "greedy")
            log.info("spiral coloring stuck at vertex %d (segment %d)", v, k)
            return FailureWitness(
                algorithm="spiral",
                graph_document=serialize(G),
                stuck_vertex=v,
                blocking=tuple(sorted(used - {0})),
                partial=tuple(colors),
                schedule=tuple(schedule),
                decomposition=decomposition_document(G, d),
                options={"ctype_switch": ctype_switch, "kempe_repair": kempe_repair},
                stage=stage,
                trace={"segment": k, "position": i, "stages": stages},
            )
    return Coloring(tuple(colors), "spiral", None, tuple(schedule), stages, tuple(notes))
