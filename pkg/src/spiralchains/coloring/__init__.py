"""Coloring engines, palettes, Kempe machinery and the independent verifier."""

from .core import (COLOR_NAMES, COLORS, PALETTES, Coloring, PaletteEntry, VerificationReport,
                   choose_palette, verify_coloring)
from .exact import NoColoring, exact_four_color
from .kempe import KempeChain, kempe_chain, kempe_kittell_color, kempe_order, kempe_switch
from .spiral_color import SegmentConflict, color_segment, ctype_switch, spiral_color
from .witness import FailureWitness, ReplayResult, replay_witness

__all__ = [
    "COLORS", "COLOR_NAMES", "PALETTES", "Coloring", "FailureWitness", "KempeChain",
    "NoColoring", "PaletteEntry", "ReplayResult", "SegmentConflict", "VerificationReport",
    "choose_palette", "color_segment", "ctype_switch", "exact_four_color", "kempe_chain",
    "kempe_kittell_color", "kempe_order", "kempe_switch", "replay_witness", "spiral_color",
    "verify_coloring",
]
