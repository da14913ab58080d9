"""Spiral-chain four-coloring of planar triangulations."""

__version__ = "0.1.0"
