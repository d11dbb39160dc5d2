"""Palette colourings of 3-graphs and small digraph Turán problems."""

__version__ = "0.1.0"
