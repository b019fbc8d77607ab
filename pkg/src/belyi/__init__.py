"""Genus-0 Belyi maps: computation from permutation triples and exact verification."""

__version__ = "0.1.0"
