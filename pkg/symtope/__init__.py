"""Exact symmetric homology and cohomology polytopes of simplicial complexes."""

__version__ = "1.0.0"
