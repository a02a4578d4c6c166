"""Exact engine for the boundary term of the noncommutative residue of the
squared Witten deformation on a seven-dimensional manifold with boundary."""

__version__ = "0.1.0"
