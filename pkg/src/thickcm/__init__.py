"""Homological invariants of graded modules over quotient rings and the
classification of thick/resolving subcategories over hypersurfaces."""

__version__ = "0.1.0"
