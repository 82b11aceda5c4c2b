"""Exact polynomial algebra: fields, polynomials, Groebner bases."""
from .field import DEFAULT_FIELD, Field
from .ideal import (FreeSubmodule, Ideal, groebner_basis, ideal_quotient, intersection,
                    krull_dimension, normal_form, radical_contains, syzygies)
from .poly import NEG_INF, Polynomial, PolynomialRing

__all__ = [
    "DEFAULT_FIELD", "Field", "FreeSubmodule", "Ideal", "NEG_INF", "Polynomial",
    "PolynomialRing", "groebner_basis", "ideal_quotient", "intersection",
    "krull_dimension", "normal_form", "radical_contains", "syzygies",
]
