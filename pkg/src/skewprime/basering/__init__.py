"""Exactly computable base rings, their ideals and endomorphisms."""
from .fields import QQ, CyclotomicField, FiniteField, Rationals, mult_order
from .monomial import MonomialRing, MPoly, Pattern, PatternIdeal
from .ops import apply_endo, contains, cyclotomic, endo_equal, f_omega_p, ideal_relate, preimage
from .points import Point, PointEndo, PointIdeal, PointRing, parse_point, vanishing_generator
from .poly import Poly, format_poly
from .predicates import IndexMap, parse_index_map, parse_pred
from .words import Rule, WordAlgebra, WordEndo, WordIdeal, WPoly

__all__ = [
    "QQ", "CyclotomicField", "FiniteField", "Rationals", "mult_order",
    "MonomialRing", "MPoly", "Pattern", "PatternIdeal",
    "apply_endo", "contains", "cyclotomic", "endo_equal", "f_omega_p", "ideal_relate", "preimage",
    "Point", "PointEndo", "PointIdeal", "PointRing", "parse_point", "vanishing_generator",
    "Poly", "format_poly", "IndexMap", "parse_index_map", "parse_pred",
    "Rule", "WordAlgebra", "WordEndo", "WordIdeal", "WPoly",
]
