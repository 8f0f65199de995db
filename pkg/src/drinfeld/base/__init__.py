"""Exact arithmetic foundation: F_q, A = F_q[T], A/n, K = F_q(T) and Laurent towers."""

from .fields import NEG_INF, FqElem, FqField, fq_from_order, fq_make
from .poly import Poly
from .ratfunc import RatFunc
from .residue import Residue, unit_group_order, unit_order
from .factor import poly_factor, is_irreducible

__all__ = [
    "NEG_INF", "FqElem", "FqField", "fq_make", "fq_from_order",
    "Poly", "RatFunc", "Residue", "unit_order", "unit_group_order",
    "poly_factor", "is_irreducible",
]
