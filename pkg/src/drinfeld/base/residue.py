"""Residue rings A/n for A = F_q[T]."""

from __future__ import annotations

from .factor import poly_factor
from .fields import factor_int
from .poly import Poly


def unit_group_order(n: Poly) -> int:
    """|(A/n)^*| = prod over prime powers pi^t || n of q^{d t} - q^{d (t-1)}."""
    if not n:
        raise ValueError("modulus must be nonzero")
    q = n.field.q
    out = 1
    for pi, t in poly_factor(n):
        d = pi.degree
        out *= q ** (d * t) - q ** (d * (t - 1))
    return out


class Residue:
    """Class of ``rep`` in A/n with the reduced representative (deg < deg n)."""

    __slots__ = ("modulus", "rep")

    def __init__(self, modulus: Poly, rep):
        if not modulus:
            raise ValueError("modulus must be nonzero")
        self.modulus = modulus.monic()
        if not isinstance(rep, Poly):
            rep = Poly.constant(modulus.field, rep, modulus.var)
        self.rep = rep % self.modulus

    def _other(self, other) -> Poly:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError("residues modulo different ideals")
            return other.rep
        return Poly.constant(self.modulus.field, other) if not isinstance(other, Poly) else other

    def __add__(self, other):
        return Residue(self.modulus, self.rep + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return Residue(self.modulus, self.rep - self._other(other))

    def __neg__(self):
        return Residue(self.modulus, -self.rep)

    def __mul__(self, other):
        return Residue(self.modulus, self.rep * self._other(other))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Residue(self.modulus, self.rep.powmod(e, self.modulus))

    def is_unit(self) -> bool:
        return self.rep.gcd(self.modulus).degree == 0

    def inverse(self) -> "Residue":
        g, s, _ = self.rep.xgcd(self.modulus)
        if g.degree != 0:
            raise ZeroDivisionError(f"{self.rep} is not a unit modulo {self.modulus}")
        return Residue(self.modulus, s)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.modulus == other.modulus and self.rep == other.rep
        return self.rep == Residue(self.modulus, self._other(other)).rep

    def __hash__(self):
        return hash((self.modulus, self.rep))

    def __repr__(self):
        return f"{self.rep} mod {self.modulus}"


def unit_order(b: Residue) -> int:
    """Multiplicative order of a unit of A/n.

    >>> from drinfeld.base.fields import fq_make
    >>> F = fq_make(2); T = Poly.gen(F)
    >>> unit_order(Residue(T**2 + T + 1, T))
    3
    """
    if not b.is_unit():
        raise ValueError(f"{b.rep} is not a unit modulo {b.modulus}")
    n = unit_group_order(b.modulus)
    order = n
    for r in factor_int(n):
        while order % r == 0 and (b ** (order // r)).rep == 1:
            order //= r
    return order
