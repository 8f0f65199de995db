"""The Carlitz module rho_T = T + tau and cyclotomic desk checks."""

from __future__ import annotations

from dataclasses import dataclass

from .base.factor import factor_degrees, is_irreducible
from .base.poly import Poly
from .base.residue import Residue, unit_group_order, unit_order
from .module import AField, DrinfeldModule
from .skew import SkewPoly, SkewRing


def carlitz(afield: AField) -> DrinfeldModule:
    """phi_T = gamma(T) + tau over the given A-field."""
    return DrinfeldModule(afield, [afield.gammaT, afield.one])


def _rho_over_A(a: Poly) -> SkewPoly:
    # coefficients in A itself: Poly has a q-power frobenius, which is all L{tau} needs
    F = a.field
    ring = SkewRing(F.q, Poly(F, []), Poly.constant(F, 1), name="A")
    rho_T = SkewPoly(ring, [Poly.gen(F), Poly.constant(F, 1)])
    acc = SkewPoly(ring, [])
    for c in reversed(a.coeffs):
        acc = acc * rho_T + Poly(F, [c])
    return acc


class DivisionPolynomial:
    """rho_a(X) = sum_i c_i X^{q^i} with c_i in A."""

    def __init__(self, a: Poly):
        if not a:
            raise ValueError("division polynomial of 0")
        self.a = a
        self.q = a.field.q
        self.coeffs = list(_rho_over_A(a).coeffs)

    @property
    def degree(self) -> int:
        """X-degree q^{deg a}."""
        return self.q ** (len(self.coeffs) - 1)

    def over(self, afield: AField) -> Poly:
        """rho_a(X) with coefficients pushed through gamma, as a polynomial in X."""
        L = afield.carrier
        out = [0] * (self.degree + 1)
        for i, c in enumerate(self.coeffs):
            out[self.q ** i] = afield.gamma(c).value
        return Poly(L, out, "X")

    def reduced_quotient(self, afield: AField) -> Poly:
        """rho_a(X)/X over a finite A-field."""
        f = self.over(afield)
        return Poly(f.field, f.coeffs[1:], "X")

    def __call__(self, x):
        acc = None
        xp = x
        for i, c in enumerate(self.coeffs):
            if i:
                xp = xp.frobenius(self.q)
            t = c * xp
            acc = t if acc is None else acc + t
        return acc

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            e = self.q ** i
            mono = "X" if e == 1 else f"X^{e}"
            if c == 1:
                terms.append(mono)
            elif c.n_terms() == 1:
                terms.append(f"{c}*{mono}")
            else:
                terms.append(f"({c})*{mono}")
        return " + ".join(terms)

    def __repr__(self):
        return f"DivisionPolynomial({self})"


def division_poly(a: Poly) -> DivisionPolynomial:
    if not a or not a.is_monic():
        raise ValueError("division_poly expects a monic nonzero a")
    return DivisionPolynomial(a)


@dataclass
class EisensteinReport:
    pi: Poly
    constant_is_pi: bool
    middle_divisible: bool
    leading_one: bool

    @property
    def eisenstein(self) -> bool:
        return self.constant_is_pi and self.middle_divisible and self.leading_one

    def __bool__(self):
        return self.eisenstein


def _require_irreducible(pi: Poly):
    if not pi.is_monic() or not is_irreducible(pi):
        raise ValueError(f"{pi} is not a monic irreducible")


def eisenstein_at(pi: Poly) -> EisensteinReport:
    """rho_pi(X)/X is Eisenstein at pi: constant term pi, middle coefficients in (pi), top 1."""
    _require_irreducible(pi)
    cs = division_poly(pi).coeffs
    c0 = cs[0]
    const_ok = pi.divides(c0) and not (pi * pi).divides(c0)
    middle_ok = all(pi.divides(c) for c in cs[1:-1])
    return EisensteinReport(pi, const_ok, middle_ok, cs[-1] == 1)


def reduction_identity(pi: Poly) -> bool:
    """rho_pi = tau^{deg pi} mod pi."""
    cs = division_poly(pi).coeffs
    return all(pi.divides(c) for c in cs[:-1]) and cs[-1] == 1 and len(cs) == pi.degree + 1


@dataclass
class FrobeniusReport:
    ell: Poly
    pi: Poly
    degrees: list
    predicted: int

    @property
    def consistent(self) -> bool:
        return all(d == self.predicted for d in self.degrees)

    def to_json(self) -> dict:
        return {"ell": str(self.ell), "pi": str(self.pi), "degrees": self.degrees,
                "predicted": self.predicted, "consistent": self.consistent}


def frobenius_degrees(ell: Poly, pi: Poly) -> FrobeniusReport:
    """Factor degrees of rho_ell(X)/X over A/pi against the order of pi in (A/ell)^*."""
    _require_irreducible(ell)
    _require_irreducible(pi)
    if ell == pi:
        raise ValueError("ell = pi is the ramified case")
    af = AField.residue(pi)
    f = division_poly(ell).reduced_quotient(af)
    degs = factor_degrees(f)
    return FrobeniusReport(ell, pi, degs, unit_order(Residue(ell, pi)))


def frobenius_pointwise(ell: Poly, pi: Poly) -> bool:
    """x^{|A/pi|} = rho_{pi mod ell}(x) on every ell-torsion point over A/pi."""
    af = AField.residue(pi)
    tors = carlitz(af).torsion_points(ell)
    b = pi % ell
    E = tors.field
    Q = af.carrier.q
    return all(E.pow(x, Q) == tors.act(b, x) for x in tors.points)


def cyclotomic_degree(a: Poly) -> int:
    """[K(a) : K] = |(A/a)^*|."""
    if a.degree < 1:
        raise ValueError("cyclotomic degree needs a nonconstant a")
    return unit_group_order(a)
