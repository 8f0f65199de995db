"""Vanishing orders at the boundary for A = F_q[T].

  ord(Delta_a)      = -(|a|^r - 1) zeta_A(1 - r)
  ord_[nu](E_{1,u}) = (|n|/|a|)^{r-1} (zeta_{v1 mod a}(1 - r) - zeta_{0 mod a}(1 - r))

with a = pi_1(A^r nu) (the ideal generated by the first column of nu) and
v = u nu.  Pic(F_q[T]) is trivial, so there is a single class c.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .base.poly import Poly
from .base.ratfunc import RatFunc
from .zeta import eval_at, partial_zeta, zeta_class


class OutOfScope(NotImplementedError):
    """A boundary question beyond F_q[T] with the full level GL(r, A)."""


def _positive_integer(x: Fraction, what: str, allow_zero: bool = False) -> int:
    if x.denominator != 1 or x < 0 or (x == 0 and not allow_zero):
        raise ArithmeticError(f"{what} = {x} is not a {'non-negative' if allow_zero else 'positive'} integer")
    return int(x)


def ord_delta(a: Poly, r: int) -> int:
    """Vanishing order of Delta_a at the cusp: (q^{r deg a} - 1)/(q^r - 1)."""
    if r < 2:
        raise ValueError("rank r >= 2")
    if a.degree < 1:
        raise ValueError("ord_delta needs a nonconstant a")
    q = a.field.q
    val = -(Fraction(q) ** (r * a.degree) - 1) * eval_at(zeta_class(q=q), 1 - r, q)
    return _positive_integer(val, "ord_delta")


def _rat(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc.from_poly(x)
    raise TypeError("expected an element of K")


def ideal_generator(elems) -> RatFunc:
    """Monic generator of the fractional ideal sum(x_i A)."""
    elems = [_rat(x) for x in elems if x]
    if not elems:
        raise ValueError("the zero ideal")
    F = elems[0].num.field
    L = Poly.constant(F, 1)
    for x in elems:
        L = L * x.den.exact_div(L.gcd(x.den))
    g = Poly(F, [])
    for x in elems:
        g = g.gcd((x * RatFunc.from_poly(L)).num) if g else (x * RatFunc.from_poly(L)).num
    return RatFunc(g.monic(), L)


def _det(mat) -> RatFunc:
    n = len(mat)
    m = [[_rat(x) for x in row] for row in mat]
    F = next(x.num.field for row in m for x in row if x) if any(x for row in m for x in row) else None
    if F is None:
        raise ValueError("zero matrix")
    det = RatFunc.constant(F, 1)
    for i in range(n):
        piv = next((k for k in range(i, n) if m[k][i]), None)
        if piv is None:
            return RatFunc.constant(F, 0)
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
            det = -det
        det = det * m[i][i]
        inv = m[i][i].inverse()
        for k in range(i + 1, n):
            if m[k][i]:
                f = m[k][i] * inv
                m[k] = [a - f * b for a, b in zip(m[k], m[i])]
    return det


@dataclass
class BoundaryDatum:
    """(r, n, u, nu) with u in (n^{-1})^r minus A^r and nu in GL(r, K)."""

    r: int
    n: Poly
    u: tuple
    nu: tuple

    def __post_init__(self):
        r = self.r
        if r < 2:
            raise ValueError("rank r >= 2")
        if not self.n or not self.n.is_monic() or self.n.degree < 1:
            raise ValueError("level n must be monic and nonconstant")
        self.u = tuple(_rat(x) for x in self.u)
        self.nu = tuple(tuple(_rat(x) for x in row) for row in self.nu)
        if len(self.u) != r or len(self.nu) != r or any(len(row) != r for row in self.nu):
            raise ValueError(f"u and nu must have size {r}")
        nn = RatFunc.from_poly(self.n)
        if not all((x * nn).is_poly() for x in self.u):
            raise ValueError("u * n must lie in A^r")
        if all(x.is_poly() for x in self.u):
            raise ValueError("u lies in A^r")
        if not _det(self.nu):
            raise ValueError("nu is not invertible")

    @property
    def q(self) -> int:
        return self.n.field.q

    @property
    def a(self) -> RatFunc:
        """pi_1(A^r nu): the ideal of first-column entries of nu."""
        return ideal_generator([row[0] for row in self.nu])

    @property
    def v(self) -> tuple:
        """u nu."""
        F = self.n.field
        out = []
        for j in range(self.r):
            acc = RatFunc.constant(F, 0)
            for i in range(self.r):
                acc = acc + self.u[i] * self.nu[i][j]
            out.append(acc)
        return tuple(out)


def ord_E1u(d: BoundaryDatum) -> int:
    """Vanishing order of E_{1,u} along the boundary component of [nu]."""
    q, r = d.q, d.r
    a = d.a
    v1 = d.v[0]
    s = 1 - r
    diff = eval_at(partial_zeta(v1, a), s, q) - eval_at(partial_zeta(RatFunc.constant(d.n.field, 0), a), s, q)
    scale = Fraction(q) ** ((r - 1) * (d.n.degree - a.deg()))
    return _positive_integer(scale * diff, "ord_E1u", allow_zero=True)


def cusp_count(level=None, ring: str = "F_q[T]") -> int:
    """Number of boundary components of M^r for GL(r, F_q[T]): |Pic(A)| = 1."""
    if ring != "F_q[T]":
        raise OutOfScope("only A = F_q[T] is supported")
    if level not in (None, 1):
        raise OutOfScope("cusp census for a proper level Gamma(n) is not implemented")
    return 1


def parse_matrix(text: str, parse) -> tuple:
    """'1,0;0,1' -> rows of parsed entries."""
    return tuple(tuple(parse(x.strip()) for x in row.split(",")) for row in text.split(";"))


def random_gl2(F, rng, max_deg: int = 2) -> tuple:
    """A random element of GL(2, A) with entry degrees <= max_deg (product of elementary matrices)."""
    from .base.poly import random_poly
    one, zero = Poly.constant(F, 1), Poly(F, [])
    while True:
        M = ((one, zero), (zero, one))
        for _ in range(rng.randint(1, 3)):
            b = random_poly(F, rng.randint(0, max_deg), rng)
            E = ((one, b), (zero, one)) if rng.random() < 0.5 else ((one, zero), (b, one))
            M = tuple(tuple(sum((M[i][k] * E[k][j] for k in range(2)), zero) for j in range(2))
                      for i in range(2))
        if rng.random() < 0.5:
            c = Poly(F, [rng.randrange(1, F.q)])
            M = ((M[0][0] * c, M[0][1] * c), M[1])
        if all(x.degree <= max_deg for row in M for x in row):
            return M
