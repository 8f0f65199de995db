"""The rational function field K = F_q(T)."""

from __future__ import annotations

from .fields import NEG_INF, FqElem, FqField
from .poly import Poly


class RatFunc:
    """num/den in lowest terms with den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, *, reduced: bool = False):
        if den is None:
            den = Poly.constant(num.field, 1, num.var)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not reduced:
            g = num.gcd(den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            if not num:
                den = Poly.constant(num.field, 1, num.var)
            elif den.lc != 1:
                inv = num.field.inv(den.lc)
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, a: Poly) -> "RatFunc":
        return cls(a, Poly.constant(a.field, 1, a.var), reduced=True)

    @classmethod
    def T(cls, field: FqField) -> "RatFunc":
        return cls.from_poly(Poly.gen(field))

    @classmethod
    def constant(cls, field: FqField, c) -> "RatFunc":
        return cls.from_poly(Poly.constant(field, c))

    @property
    def field(self) -> FqField:
        return self.num.field

    def deg(self):
        """deg num - deg den, extending deg on A; NEG_INF at 0."""
        if not self.num:
            return NEG_INF
        return self.num.degree - self.den.degree

    def abs_log(self):
        return self.deg()

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def floor(self) -> Poly:
        """Polynomial part: the unique a in A with deg(self - a) < 0."""
        return self.num // self.den

    def reduce_mod(self, f: "RatFunc") -> "RatFunc":
        """Representative t - f*floor(t/f) of self modulo the fractional ideal (f)."""
        if not f:
            raise ZeroDivisionError("reduction modulo the zero ideal")
        return self - f * RatFunc.from_poly((self / f).floor())

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field is not self.field:
                raise ValueError("rational functions over different fields")
            return other
        if isinstance(other, Poly):
            return RatFunc.from_poly(other)
        if isinstance(other, (int, FqElem)):
            return RatFunc.constant(self.field, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.num or not o.num:
            return RatFunc.constant(self.field, 0)
        # cross-cancellation keeps the result reduced with monic denominator
        g1 = self.num.gcd(o.den)
        g2 = o.num.gcd(self.den)
        num = self.num.exact_div(g1) * o.num.exact_div(g2)
        den = self.den.exact_div(g2) * o.den.exact_div(g1)
        return RatFunc(num, den, reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of 0 in K")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num ** e, self.den ** e, reduced=True)

    def frobenius(self, q: int) -> "RatFunc":
        # coprimality and monicity survive the q-power map
        return RatFunc(self.num.frobenius(q), self.den.frobenius(q), reduced=True)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        n = str(self.num)
        d = str(self.den)
        if self.num.n_terms() > 1:
            n = f"({n})"
        if self.den.n_terms() > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RatFunc({self})"
