"""Partial zeta functions of A = F_q[T] as exact rational functions in x = q^{-s}.

Everything here is genus 0 with deg(infinity) = 1, so the numerator
polynomial of zeta_K is 1.  Values at integers s <= 0 are read off the
rational function (the Dirichlet series itself diverges there).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .base.poly import Poly
from .base.ratfunc import RatFunc

D_INFINITY = 1


def _trim(c):
    c = [Fraction(x) for x in c]
    while c and c[-1] == 0:
        c.pop()
    return c


def _mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _add(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] -= c * y
        a = _trim(a)
    return _trim(q), a


def _gcd(a, b):
    while b:
        a, b = b, _divmod(a, b)[1]
    return a


class ZetaRational:
    """num(x)/den(x) * x^shift with coprime num, den over Q, den(0) = 1 after scaling.

    ``shift`` (an integer, possibly negative) keeps Laurent monomials such as
    x^{-1} exact without leaving the polynomial representation.
    """

    __slots__ = ("num", "den", "shift")

    def __init__(self, num: Sequence, den: Sequence = (1,), shift: int = 0):
        num, den = _trim(num), _trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den, self.shift = [], [Fraction(1)], 0
            return
        # pull powers of x out of num and den into the shift
        while num[0] == 0:
            num.pop(0)
            shift += 1
        while den[0] == 0:
            den.pop(0)
            shift -= 1
        g = _gcd(num, den)
        if len(g) > 1:
            num, den = _divmod(num, g)[0], _divmod(den, g)[0]
        c = den[0]
        self.num = [x / c for x in num]
        self.den = [x / c for x in den]
        self.shift = shift

    @classmethod
    def monomial(cls, k: int, c=1) -> "ZetaRational":
        return cls([c], [1], k)

    @classmethod
    def geometric(cls, ratio_coeff) -> "ZetaRational":
        """1/(1 - r x)."""
        return cls([1], [1, -Fraction(ratio_coeff)])

    def _aligned(self, other):
        s = min(self.shift, other.shift)
        a = [Fraction(0)] * (self.shift - s) + self.num
        b = [Fraction(0)] * (other.shift - s) + other.num
        return a, b, s

    def __add__(self, other):
        other = _coerce(other)
        a, b, s = self._aligned(other)
        return ZetaRational(_add(_mul(a, other.den), _mul(b, self.den)), _mul(self.den, other.den), s)

    __radd__ = __add__

    def __neg__(self):
        return ZetaRational([-x for x in self.num], self.den, self.shift)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return ZetaRational(_mul(self.num, other.num), _mul(self.den, other.den), self.shift + other.shift)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return ZetaRational(_mul(self.num, other.den), _mul(self.den, other.num), self.shift - other.shift)

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return (self.num, self.den, self.shift) == (other.num, other.den, other.shift)

    def __hash__(self):
        return hash((tuple(self.num), tuple(self.den), self.shift))

    def __bool__(self):
        return bool(self.num)

    def poles(self) -> list[Fraction]:
        """Rational roots x of the denominator."""
        out = []
        d = self.den
        for r in _rational_root_candidates(d):
            if _evalp(d, r) == 0:
                out.append(r)
        if self.shift < 0 and self.num:
            out.append(Fraction(0))
        return sorted(set(out))

    def at_x(self, x) -> Fraction:
        x = Fraction(x)
        dv = _evalp(self.den, x)
        if dv == 0 or (x == 0 and self.shift < 0 and self.num):
            raise ZeroDivisionError(f"pole at x = {x}")
        return _evalp(self.num, x) * x ** self.shift / dv if self.num else Fraction(0)

    def series(self, lo: int, hi: int) -> dict[int, Fraction]:
        """Coefficients of x^k for lo <= k <= hi in the expansion around x = 0."""
        n = hi - self.shift + 1
        out = {k: Fraction(0) for k in range(lo, hi + 1)}
        if n <= 0 or not self.num:
            return out
        inv = [Fraction(0)] * n
        inv[0] = 1 / self.den[0]
        for i in range(1, n):
            acc = sum((self.den[j] * inv[i - j] for j in range(1, min(i, len(self.den) - 1) + 1)),
                      Fraction(0))
            inv[i] = -acc / self.den[0]
        for i in range(n):
            c = sum((self.num[j] * inv[i - j] for j in range(min(i, len(self.num) - 1) + 1)), Fraction(0))
            k = i + self.shift
            if lo <= k <= hi:
                out[k] = c
        return out

    def __str__(self):
        def ps(c):
            out = ""
            for i, x in enumerate(c):
                if x == 0:
                    continue
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                mag = abs(x)
                body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
                if not out:
                    out = ("-" if x < 0 else "") + body
                else:
                    out += (" - " if x < 0 else " + ") + body
            return out or "0"

        def wrap(c):
            t = ps(c)
            return t if sum(1 for x in c if x) == 1 and not t.startswith("-") else f"({t})"
        if not self.num:
            return "0"
        s = ps(self.num)
        if self.shift:
            s = f"x^{self.shift}" if s == "1" else f"x^{self.shift}*{wrap(self.num)}"
        if self.den != [1]:
            s = f"{s if ' ' not in s else '(' + s + ')'}/{wrap(self.den)}"
        return s

    def __repr__(self):
        return f"ZetaRational({self})"


def _coerce(x) -> ZetaRational:
    if isinstance(x, ZetaRational):
        return x
    if isinstance(x, (int, Fraction)):
        return ZetaRational([x])
    raise TypeError(f"cannot use {type(x).__name__} as a rational function in x")


def _evalp(c, x):
    acc = Fraction(0)
    for a in reversed(c):
        acc = acc * x + a
    return acc


def _rational_root_candidates(c):
    from math import lcm
    if not c:
        return []
    m = lcm(*(x.denominator for x in c))
    ints = [int(x * m) for x in c]
    lo = next(i for i, v in enumerate(ints) if v)
    a0, an = abs(ints[lo]), abs(ints[-1])
    out = [Fraction(0)] if lo else []
    for p in _divisors(a0):
        for qq in _divisors(an):
            out += [Fraction(p, qq), Fraction(-p, qq)]
    return out


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0] if n else [1]


def x_of(q: int, s: int) -> Fraction:
    """x = q^{-s}."""
    return Fraction(q) ** (-s)


def eval_at(Z: ZetaRational, s: int, q: int) -> Fraction:
    """Z at the integer s, via x = q^{-s}."""
    try:
        return Z.at_x(x_of(q, s))
    except ZeroDivisionError as exc:
        raise ValueError(f"s = {s} is a pole") from exc


def zeta_A(q: int) -> ZetaRational:
    """sum over monic a of |a|^{-s} = 1/(1 - qx)."""
    return ZetaRational.geometric(q)


def zeta_K(q: int) -> ZetaRational:
    """zeta_A / (1 - x^{d_infinity}) = 1/((1-x)(1-qx))."""
    return ZetaRational([1], [1, -(q + 1), q])


def _as_rat(x, F) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc.from_poly(x)
    raise TypeError("expected an element of K = F_q(T)")


def reduce_residue(t: RatFunc, f: RatFunc) -> RatFunc:
    """t - f*floor(t/f): the representative of degree < deg f."""
    if not f:
        raise ValueError("modulus f = 0")
    return t - f * RatFunc.from_poly((t / f).floor())


def partial_zeta(t, f) -> ZetaRational:
    """zeta_{t mod (f)} = sum over a in K with a = t mod f A of |a|^{-s}.

    With tbar the reduced representative, the class is tbar + f*A and
    |tbar + f b| = |f b| for b != 0, so the series is
    [tbar != 0] x^{deg tbar} + (q-1) x^{deg f}/(1 - q x).
    """
    t, f = _as_rat(t, None), _as_rat(f, None)
    if not f:
        raise ValueError("modulus f = 0")
    q = f.num.field.q
    tb = reduce_residue(t, f)
    tail = ZetaRational.monomial(f.deg(), q - 1) * zeta_A(q)
    if tb:
        return ZetaRational.monomial(tb.deg()) + tail
    return tail


def degree_census(t, f, lo: int, hi: int) -> dict[int, int]:
    """#{a = t mod f : deg a = k} for lo <= k <= hi, by enumeration of a = tbar + f b."""
    from .base.poly import all_polys
    t, f = _as_rat(t, None), _as_rat(f, None)
    F = f.num.field
    tb = reduce_residue(t, f)
    counts = {k: 0 for k in range(lo, hi + 1)}
    df = f.deg()
    if tb and lo <= tb.deg() <= hi:
        counts[tb.deg()] += 1
    # deg(tbar + f b) = deg f + deg b for b != 0
    for d in range(0, hi - df + 1):
        if df + d < lo:
            continue
        for b in all_polys(F, d):
            if b.degree == d:
                # a = tb + f b over the common denominator tb.den * f.den
                num = tb.num * f.den + f.num * b * tb.den
                counts[num.degree - tb.den.degree - f.den.degree] += 1
    return counts


def zeta_class(c=None, q: int | None = None) -> ZetaRational:
    """zeta of an ideal class of A; Pic(F_q[T]) is trivial, so only c = 1 (or None) exists."""
    if c not in (None, 1, "trivial"):
        raise ValueError("Pic(F_q[T]) is trivial: only the trivial class exists")
    if q is None:
        raise ValueError("q is required")
    return zeta_A(q)
