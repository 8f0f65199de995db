"""Precision-tracked Laurent series over F_{q^m}((pi)) with pi^e = 1/T.

This is the finite-precision stand-in for C_infinity.  An element is

    x = sum_{k >= val} c_k pi^k   known modulo pi^prec,

with c_k in F_{q^m}.  Coefficients are stored as a numpy array of F_p
coordinates, one row per power of pi.  ``prec = None`` marks an exact
element (a finite sum).  Precision only ever goes down:

    add  -> min(N1, N2)
    mul  -> min(N1 + v2, N2 + v1)
    inv  -> valuation -v, relative precision kept

Valuations and precisions are integers in units of pi; the user-facing
``valuation()`` divides by e.  |x| = q^{-v(x)} so that |T| = q.
"""

from __future__ import annotations

import functools
from fractions import Fraction

import numpy as np

from . import linalg
from .fields import FqElem, FqField, fq_make
from .poly import Poly
from .ratfunc import RatFunc


class PrecisionError(ArithmeticError):
    """Raised when the requested precision cannot be met; ``achievable`` says what can."""

    def __init__(self, message: str, achievable=None):
        super().__init__(message)
        self.achievable = achievable


def _fmt_frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_frac(s) -> Fraction:
    return Fraction(s)


class LaurentTower:
    """F_{q^m}((pi)), pi^e = 1/T, over the base field F_q.

    Use :func:`laurent_tower` to get a shared instance.
    """

    def __init__(self, base: FqField, m: int = 2, e: int = 1):
        if m < 1 or e < 1:
            raise ValueError("tower parameters m, e must be positive")
        self.base = base
        self.q = base.q
        self.p = p = base.p
        self.m = m
        self.e = e
        self.field = fq_make(p, base.n * m)
        self.d = d = base.n * m
        F = self.field
        self._emb = F.embedding_from(base)
        self._unemb = {v: k for k, v in enumerate(self._emb)}
        self._pw = np.array([p ** i for i in range(d)], dtype=np.int64)
        self._digits = np.array([F.digits(a) for a in range(F.q)], dtype=np.int64)
        self._red = np.array(F.modulus[:d], dtype=np.int64)
        # row t holds the coordinates of (y^t)^q, so coords @ _frob applies x -> x^q
        self._frob = np.array([F.digits(F.pow(F.exp(t), self.q)) for t in range(d)], dtype=np.int64)
        # coordinates with respect to the F_q-basis {b_s alpha^j} (b_s the power basis of F_q)
        bn = base.n
        cols = []
        for j in range(m):
            aj = F.exp(j)
            for s in range(bn):
                bs = base.from_digits([int(s == i) for i in range(bn)])
                cols.append(F.digits(F.mul(self._emb[bs], aj)))
        mat = [[cols[c][r] for c in range(d)] for r in range(d)]
        self._to_fq = np.array(linalg.inverse(mat, p), dtype=np.int64).T
        self._base_pw = np.array([p ** i for i in range(bn)], dtype=np.int64)
        self._emb_arr = np.array(self._emb, dtype=np.int64)

    def __repr__(self):
        return f"LaurentTower(q={self.q}, m={self.m}, e={self.e})"

    def __reduce__(self):
        return (laurent_tower, (self.base, self.m, self.e))

    # -- coordinate helpers ---------------------------------------------------------

    def to_ints(self, arr: np.ndarray) -> list[int]:
        return [int(x) for x in arr @ self._pw] if len(arr) else []

    def from_ints(self, vals) -> np.ndarray:
        vals = list(vals)
        if not vals:
            return np.zeros((0, self.d), dtype=np.int64)
        return self._digits[np.array(vals, dtype=np.int64)]

    def _conv(self, A: np.ndarray, B: np.ndarray, rows: int | None = None) -> np.ndarray:
        d, p = self.d, self.p
        if rows is not None:
            A, B = A[:rows], B[:rows]
        n = len(A) + len(B) - 1
        if len(A) == 0 or len(B) == 0:
            return np.zeros((0, d), dtype=np.int64)
        out = np.zeros((n, 2 * d - 1), dtype=np.int64)
        for s in range(d):
            a = A[:, s]
            if not a.any():
                continue
            for t in range(d):
                b = B[:, t]
                if b.any():
                    out[:, s + t] += np.convolve(a, b)
        out %= p
        red = self._red
        for k in range(2 * d - 2, d - 1, -1):
            c = out[:, k]
            if c.any():
                out[:, k - d:k] -= np.outer(c, red)
        out = out[:, :d] % p
        return out[:rows] if rows is not None else out

    # -- constructors ----------------------------------------------------------------

    def _elem(self, start: int, arr: np.ndarray, prec: int | None) -> "LaurentElem":
        return LaurentElem._make(self, start, arr, prec)

    def zero(self, prec: int | None = None) -> "LaurentElem":
        return self._elem(0 if prec is None else prec, np.zeros((0, self.d), dtype=np.int64), prec)

    def one(self) -> "LaurentElem":
        return self.const(1)

    def const(self, c) -> "LaurentElem":
        """Constant from an int (prime field), a base-field or a coefficient-field element."""
        if isinstance(c, FqElem):
            if c.field is self.field:
                v = c.value
            elif c.field is self.base:
                v = self._emb[c.value]
            else:
                raise ValueError("constant from an unrelated field")
        else:
            v = self.field.from_int(c)
        return self._elem(0, self.from_ints([v]), None)

    def monomial(self, k: int, c: int = 1) -> "LaurentElem":
        """c * pi^k for a raw coefficient-field integer c."""
        return self._elem(k, self.from_ints([c]), None)

    def pi(self) -> "LaurentElem":
        return self.monomial(1)

    def T(self) -> "LaurentElem":
        return self.monomial(-self.e)

    def alpha(self) -> "LaurentElem":
        """The generator of F_{q^m} over F_p (a root of its modulus)."""
        return self._elem(0, self.from_ints([self.field.generator]), None)

    def from_poly(self, a: Poly) -> "LaurentElem":
        """Exact image of a polynomial in T over F_q or over F_{q^m}."""
        if not a:
            return self.zero()
        if a.field is self.base:
            cs = [self._emb[c] for c in a.coeffs]
        elif a.field is self.field:
            cs = list(a.coeffs)
        else:
            raise ValueError("polynomial over an unrelated field")
        e = self.e
        deg = len(cs) - 1
        vals = [0] * (e * deg + 1)
        for k, c in enumerate(cs):
            vals[e * (deg - k)] = c
        return self._elem(-e * deg, self.from_ints(vals), None)

    def from_ratfunc(self, t, prec: int | None = None) -> "LaurentElem":
        """Image of t in K_infinity, to absolute precision ``prec`` (pi-units).

        Exact when the denominator is a monomial in T.
        """
        if isinstance(t, Poly):
            return self.from_poly(t)
        num, den = self.from_poly(t.num), self.from_poly(t.den)
        if den.length == 1:
            return num * den.inverse()
        if prec is None:
            raise ValueError("a rational function with non-monomial denominator needs a precision")
        rel = prec - (num.val - den.val) if num.length else 0
        if not num.length:
            return self.zero()
        return num * den.inverse(rel=max(rel, 1))

    def embed(self, x, prec: int | None = None) -> "LaurentElem":
        if isinstance(x, LaurentElem):
            return x
        if isinstance(x, (Poly, RatFunc)):
            return self.from_ratfunc(x, prec)
        return self.const(x)

    def from_json(self, data: dict) -> "LaurentElem":
        if data["m"] != self.m or data["e"] != self.e:
            raise ValueError("tower mismatch")
        v = _parse_frac(data["v"]) * self.e
        if v.denominator != 1:
            raise ValueError("valuation not in (1/e)Z")
        prec = data.get("prec")
        if prec is not None:
            pv = _parse_frac(prec) * self.e
            prec = int(pv)
        return self._elem(int(v), self.from_ints(data["coeffs"]), prec)


@functools.lru_cache(maxsize=None)
def laurent_tower(base: FqField, m: int = 2, e: int = 1) -> LaurentTower:
    return LaurentTower(base, m, e)


class LaurentElem:
    __slots__ = ("tower", "val", "c", "prec")

    def __init__(self, tower, val, c, prec):
        self.tower = tower
        self.val = val
        self.c = c
        self.prec = prec

    @classmethod
    def _make(cls, tower, start, arr, prec):
        if prec is not None and len(arr) > prec - start:
            arr = arr[:max(0, prec - start)]
        nz = np.flatnonzero(arr.any(axis=1)) if len(arr) else []
        if len(nz) == 0:
            return cls(tower, 0 if prec is None else prec, np.zeros((0, tower.d), dtype=np.int64), prec)
        lo = int(nz[0])
        hi = int(nz[-1]) + 1 if prec is None else len(arr)
        return cls(tower, start + lo, arr[lo:hi], prec)

    # -- queries ---------------------------------------------------------------------

    @property
    def length(self) -> int:
        return len(self.c)

    def is_zero(self) -> bool:
        """True when the element is indistinguishable from 0 at its precision."""
        return len(self.c) == 0

    def is_exact(self) -> bool:
        return self.prec is None

    def __bool__(self):
        return len(self.c) != 0

    def valuation(self):
        """v(x) in (1/e)Z; for an element indistinguishable from 0 this is the lower bound prec/e."""
        if self.is_zero() and self.prec is None:
            return float("inf")
        return Fraction(self.val, self.tower.e)

    def val_lower(self):
        """Largest v with |x| <= q^{-v} certified at the current precision."""
        return self.valuation()

    def abs_log(self) -> Fraction:
        """log_q |x|."""
        if self.is_zero():
            raise PrecisionError("absolute value of an element indistinguishable from 0",
                                 achievable=self.absprec())
        return -self.valuation()

    def absprec(self):
        return None if self.prec is None else Fraction(self.prec, self.tower.e)

    def relprec(self):
        """Number of known pi-digits from the leading one (None if exact)."""
        if self.prec is None:
            return None
        return self.prec - self.val

    def coeff(self, k: int) -> int:
        """Raw coefficient-field integer at pi^k."""
        if self.prec is not None and k >= self.prec:
            raise PrecisionError(f"coefficient of pi^{k} is beyond the precision {self.prec}")
        i = k - self.val
        if 0 <= i < len(self.c):
            return int(self.c[i] @ self.tower._pw)
        return 0

    def lead(self) -> FqElem:
        if self.is_zero():
            raise PrecisionError("leading coefficient of an element indistinguishable from 0")
        return FqElem(self.tower.field, int(self.c[0] @ self.tower._pw))

    def coefficients(self) -> list[int]:
        return self.tower.to_ints(self.c)

    # -- precision control -------------------------------------------------------------

    def truncate(self, prec: int | None) -> "LaurentElem":
        """Forget everything from pi^prec on (never raises precision)."""
        if prec is None:
            return self
        if self.prec is not None:
            prec = min(prec, self.prec)
        return LaurentElem._make(self.tower, self.val, self.c, prec)

    def with_rel(self, rel: int | None) -> "LaurentElem":
        """Keep at most ``rel`` digits from the leading one."""
        if rel is None or self.is_zero():
            return self
        return self.truncate(self.val + rel)

    # -- arithmetic --------------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentElem):
            if other.tower is not self.tower:
                raise ValueError("Laurent elements from different towers")
            return other
        if isinstance(other, (int, FqElem)):
            return self.tower.const(other)
        if isinstance(other, Poly):
            return self.tower.from_poly(other)
        if isinstance(other, RatFunc):
            if self.prec is None:
                return self.tower.from_ratfunc(other)
            e = self.tower.e
            vt = e * (other.den.degree - other.num.degree) if other else 0
            return self.tower.from_ratfunc(other, max(self.prec, self.prec - self.val + vt))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        tw = self.tower
        precs = [x.prec for x in (self, o) if x.prec is not None]
        prec = min(precs) if precs else None
        parts = [x for x in (self, o) if x.length]
        if not parts:
            return tw.zero(prec)
        start = min(x.val for x in parts)
        end = max(x.val + x.length for x in parts)
        if prec is not None:
            end = min(end, prec)
        if end <= start:
            return tw.zero(prec)
        arr = np.zeros((end - start, tw.d), dtype=np.int64)
        for x in parts:
            off = x.val - start
            n = min(x.length, end - start - off)
            if n > 0:
                arr[off:off + n] += x.c[:n]
        arr %= tw.p
        return LaurentElem._make(tw, start, arr, prec)

    __radd__ = __add__

    def __neg__(self):
        return LaurentElem(self.tower, self.val, (-self.c) % self.tower.p, self.prec)

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
        tw = self.tower
        if (self.is_zero() and self.prec is None) or (o.is_zero() and o.prec is None):
            return tw.zero()
        cands = []
        if self.prec is not None:
            cands.append(self.prec + o.val)
        if o.prec is not None:
            cands.append(o.prec + self.val)
        prec = min(cands) if cands else None
        if self.is_zero() or o.is_zero():
            return tw.zero(prec)
        start = self.val + o.val
        rows = None if prec is None else prec - start
        if rows is not None and rows <= 0:
            return tw.zero(prec)
        return LaurentElem._make(tw, start, tw._conv(self.c, o.c, rows), prec)

    __rmul__ = __mul__

    def inverse(self, rel: int | None = None) -> "LaurentElem":
        """1/x with the same relative precision (capped at ``rel``).

        An exact element that is not a monomial needs ``rel``.
        """
        tw = self.tower
        if self.is_zero():
            raise PrecisionError("inverse of an element indistinguishable from 0",
                                 achievable=self.absprec())
        F = tw.field
        c0 = int(self.c[0] @ tw._pw)
        if self.prec is None and self.length == 1:
            return tw._elem(-self.val, tw.from_ints([F.inv(c0)]), None)
        r = self.relprec()
        if rel is not None:
            r = rel if r is None else min(r, rel)
        if r is None:
            raise ValueError("inverse of an exact non-monomial needs a relative precision")
        u = self.c[:r]
        y = tw.from_ints([F.inv(c0)])
        two = tw.from_ints([F.from_int(2)])[0]
        k = 1
        while k < r:
            k = min(2 * k, r)
            t = (-tw._conv(u[:k], y, k)) % tw.p
            if len(t) < k:
                t = np.vstack([t, np.zeros((k - len(t), tw.d), dtype=np.int64)])
            t[0] = (t[0] + two) % tw.p
            y = tw._conv(y, t, k)
        return LaurentElem._make(tw, -self.val, y, -self.val + r)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse(rel=self.relprec() if o.prec is None and o.length > 1 else None)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.tower.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def frobenius(self, q: int | None = None, rel: int | None = None) -> "LaurentElem":
        """x^q for q a power of the base field order (default q), keeping at most ``rel`` digits."""
        tw = self.tower
        Q = tw.q
        q = Q if q is None else q
        x = self
        while q > 1:
            if q % Q:
                raise ValueError("frobenius exponent must be a power of the base order")
            x = x._frob_once(rel)
            q //= Q
        return x

    def _frob_once(self, rel):
        tw = self.tower
        Q = tw.q
        if self.is_zero():
            return tw.zero(None if self.prec is None else Q * self.prec)
        c = self.c
        if rel is not None:
            c = c[:-(-rel // Q)]
        cq = (c @ tw._frob) % tw.p
        out = np.zeros(((len(cq) - 1) * Q + 1, tw.d), dtype=np.int64)
        out[::Q] = cq
        prec = None if self.prec is None else Q * self.prec
        if rel is not None:
            cap = Q * self.val + rel
            prec = cap if prec is None else min(prec, cap)
        return LaurentElem._make(tw, Q * self.val, out, prec)

    def scale_coeffs(self, c: int) -> "LaurentElem":
        return self * self.tower.monomial(0, c)

    # -- K_infinity components ----------------------------------------------------------

    def components(self) -> dict[tuple[int, int], "LaurentElem"]:
        """x = sum_{i<e, j<m} pi^i alpha^j x_ij with x_ij in K_infinity.

        Each x_ij is returned as an element of the same tower whose support lies
        on multiples of e and whose coefficients lie in F_q.
        """
        tw = self.tower
        e, m, bn = tw.e, tw.m, tw.base.n
        coords = (self.c @ tw._to_fq) % tw.p if self.length else self.c
        out = {}
        for i in range(e):
            for j in range(m):
                prec = None if self.prec is None else self.prec - i
                if not self.length:
                    out[(i, j)] = tw.zero(prec)
                    continue
                base_ints = coords[:, bn * j: bn * (j + 1)] @ tw._base_pw
                field_ints = tw._emb_arr[base_ints]
                arr = tw._digits[field_ints]
                ks = np.arange(self.val, self.val + self.length)
                mask = (ks - i) % e == 0
                arr = np.where(mask[:, None], arr, 0)
                out[(i, j)] = LaurentElem._make(tw, self.val - i, arr, prec)
        return out

    def polynomial_part(self) -> Poly:
        """For x in K_infinity: the a in A = F_q[T] with v(x - a) > 0."""
        tw = self.tower
        if self.prec is not None and self.prec < 1:
            raise PrecisionError("polynomial part needs precision beyond pi^0", achievable=self.absprec())
        e = tw.e
        if self.is_zero() or self.val > 0:
            return Poly(tw.base, [])
        deg = -self.val // e
        cs = [0] * (deg + 1)
        for k in range(self.val, 1):
            c = self.coeff(k)
            if c:
                if k % e:
                    raise ValueError("element is not in K_infinity")
                if c not in tw._unemb:
                    raise ValueError("coefficient outside F_q")
                cs[-k // e] = tw._unemb[c]
        return Poly(tw.base, cs)

    def to_ratfunc_floor(self) -> Poly:
        return self.polynomial_part()

    # -- comparisons and output ---------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).is_zero()

    __hash__ = None

    def to_json(self) -> dict:
        e = self.tower.e
        return {
            "m": self.tower.m,
            "e": e,
            "v": _fmt_frac(Fraction(self.val, e)),
            "prec": None if self.prec is None else _fmt_frac(Fraction(self.prec, e)),
            "coeffs": self.coefficients(),
        }

    def _fmt_coeff(self, c: int) -> str:
        F = self.tower.field
        if c < F.p:
            return str(c)
        return f"alpha^{F.log(c)}"

    def __str__(self):
        tw = self.tower
        terms = []
        for i, c in enumerate(self.coefficients()):
            if not c:
                continue
            k = self.val + i
            if tw.e == 1:
                mono = "" if k == 0 else ("T" if k == -1 else f"T^{-k}")
            else:
                mono = "" if k == 0 else ("pi" if k == 1 else f"pi^{k}")
            cs = self._fmt_coeff(c)
            if not mono:
                terms.append(cs)
            elif cs == "1":
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}")
        if self.prec is not None:
            terms.append(f"O(T^{-self.prec})" if tw.e == 1 else f"O(pi^{self.prec})")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"LaurentElem({self})"


def parse_laurent(text: str, tower: LaurentTower, prec: int):
    """Parse a literal such as ``alpha*T^3 + 1/T`` into the tower (unramified use)."""
    from .literal import parse_expression
    F = tower.field
    names = {"T": RatFunc.T(F), "alpha": RatFunc.constant(F, F.gen())}
    if tower.base.n > 1:
        names["g"] = RatFunc.constant(F, FqElem(F, tower._emb[tower.base.generator]))
    t = parse_expression(text, names, lambda k: RatFunc.constant(F, k))
    return tower.from_ratfunc(t, prec)
