"""Dense univariate polynomials over a finite field.

``Poly`` serves both as the Drinfeld ring A = F_q[T] (variable ``T``) and as
ordinary polynomials in ``X`` over extension fields (torsion computations).
Coefficients are raw field integers, lowest degree first, with no trailing
zeros.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .fields import NEG_INF, FqElem, FqField


class Poly:
    __slots__ = ("field", "coeffs", "var")

    def __init__(self, field: FqField, coeffs: Iterable[int] = (), var: str = "T"):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)
        self.var = var

    # -- constructors -------------------------------------------------------------

    @classmethod
    def constant(cls, field: FqField, c, var: str = "T") -> "Poly":
        # integers denote prime-field elements; raw encodings go through Poly(...)
        c = c.value if isinstance(c, FqElem) else field.from_int(c)
        return cls(field, [c], var)

    @classmethod
    def monomial(cls, field: FqField, k: int, c: int = 1, var: str = "T") -> "Poly":
        return cls(field, [0] * k + [c], var)

    @classmethod
    def gen(cls, field: FqField, var: str = "T") -> "Poly":
        return cls(field, [0, 1], var)

    def _new(self, coeffs) -> "Poly":
        return Poly(self.field, coeffs, self.var)

    # -- basic queries ------------------------------------------------------------

    def deg(self):
        """Degree, with ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_monic(self) -> bool:
        return self.lc == 1

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        inv = self.field.inv(self.lc)
        return self.scale(inv)

    def abs_value(self) -> int:
        """|a| = q^deg(a) = #(A/a), and |0| = 0."""
        return self.field.q ** self.degree if self.coeffs else 0

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == Poly.constant(self.field, other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.coeffs))

    # -- ring operations ----------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field is not self.field:
                raise ValueError("polynomials over different fields")
            return other
        if isinstance(other, (int, FqElem)):
            return Poly.constant(self.field, other, self.var)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        add = self.field.add
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return self._new([add(x, b[i]) if i < len(b) else x for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg
        return self._new([neg(c) for c in self.coeffs])

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

    def scale(self, c: int) -> "Poly":
        mul = self.field.mul
        return self._new([mul(c, x) for x in self.coeffs])

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return self._new([])
        F = self.field
        if F.n == 1:
            p = F.p
            res = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        if y:
                            res[i + j] += x * y
            return self._new([c % p for c in res])
        add, mul = F.add, F.mul
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        res[i + j] = add(res[i + j], mul(x, y))
        return self._new(res)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = self._new([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "Poly":
        """Multiply by var^k."""
        if not self.coeffs:
            return self
        return self._new([0] * k + list(self.coeffs))

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        o = self._coerce(other)
        if not o.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        r = list(self.coeffs)
        db = len(o.coeffs) - 1
        if len(r) - 1 < db:
            return self._new([]), self
        inv = F.inv(o.lc)
        qc = [0] * (len(r) - db)
        b = o.coeffs
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if c:
                t = F.mul(c, inv)
                qc[k - db] = t
                for i in range(db + 1):
                    if b[i]:
                        r[k - db + i] = F.sub(r[k - db + i], F.mul(t, b[i]))
        return self._new(qc), self._new(r[:db])

    def __divmod__(self, other):
        return self.divmod(other)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        qt, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return qt

    def divides(self, other: "Poly") -> bool:
        return not (other % self)

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, self._coerce(other)
        while b:
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: "Poly") -> tuple["Poly", "Poly", "Poly"]:
        """(g, s, t) with g = s*self + t*other, g monic."""
        one, zero = self._new([1]), self._new([])
        r0, r1 = self, self._coerce(other)
        s0, s1, t0, t1 = one, zero, zero, one
        while r1:
            qt, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - qt * s1
            t0, t1 = t1, t0 - qt * t1
        if not r0:
            return r0, s0, t0
        inv = self.field.inv(r0.lc)
        return r0.scale(inv), s0.scale(inv), t0.scale(inv)

    def powmod(self, e: int, m: "Poly") -> "Poly":
        result = self._new([1]) % m
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            base = (base * base) % m
            e >>= 1
        return result

    def derivative(self) -> "Poly":
        F = self.field
        return self._new([F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def frobenius(self, q: int) -> "Poly":
        """self^q, for q a power of the characteristic."""
        if not self.coeffs:
            return self
        F = self.field
        out = [0] * (q * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            if c:
                out[q * i] = F.pow(c, q)
        return self._new(out)

    def __call__(self, x):
        """Horner evaluation at a raw field integer or an FqElem of the same field."""
        if isinstance(x, FqElem):
            return FqElem(self.field, self(x.value))
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def compose(self, other: "Poly") -> "Poly":
        acc = self._new([])
        for c in reversed(self.coeffs):
            acc = acc * other + Poly.constant(self.field, c, self.var)
        return acc

    def map_coeffs(self, field: FqField, table: Sequence[int], var: str | None = None) -> "Poly":
        """Push coefficients through a field embedding table."""
        return Poly(field, [table[c] for c in self.coeffs], var or self.var)

    def with_var(self, var: str) -> "Poly":
        return Poly(self.field, self.coeffs, var)

    # -- printing -----------------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        fmt = self.field.format
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                mono = ""
            elif i == 1:
                mono = self.var
            else:
                mono = f"{self.var}^{i}"
            if not mono:
                terms.append(fmt(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{fmt(c)}*{mono}")
        return "+".join(terms)

    def __repr__(self):
        return f"Poly({self})"

    def n_terms(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def sort_key(self):
        return (len(self.coeffs), tuple(reversed(self.coeffs)))


def all_polys(field: FqField, max_deg: int, var: str = "T", monic: bool = False):
    """Enumerate polynomials of degree <= max_deg (nonzero monic ones if monic)."""
    q = field.q
    if monic:
        for d in range(max_deg + 1):
            for code in range(q ** d):
                cs = [(code // q ** i) % q for i in range(d)] + [1]
                yield Poly(field, cs, var)
        return
    for code in range(q ** (max_deg + 1)):
        yield Poly(field, [(code // q ** i) % q for i in range(max_deg + 1)], var)


def random_poly(field: FqField, deg: int, rng, monic: bool = False, var: str = "T") -> Poly:
    if deg < 0:
        return Poly(field, [], var)
    cs = [rng.randrange(field.q) for _ in range(deg)]
    top = 1 if monic else rng.randrange(1, field.q)
    return Poly(field, cs + [top], var)
