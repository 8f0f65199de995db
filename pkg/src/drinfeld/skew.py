"""The twisted polynomial ring L{tau} with tau a = a^q tau.

Coefficients are duck-typed: anything with ring operations, truthiness for
zero and a ``frobenius(q)`` method works.  That covers FqElem, Poly (the
ring A itself), RatFunc and LaurentElem.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .base.fields import NEG_INF


class SkewRing:
    """L{tau} for a coefficient ring given by its zero and one."""

    def __init__(self, q: int, zero, one, name: str = "L"):
        self.q = q
        self.zero = zero
        self.one = one
        self.name = name

    def __repr__(self):
        return f"{self.name}{{tau}} (q={self.q})"

    def __call__(self, coeffs: Sequence) -> "SkewPoly":
        return SkewPoly(self, coeffs)

    def tau(self, k: int = 1) -> "SkewPoly":
        return SkewPoly(self, [self.zero] * k + [self.one])

    def constant(self, c) -> "SkewPoly":
        return SkewPoly(self, [c])


class SkewPoly:
    """sum_i a_i tau^i, lowest index first."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: SkewRing, coeffs: Sequence = ()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    def deg(self):
        """tau-degree, NEG_INF for 0."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    def lowest_index(self):
        """Index of the first nonzero coefficient (NEG_INF for 0)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return NEG_INF

    def constant(self):
        """The image under d: tau -> 0, i.e. a_0."""
        return self[0]

    def _coerce(self, other) -> "SkewPoly":
        if isinstance(other, SkewPoly):
            if other.ring is not self.ring and other.ring.q != self.ring.q:
                raise ValueError("skew polynomials over different rings")
            return other
        return SkewPoly(self.ring, [self.ring.zero + other])

    def __add__(self, other):
        o = self._coerce(other)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return SkewPoly(self.ring, [x + b[i] if i < len(b) else x for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return SkewPoly(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return SkewPoly(self.ring, [])
        q = self.ring.q
        out = [self.ring.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        b = list(o.coeffs)
        for i, a in enumerate(self.coeffs):
            if i:
                b = [c.frobenius(q) for c in b]  # b_j^{q^i}
            if not a:
                continue
            for j, c in enumerate(b):
                out[i + j] = out[i + j] + a * c
        return SkewPoly(self.ring, out)

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power in L{tau}")
        result = SkewPoly(self.ring, [self.ring.one])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, x, embed: Callable | None = None):
        """sum a_i x^{q^i}; ``embed`` maps coefficients into the ring of x."""
        q = self.ring.q
        acc = None
        xp = x
        for i, a in enumerate(self.coeffs):
            if i:
                xp = xp.frobenius(q)
            if not a:
                continue
            t = (embed(a) if embed else a) * xp
            acc = t if acc is None else acc + t
        if acc is None:
            return x - x
        return acc

    def map_coeffs(self, fn: Callable, ring: SkewRing) -> "SkewPoly":
        return SkewPoly(ring, [fn(c) for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, SkewPoly):
            try:
                other = self._coerce(other)
            except Exception:
                return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(tuple(hash(c) for c in self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("tau" if i == 1 else f"tau^{i}")
            cs = str(c)
            if not mono:
                terms.append(cs)
            elif cs == "1":
                terms.append(mono)
            else:
                if any(ch in cs for ch in "+- /") and not (cs.startswith("(") and cs.endswith(")")):
                    cs = f"({cs})"
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms)

    def __repr__(self):
        return f"SkewPoly({self})"


def parse_skew(text: str, ring: SkewRing, names: dict, const: Callable):
    """Parse ``tau^2 + (T+1)*tau + T`` with coefficient symbols from ``names``."""
    from .base.literal import parse_expression
    wrapped = {k: SkewPoly(ring, [v]) for k, v in names.items()}
    wrapped["tau"] = ring.tau()
    return parse_expression(text, wrapped, lambda k: SkewPoly(ring, [const(k)]))
