"""Finite fields F_{p^n} with table-driven arithmetic.

Elements are encoded as integers whose base-p digits are the coefficients
of the element in the power basis 1, y, ..., y^{n-1}, where y is a root of
the field modulus.  Every modulus used here is primitive, so y generates the
multiplicative group and multiplication runs through exp/log tables.
"""

from __future__ import annotations

import functools
from typing import Iterator

MAX_FIELD_SIZE = 2 ** 20


class _NegInf:
    """Degree of the zero polynomial: below every integer, absorbing under +."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-inf"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("NEG_INF")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("-inf - -inf")
        return self

    def __neg__(self):
        raise ArithmeticError("+inf is not a degree")


NEG_INF = _NegInf()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def factor_int(n: int) -> dict[int, int]:
    """Trial-division factorisation; inputs here never exceed ~2^40."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# Conway polynomials, low degree first, monic.  Version 1 of the table;
# changing an entry changes how every non-prime element prints.
MODULUS_TABLE_VERSION = 1
MODULUS_TABLE: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (3, 1): (1, 1),
    (5, 1): (3, 1),
    (7, 1): (4, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 4, 1),
}


def _poly_mulmod_fp(a, b, f, p):
    # plain lists over F_p, f monic
    n = len(f) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] = (res[i + j] + x * y) % p
    for k in range(len(res) - 1, n - 1, -1):
        c = res[k]
        if c:
            for i in range(n + 1):
                res[k - n + i] = (res[k - n + i] - c * f[i]) % p
    res = res[:n]
    while res and res[-1] == 0:
        res.pop()
    return res


def _poly_powmod_fp(base, e, f, p):
    result = [1]
    b = list(base)
    while e:
        if e & 1:
            result = _poly_mulmod_fp(result, b, f, p)
        b = _poly_mulmod_fp(b, b, f, p)
        e >>= 1
    return result


def is_primitive_modulus(f: tuple[int, ...], p: int) -> bool:
    """True if the monic f over F_p is irreducible with x of order p^n - 1."""
    n = len(f) - 1
    if n == 1:
        root = (-f[0]) % p
        if root == 0:
            return False
        order = p - 1
        return all(pow(root, order // r, p) != 1 for r in factor_int(order)) if order > 1 else True
    if f[0] % p == 0:
        return False
    order = p ** n - 1
    if _poly_powmod_fp([0, 1], order, f, p) != [1]:
        return False
    return all(_poly_powmod_fp([0, 1], order // r, f, p) != [1] for r in factor_int(order))


def _search_primitive(p: int, n: int) -> tuple[int, ...]:
    # lexicographically least primitive monic, deterministic
    for code in range(p ** n):
        digits = [(code // p ** i) % p for i in range(n)]
        f = tuple(digits) + (1,)
        if is_primitive_modulus(f, p):
            return f
    raise RuntimeError(f"no primitive polynomial found for {p}^{n}")


class FqField:
    """The finite field with p^n elements.

    Use :func:`fq_make` (cached) rather than the constructor.
    """

    def __init__(self, p: int, n: int, modulus: tuple[int, ...] | None = None):
        self.p = p
        self.n = n
        self.q = p ** n
        if modulus is None:
            modulus = MODULUS_TABLE.get((p, n)) or _search_primitive(p, n)
        self.modulus = tuple(modulus)
        q = self.q
        self._pw = [p ** i for i in range(n + 1)]
        exp = [0] * (2 * (q - 1))
        log: list[int | None] = [None] * q
        if n == 1:
            g = (-self.modulus[0]) % p
            x = 1
            for i in range(q - 1):
                exp[i] = x
                log[x] = i
                x = x * g % p
        elif p == 2:
            red = sum(c << i for i, c in enumerate(self.modulus))
            top = 1 << n
            x = 1
            for i in range(q - 1):
                exp[i] = x
                log[x] = i
                x <<= 1
                if x & top:
                    x ^= red
        else:
            f = self.modulus
            digits = [1] + [0] * (n - 1)
            for i in range(q - 1):
                v = sum(d * self._pw[j] for j, d in enumerate(digits))
                exp[i] = v
                log[v] = i
                c = digits[-1]
                digits = [0] + digits[:-1]
                if c:
                    digits = [(digits[j] - c * f[j]) % p for j in range(n)]
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        if q > 1 and log.count(None) != 1:
            raise ValueError(f"modulus {self.modulus} is not primitive over F_{p}")
        self._exp = exp
        self._log = log
        self._zech: list[int | None] | None = None
        if p != 2 and n > 1:
            zech: list[int | None] = [None] * (q - 1)
            for k in range(q - 1):
                s = self._add_digits(1, exp[k])
                zech[k] = log[s] if s else None
            self._zech = zech

    def __repr__(self):
        return f"FqField(p={self.p}, n={self.n})"

    def __reduce__(self):
        return (fq_make, (self.p, self.n))

    def __len__(self):
        return self.q

    # -- raw integer arithmetic -------------------------------------------------

    def _add_digits(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        m = 1
        while a or b:
            out += ((a % p + b % p) % p) * m
            a //= p
            b //= p
            m *= p
        return out

    def add(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if not a:
            return b
        if not b:
            return a
        la = self._log[a]
        d = self._zech[(self._log[b] - la) % (self.q - 1)]
        if d is None:
            return 0
        return self._exp[(la + d) % (self.q - 1)]

    def neg(self, a: int) -> int:
        if not a or self.p == 2:
            return a
        if self.n == 1:
            return self.p - a
        # -1 = y^{(q-1)/2} for odd q
        return self._exp[self._log[a] + (self.q - 1) // 2]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.q)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if not a:
            if e < 0:
                raise ZeroDivisionError("0 ** negative")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def log(self, a: int) -> int:
        if not a:
            raise ValueError("log of 0")
        return self._log[a]

    def exp(self, k: int) -> int:
        return self._exp[k % (self.q - 1)]

    def from_int(self, k: int) -> int:
        """Image of the integer k (an element of the prime field)."""
        return k % self.p

    def digits(self, a: int) -> list[int]:
        p = self.p
        return [(a // self._pw[i]) % p for i in range(self.n)]

    def from_digits(self, ds) -> int:
        return sum((int(d) % self.p) * self._pw[i] for i, d in enumerate(ds))

    @property
    def generator(self) -> int:
        return self._exp[1] if self.q > 2 else 1

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        from math import gcd
        return (self.q - 1) // gcd(self._log[a], self.q - 1)

    # -- element wrapper --------------------------------------------------------

    def __call__(self, v) -> "FqElem":
        if isinstance(v, FqElem):
            if v.field is not self:
                raise ValueError("element of a different field")
            return v
        return FqElem(self, self.from_int(v) if self.n == 1 else int(v))

    def elem(self, v: int) -> "FqElem":
        """Wrap a raw integer-encoded value without reduction."""
        return FqElem(self, v)

    @property
    def zero(self) -> "FqElem":
        return FqElem(self, 0)

    @property
    def one(self) -> "FqElem":
        return FqElem(self, 1)

    def gen(self) -> "FqElem":
        return FqElem(self, self.generator)

    # -- literal form -----------------------------------------------------------

    def format(self, a: int) -> str:
        if self.n == 1 or a in (0, 1):
            return str(a)
        return f"g^{self._log[a]}"

    # -- subfields ----------------------------------------------------------------

    def is_subfield_element(self, a: int, sub_q: int) -> bool:
        return self.pow(a, sub_q) == a

    @functools.lru_cache(maxsize=None)
    def embedding_from(self, sub: "FqField") -> tuple[int, ...]:
        """Table t with t[x] the image of x in self, for a field embedding sub -> self.

        The generator of ``sub`` is sent to the first power y^k (k a multiple
        of (Q-1)/(q-1)) that is a root of the modulus of ``sub``.
        """
        if sub.p != self.p or self.n % sub.n:
            raise ValueError(f"F_{sub.q} does not embed in F_{self.q}")
        if sub is self:
            return tuple(range(self.q))
        step = (self.q - 1) // (sub.q - 1)
        f = sub.modulus
        for t in range(sub.q - 1):
            cand = self._exp[(step * t) % (self.q - 1)] if sub.q > 2 else 1
            acc = 0
            for c in reversed(f):
                acc = self.add(self.mul(acc, cand), self.from_int(c))
            if acc == 0 and (sub.q == 2 or self.order(cand) == sub.q - 1):
                k = self._log[cand]
                table = [0] * sub.q
                for i in range(sub.q - 1):
                    table[sub._exp[i]] = self._exp[(k * i) % (self.q - 1)]
                return tuple(table)
        raise RuntimeError("no root of the submodulus found")


class FqElem:
    """An element of a finite field, immutable and hashable."""

    __slots__ = ("field", "value")

    def __init__(self, field: FqField, value: int):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FqElem):
            if other.field is not self.field:
                raise ValueError("field mismatch")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElem(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElem(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElem(self.field, self.field.sub(o, self.value))

    def __neg__(self):
        return FqElem(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElem(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElem(self.field, self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElem(self.field, self.field.div(o, self.value))

    def __pow__(self, e: int):
        return FqElem(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FqElem(self.field, self.field.inv(self.value))

    def frobenius(self, q: int) -> "FqElem":
        return FqElem(self.field, self.field.pow(self.value, q))

    def __eq__(self, other):
        if isinstance(other, FqElem):
            return self.field is other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return self.field.format(self.value)

    __str__ = __repr__


@functools.lru_cache(maxsize=None)
def fq_make(p: int, n: int = 1) -> FqField:
    """Return the (cached) field with p^n elements.

    >>> F = fq_make(3, 2)
    >>> F.q, F.order(F.generator)
    (9, 8)
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be positive")
    if p ** n > MAX_FIELD_SIZE:
        raise ValueError(f"field size {p}^{n} exceeds the supported bound 2^20")
    return FqField(p, n)


def fq_from_order(q: int) -> FqField:
    """Field of order q given as a prime power."""
    f = factor_int(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, n), = f.items()
    return fq_make(p, n)
