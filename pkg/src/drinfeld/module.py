"""Drinfeld A-modules for A = F_q[T].

An A-field is a field with a structure map gamma: A -> L.  Three carriers are
supported: K = F_q(T) with gamma(T) = T, finite fields (for example A/pi)
and Laurent towers over K_infinity.  A Drinfeld module is given by

    phi_T = gamma(T) + g_1 tau + ... + g_r tau^r,   g_r != 0.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field as dc_field
from math import gcd

from .base import linalg
from .base.factor import equal_degree_factor, is_irreducible, poly_factor
from .base.fields import MAX_FIELD_SIZE, NEG_INF, FqElem, FqField, fq_from_order, fq_make
from .base.laurent import LaurentElem, LaurentTower, laurent_tower, parse_laurent
from .base.literal import parse_expression, parse_ratfunc
from .base.poly import Poly
from .base.ratfunc import RatFunc
from .skew import SkewPoly, SkewRing


class TorsionCapError(ValueError):
    """The splitting field of a torsion polynomial exceeds the configured bound."""


class AField:
    """A field L together with gamma(T) in L."""

    def __init__(self, kind: str, base: FqField, zero, one, gammaT, char: Poly | None,
                 carrier=None, emb=None):
        self.kind = kind
        self.base = base
        self.q = base.q
        self.zero = zero
        self.one = one
        self.gammaT = gammaT
        self.char = char
        self.carrier = carrier
        self._emb = emb
        self.skew = SkewRing(self.q, zero, one, name=self.label())

    # -- constructors ---------------------------------------------------------------

    @classmethod
    def K(cls, base: FqField) -> "AField":
        """K = F_q(T), generic characteristic."""
        T = RatFunc.T(base)
        return cls("K", base, RatFunc.constant(base, 0), RatFunc.constant(base, 1), T, None)

    @classmethod
    def finite(cls, L: FqField, gammaT, base: FqField) -> "AField":
        """A finite field L containing F_q with a chosen gamma(T)."""
        emb = L.embedding_from(base)
        g = gammaT if isinstance(gammaT, FqElem) else L.elem(gammaT)
        char = _min_poly(g, base, emb)
        return cls("finite", base, L.zero, L.one, g, char, carrier=L, emb=emb)

    @classmethod
    def residue(cls, pi: Poly) -> "AField":
        """A/pi for a monic irreducible pi, realised as F_{q^deg pi} with gamma(T) a root of pi."""
        base = pi.field
        pi = pi.monic()
        if pi.degree < 1:
            raise ValueError("residue field needs a nonconstant pi")
        L = fq_make(base.p, base.n * pi.degree)
        emb = L.embedding_from(base)
        if not is_irreducible(pi):
            raise ValueError(f"{pi} is not irreducible")
        # pi splits into linear factors over L
        f = pi.map_coeffs(L, emb, "X")
        roots = [L.neg(g.coeffs[0]) for g in equal_degree_factor(f, 1, random.Random(0))]
        return cls.finite(L, L.elem(min(roots)), base)

    @classmethod
    def laurent(cls, tower: LaurentTower) -> "AField":
        return cls("laurent", tower.base, tower.zero(), tower.one(), tower.T(), None, carrier=tower)

    # -- elements --------------------------------------------------------------------

    def label(self) -> str:
        if self.kind == "K":
            return "K"
        if self.kind == "finite":
            return f"F_{self.carrier.q}"
        return f"K_inf(m={self.carrier.m},e={self.carrier.e})"

    def const(self, c):
        """Image of an element of F_q (int or FqElem of the base)."""
        if self.kind == "K":
            return RatFunc.constant(self.base, c)
        if self.kind == "laurent":
            return self.carrier.const(c if isinstance(c, FqElem) else self.base(c))
        v = c.value if isinstance(c, FqElem) else self.base.from_int(c)
        return FqElem(self.carrier, self._emb[v])

    def gamma(self, a: Poly):
        """gamma(a) by Horner in gamma(T)."""
        acc = self.zero
        for c in reversed(a.coeffs):
            acc = acc * self.gammaT + self.const(self.base.elem(c))
        return acc

    def coerce(self, x):
        if self.kind == "K":
            if isinstance(x, RatFunc):
                return x
            if isinstance(x, Poly):
                return RatFunc.from_poly(x)
            return RatFunc.constant(self.base, x)
        if self.kind == "finite":
            if isinstance(x, FqElem) and x.field is self.carrier:
                return x
            if isinstance(x, FqElem) and x.field is self.base:
                return self.const(x)
            if isinstance(x, int):
                return self.carrier.elem(x % self.carrier.p)
            raise ValueError(f"cannot coerce {x!r} into {self.label()}")
        if isinstance(x, LaurentElem):
            return x
        return self.carrier.embed(x)

    def parse(self, text: str, prec: int = 40):
        if self.kind == "K":
            return parse_ratfunc(text, self.base)
        if self.kind == "finite":
            L = self.carrier
            names = {"g": L.gen()} if L.n > 1 else {}
            return parse_expression(text, names, lambda k: L(k % L.p))
        return parse_laurent(text, self.carrier, prec)

    def format(self, x) -> str:
        if self.kind == "laurent":
            return json.dumps(x.to_json())
        return str(x)

    def __repr__(self):
        c = "inf" if self.char is None else str(self.char)
        return f"AField({self.label()}, gamma(T)={self.gammaT}, char={c})"


def _min_poly(g: FqElem, base: FqField, emb) -> Poly:
    L = g.field
    conj = []
    x = g
    while x not in conj:
        conj.append(x)
        x = x.frobenius(base.q)
    f = Poly(L, [1], "T")
    for c in conj:
        f = f * Poly(L, [L.neg(c.value), 1], "T")
    unemb = {v: k for k, v in enumerate(emb)}
    return Poly(base, [unemb[c] for c in f.coeffs])


@dataclass
class TorsionStructure:
    """Invariant factors d_1, d_2, ... (monic, each divisible by the next) of an A-torsion module."""

    invariant_factors: list
    q: int

    @property
    def order(self) -> int:
        return self.q ** sum(d.degree for d in self.invariant_factors)

    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return " + ".join(f"A/({d})" for d in self.invariant_factors)


@dataclass
class TorsionModule:
    """The a-division points as integers of a finite field E, with the A-action."""

    module: "DrinfeldModule"
    a: Poly
    field: FqField
    embed: tuple
    points: list = dc_field(default_factory=list)

    def __len__(self):
        return len(self.points)

    def act(self, b: Poly, x: int) -> int:
        """phi_b(x) for a point x."""
        f = self.module.phi(b)
        E = self.field
        return f(E.elem(x), embed=lambda c: E.elem(self.embed[c.value])).value

    def is_closed(self, bs=()) -> bool:
        pts = set(self.points)
        E = self.field
        for x in self.points:
            for y in self.points[:8]:
                if E.add(x, y) not in pts:
                    return False
            for b in bs:
                if self.act(b, x) not in pts:
                    return False
        return True


@dataclass
class IsomResult:
    isomorphic: bool
    over: str
    u: object = None
    reason: str = ""

    @property
    def morphism(self):
        """The constant f with f phi_a = psi_a f, namely u^{-1}."""
        if self.u is None:
            return None
        return self.u ** -1

    def __bool__(self):
        return self.isomorphic


class DrinfeldModule:
    """phi: A -> L{tau}, determined by phi_T."""

    def __init__(self, afield: AField, coeffs):
        gs = [afield.coerce(c) for c in coeffs]
        while gs and not gs[-1]:
            gs.pop()
        if len(gs) < 2:
            raise ValueError("rank 0: phi_T must have positive tau-degree")
        if not (gs[0] == afield.gammaT):
            raise ValueError("constant term of phi_T must be gamma(T)")
        self.afield = afield
        self.coeffs = tuple(gs)
        self.phi_T = SkewPoly(afield.skew, gs)

    @property
    def q(self) -> int:
        return self.afield.q

    @property
    def rank(self) -> int:
        return self.phi_T.degree

    @property
    def characteristic(self):
        """None for generic characteristic, else the monic irreducible generator of ker gamma."""
        return self.afield.char

    def g(self, i: int):
        return self.phi_T[i]

    def phi(self, a: Poly) -> SkewPoly:
        """phi_a by Horner in phi_T."""
        if a.field is not self.afield.base:
            raise ValueError("a must lie in A = F_q[T] of the module")
        acc = SkewPoly(self.afield.skew, [])
        for c in reversed(a.coeffs):
            acc = acc * self.phi_T + self.afield.const(self.afield.base.elem(c))
        return acc

    def height(self) -> int:
        pi = self.characteristic
        if pi is None:
            raise ValueError("height is only defined in finite characteristic")
        w = self.phi(pi).lowest_index()
        if w % pi.degree:
            raise ArithmeticError("lowest tau-index of phi_pi is not a multiple of deg pi")
        h = w // pi.degree
        if not 1 <= h <= self.rank:
            raise ArithmeticError(f"height {h} outside 1..rank")
        return h

    # -- torsion ----------------------------------------------------------------------

    def torsion_count(self, a: Poly) -> int:
        """Number of a-division points over the algebraic closure."""
        if not a:
            raise ValueError("a must be nonzero")
        f = self.phi(a)
        return self.q ** (f.degree - f.lowest_index())

    def torsion_structure(self, a: Poly) -> TorsionStructure:
        """Invariant factors of the a-division points over the closure.

        For each prime l^e || a the number of cyclic summands A/l^k with k >= j
        is read off from the torsion counts of l^j.
        """
        if not a or a.degree < 0:
            raise ValueError("a must be nonzero")
        if a.degree == 0:
            return TorsionStructure([], self.q)
        per_prime = []
        for ell, e in poly_factor(a):
            dims = [0]
            for j in range(1, e + 1):
                f = self.phi(ell ** j)
                dims.append((f.degree - f.lowest_index()) // ell.degree)
            mus = []
            for j in range(e, 0, -1):
                ge_j = dims[j] - dims[j - 1]
                while len(mus) < ge_j:
                    mus.append(j)
            per_prime.append((ell, mus))
        width = max((len(m) for _, m in per_prime), default=0)
        one = Poly.constant(a.field, 1)
        invs = []
        for k in range(width):
            d = one
            for ell, mus in per_prime:
                if k < len(mus):
                    d = d * ell ** mus[k]
            invs.append(d)
        return TorsionStructure(invs, self.q)

    def torsion_points(self, a: Poly, cap: int | None = None) -> TorsionModule:
        """All roots of phi_a(X) in its splitting field (finite carriers only)."""
        af = self.afield
        if af.kind != "finite":
            raise ValueError("torsion points are enumerated over finite A-fields only")
        if not a:
            raise ValueError("a must be nonzero")
        L = af.carrier
        q = self.q
        if cap is None:
            cap = min(L.q ** 12, MAX_FIELD_SIZE)
        f = self.phi(a)
        w = f.lowest_index()
        t = f.degree - w
        k = L.n // af.base.n  # [L : F_q]
        shift = (-w) % k
        # separable part: roots of phi_a are the roots of sum c_i^{q^-w} X^{q^(i-w)}
        sep = [L.pow(c.value, q ** shift) for c in f.coeffs[w:]]
        target = t * af.base.n
        s = 1
        while True:
            E_size = L.q ** s
            if E_size > cap:
                raise TorsionCapError(f"splitting field of phi_{a} exceeds the bound {cap}")
            E = fq_make(L.p, L.n * s)
            emb = E.embedding_from(L)
            sep_e = [emb[c] for c in sep]
            basis = _kernel(E, sep_e, q)
            if len(basis) == target:
                break
            s += 1
        pts = _span(E, basis)
        return TorsionModule(self, a, E, emb, sorted(pts))

    # -- isomorphisms -------------------------------------------------------------------

    def isom_test(self, other: "DrinfeldModule", over: str = "closure") -> IsomResult:
        """Decide whether g'_i = u^{q^i - 1} g_i has a solution u (in L or in its closure)."""
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        if over not in ("base", "closure"):
            raise ValueError("over must be 'base' or 'closure'")
        if other.afield is not self.afield and not (other.afield.gammaT == self.afield.gammaT):
            raise ValueError("modules over different A-fields")
        q = self.q
        support = [i for i in range(1, self.rank + 1) if self.g(i)]
        if support != [i for i in range(1, other.rank + 1) if other.g(i)]:
            return IsomResult(False, over, reason="different tau-supports")
        ratios = {i: other.g(i) / self.g(i) for i in support}
        exps = [q ** i - 1 for i in support]
        d, bez = _xgcd_list(exps)
        H = self.afield.one
        for i, n in zip(support, bez):
            if n:
                H = H * ratios[i] ** n
        for i in support:
            if not (H ** ((q ** i - 1) // d) == ratios[i]):
                return IsomResult(False, over, reason=f"u^{q ** i - 1} constraint inconsistent")
        u = _dth_root(self.afield, H, d)
        if over == "base" and u is None:
            return IsomResult(False, over, reason=f"no {d}-th root of {H} in {self.afield.label()}")
        return IsomResult(True, over, u=u)

    def twist(self, u) -> "DrinfeldModule":
        """The module with g'_i = u^{q^i - 1} g_i."""
        q = self.q
        u = self.afield.coerce(u)
        gs = [self.coeffs[0]] + [u ** (q ** i - 1) * c for i, c in enumerate(self.coeffs) if i]
        return DrinfeldModule(self.afield, gs)

    def j_invariant(self):
        if self.rank != 2:
            raise ValueError("j-invariant is defined here for rank 2")
        return self.g(1) ** (self.q + 1) / self.g(2)

    # -- serialization ------------------------------------------------------------------

    def to_json(self) -> dict:
        af = self.afield
        if af.kind == "K":
            base = "K"
        elif af.kind == "finite":
            base = f"Fq^{af.carrier.n // af.base.n}"
        else:
            base = "laurent"
        out = {"q": self.q, "base": base, "gammaT": af.format(af.gammaT),
               "phiT": [af.format(c) for c in self.coeffs]}
        if af.kind == "finite":
            out["char"] = str(af.char)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "DrinfeldModule":
        base = fq_from_order(int(data["q"]))
        kind = data["base"]
        if kind == "K":
            af = AField.K(base)
        elif kind.startswith("Fq^"):
            k = int(kind[3:])
            L = fq_make(base.p, base.n * k)
            probe = AField.finite(L, L.one, base)
            af = AField.finite(L, probe.parse(data["gammaT"]), base)
        elif kind == "laurent":
            af = AField.laurent(laurent_tower(base, int(data.get("m", 2)), int(data.get("e", 1))))
        else:
            raise ValueError(f"unknown base {kind!r}")
        if kind == "laurent":
            coeffs = [af.carrier.from_json(c) if isinstance(c, dict) else af.parse(c) for c in data["phiT"]]
        else:
            coeffs = [af.parse(c) for c in data["phiT"]]
        return cls(af, coeffs)

    def __repr__(self):
        return f"DrinfeldModule(phi_T = {self.phi_T} over {self.afield.label()})"


def _kernel(E: FqField, coeffs, q: int) -> list[list[int]]:
    """F_p-basis (as digit vectors) of the kernel of x -> sum c_i x^{q^i} on E."""
    p = E.p
    cols = []
    for b in range(E.n):
        x = E.from_digits([int(i == b) for i in range(E.n)])
        acc = 0
        xp = x
        for i, c in enumerate(coeffs):
            if i:
                xp = E.pow(xp, q)
            if c:
                acc = E.add(acc, E.mul(c, xp))
        cols.append(E.digits(acc))
    rows = [[cols[c][r] for c in range(E.n)] for r in range(E.n)]
    return linalg.nullspace(rows, E.n, p)


def _span(E: FqField, basis) -> list[int]:
    p = E.p
    pts = [0]
    for v in basis:
        x = E.from_digits(v)
        mult = [0]
        for c in range(1, p):
            mult.append(E.mul(E.from_int(c), x))
        pts = [E.add(y, m) for y in pts for m in mult]
    return pts


def _xgcd_list(ns: list[int]) -> tuple[int, list[int]]:
    """gcd of ns and integer coefficients c with sum c_i n_i = gcd."""
    g = ns[0]
    coefs = [1] + [0] * (len(ns) - 1)
    for k in range(1, len(ns)):
        a, b = g, ns[k]
        x0, x1, y0, y1 = 1, 0, 0, 1
        while b:
            t = a // b
            a, b = b, a - t * b
            x0, x1 = x1, x0 - t * x1
            y0, y1 = y1, y0 - t * y1
        g = a
        coefs = [c * x0 for c in coefs]
        coefs[k] = y0
    return g, coefs


def _dth_root(af: AField, H, d: int):
    """Some u in L with u^d = H, or None."""
    if d == 1:
        return H
    if af.kind == "finite":
        L = af.carrier
        if not H:
            return None
        k = L.log(H.value)
        N = L.q - 1
        g = gcd(d, N)
        if k % g:
            return None
        # solve d*l = k mod N
        l = (k // g) * pow(d // g, -1, N // g) % (N // g) if N // g > 1 else 0
        return FqElem(L, L.exp(l))
    if af.kind == "K":
        base = af.base
        parts = []
        for poly, sign in ((H.num, 1), (H.den, -1)):
            for f, e in poly_factor(poly):
                if e % d:
                    return None
                parts.append((f, sign * e // d))
        lc = H.num.lc
        k = base.log(lc)
        N = base.q - 1
        g = gcd(d, N)
        if k % g:
            return None
        l = (k // g) * pow(d // g, -1, N // g) % (N // g) if N // g > 1 else 0
        u = RatFunc.constant(base, base.elem(base.exp(l)))
        for f, e in parts:
            u = u * RatFunc.from_poly(f) ** e
        return u
    return None
