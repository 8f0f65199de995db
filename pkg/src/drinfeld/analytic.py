"""Rank-2 lattice functions on the Drinfeld half-plane, at finite precision.

For z in Omega the lattice Lambda_z = Az + A is first put in a reduced basis
(w1, w2): |a w1 + b w2| = max(|a w1|, |b w2|).  The F_q-space

    W = {a w1 + b w2 : deg a <= D1, deg b <= D2}

has the additive polynomial e_W(X) = X prod_{0 != l in W} (1 - X/l), built by
the chain f_0 = X, f_j = f_{j-1} - beta_j f_{j-1}^q with
beta_j = f_{j-1}(v_j)^{1-q} over an F_q-basis v_j of W in increasing size.
Every lattice point outside W has valuation <= vB, which gives the tail
bounds:

    e_Lambda(x) = e_W(x) (1 + O(x / pi^vB))
    E_k - E_k(W) = O(pi^{-k vB})

Eisenstein sums come from e_W via Newton identities on X/e_W(X), never by
enumerating the q^{D1+D2+2} lattice points.

All valuations and precisions are integers in units of pi.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .base.fields import NEG_INF
from .base.laurent import LaurentElem, LaurentTower, PrecisionError, laurent_tower, parse_laurent
from .base.poly import Poly
from .base.ratfunc import RatFunc
from .module import AField, DrinfeldModule

MAX_REFINE = 6


# -- imaginary part ---------------------------------------------------------------------


@dataclass(frozen=True)
class QPower:
    """The real number q^exponent (exponent NEG_INF stands for 0)."""

    q: int
    exponent: object

    def is_zero(self) -> bool:
        return self.exponent is NEG_INF

    def __float__(self):
        return 0.0 if self.is_zero() else float(self.q) ** float(self.exponent)

    def __str__(self):
        if self.is_zero():
            return "0"
        e = self.exponent
        return f"q^{e}" if Fraction(e).denominator == 1 else f"q^({e})"


def imaginary_log(z: LaurentElem):
    """log_q |z|_i, with |z|_i the distance from z to K_infinity; NEG_INF if z looks real."""
    e = z.tower.e
    best = NEG_INF
    for (i, j), x in z.components().items():
        if (i, j) == (0, 0) or x.is_zero():
            continue
        v = -x.valuation() - Fraction(i, e)
        if best is NEG_INF or v > best:
            best = v
    return best


def imaginary_abs(z: LaurentElem) -> QPower:
    return QPower(z.tower.q, imaginary_log(z))


# -- points of Omega ----------------------------------------------------------------------


class OmegaPoint:
    """A point z of Omega with a reduced basis of Lambda_z = Az + A.

    ``M`` holds the coordinates of the basis: (w1, w2)^T = M (z, 1)^T with
    M in GL(2, A).
    """

    def __init__(self, z: LaurentElem):
        self.z = z
        self.tower = z.tower
        self.q = z.tower.q
        self.imag_log = imaginary_log(z)
        if self.imag_log is NEG_INF:
            raise ValueError("z is indistinguishable from an element of K_infinity")
        self.w1, self.w2, self.M = _reduce(z)
        self._lattices: list[TruncatedLattice] = []
        self.last_lattice = None

    @classmethod
    def parse(cls, text: str, q: int, m: int = 2, prec: int = 200) -> "OmegaPoint":
        from .base.fields import fq_from_order
        tw = laurent_tower(fq_from_order(q), m, 1)
        return cls(parse_laurent(text, tw, prec))

    def imaginary_abs(self) -> QPower:
        return QPower(self.q, self.imag_log)

    def act(self, gamma, rel: int = 200) -> "OmegaPoint":
        """The point (az+b)/(cz+d) for gamma = ((a, b), (c, d)) in GL(2, A)."""
        (a, b), (c, d) = gamma
        tw = self.tower
        num = tw.from_poly(a) * self.z + tw.from_poly(b)
        den = tw.from_poly(c) * self.z + tw.from_poly(d)
        return OmegaPoint(num * den.inverse(rel=rel))

    def automorphy(self, gamma, rel: int = 200) -> LaurentElem:
        (_, _), (c, d) = gamma
        tw = self.tower
        return tw.from_poly(c) * self.z + tw.from_poly(d)

    def coset_rep(self, u, prec: int) -> tuple[LaurentElem | None, tuple]:
        """u1 z + u2 moved into the fundamental box of the reduced basis.

        Returns (lambda0, (c1, c2)) with lambda0 = c1 w1 + c2 w2, deg c_i < 0,
        or (None, (0, 0)) when u lies in A^2.
        """
        u1, u2 = (_as_rat(x, self.q) for x in u)
        (p1, q1), (p2, q2) = self.M
        det = p1 * q2 - q1 * p2
        dinv = RatFunc.from_poly(det).inverse()
        c1 = (u1 * q2 - u2 * p2) * dinv
        c2 = (u2 * p1 - u1 * q1) * dinv
        c1 = c1 - RatFunc.from_poly(c1.floor())
        c2 = c2 - RatFunc.from_poly(c2.floor())
        if not c1 and not c2:
            return None, (c1, c2)
        tw = self.tower
        lam = tw.zero()
        for c, w in ((c1, self.w1), (c2, self.w2)):
            if c:
                cprec = prec - w.val
                lam = lam + tw.from_ratfunc(c, cprec if c.den.n_terms() > 1 else None) * w
        return lam, (c1, c2)

    def reduce_mod_lattice(self, x: LaurentElem, rel: int = 64) -> LaurentElem:
        """x - (a w1 + b w2) with a, b the polynomial parts of the K_infinity-coordinates of x.

        e_Lambda is Lambda-periodic, and evaluating its series at a small
        representative avoids the cancellation that makes e(x) tiny while the
        individual terms are huge.  Needs [tower : K_infinity] = 2; otherwise x
        is returned unchanged.
        """
        tw = self.tower
        if tw.e * tw.m != 2 or x.is_zero():
            return x
        k0, k1 = sorted(x.components())
        X, W1, W2 = x.components(), self.w1.components(), self.w2.components()
        det = W1[k0] * W2[k1] - W1[k1] * W2[k0]
        c1 = _div(X[k0] * W2[k1] - X[k1] * W2[k0], det, rel)
        c2 = _div(W1[k0] * X[k1] - W1[k1] * X[k0], det, rel)
        try:
            a, b = c1.polynomial_part(), c2.polynomial_part()
        except PrecisionError:
            return x
        if a:
            x = x - tw.from_poly(a) * self.w1
        if b:
            x = x - tw.from_poly(b) * self.w2
        return x

    def lattice(self, vB: int, rel: int, D=None) -> "TruncatedLattice":
        """A cached truncation with tail valuation <= vB, or the fixed box D if given."""
        for lat in self._lattices:
            if lat.rel < rel:
                continue
            if (D is None and lat.vB <= vB) or (D is not None and lat.D == _pair(D)):
                self.last_lattice = lat
                return lat
        if D is None:
            lat = TruncatedLattice.for_tail(self, vB, rel)
        else:
            lat = TruncatedLattice(self, D, rel)
        self._lattices.append(lat)
        self.last_lattice = lat
        return lat

    def __repr__(self):
        return f"OmegaPoint({self.z})"


def _div(a: LaurentElem, b: LaurentElem, rel: int) -> LaurentElem:
    if b.is_exact() and b.length > 1:
        return a * b.inverse(rel=rel)
    return a / b


def _pair(D):
    return (D, D) if isinstance(D, int) else tuple(D)


def _as_rat(x, q):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc.from_poly(x)
    raise TypeError("coordinates of u must be rational functions")


def _reduce(z: LaurentElem):
    tw = z.tower
    F = tw.base
    zero, one = Poly(F, []), Poly.constant(F, 1)
    v1, c1 = tw.one(), (zero, one)
    v2, c2 = z, (one, zero)
    for _ in range(10_000):
        w = _div(v2, v1, 64 + abs(v2.val - v1.val))
        il = imaginary_log(w)
        if il is NEG_INF:
            raise PrecisionError("lost the imaginary part of z during reduction")
        a = w.components()[(0, 0)].polynomial_part()
        if a:
            v2 = v2 - tw.from_poly(a) * v1
            c2 = (c2[0] - a * c1[0], c2[1] - a * c1[1])
        if il >= 0:
            return v1, v2, (c1, c2)
        v1, v2 = v2, v1
        c1, c2 = c2, c1
    raise RuntimeError("lattice reduction did not terminate")


# -- additive polynomials of F_q-spaces ---------------------------------------------------


class LatticeChain:
    """e_V(X) = sum a_i X^{q^i} for the F_q-span V of the given vectors.

    ``vectors`` must be orthogonal-ish and sorted by increasing size; ``rel``
    caps the relative precision of every intermediate quantity.
    """

    def __init__(self, tower: LaurentTower, vectors: list[LaurentElem], rel: int):
        self.tower = tower
        self.q = tower.q
        self.rel = rel
        R = rel
        a = [tower.one()]
        self.betas = []
        for v in vectors:
            y = self.eval(a, v)
            if y.is_zero():
                raise PrecisionError("basis vector collapsed to 0 in the lattice chain",
                                     achievable=y.absprec())
            beta = (y * y.frobenius(rel=R).inverse()).with_rel(R)
            self.betas.append(beta)
            new = [a[0]]
            for i in range(1, len(a) + 1):
                t = (beta * a[i - 1].frobenius(rel=R)).with_rel(R)
                new.append((a[i] - t).with_rel(R) if i < len(a) else -t)
            a = new
        self.coeffs = a

    def eval(self, coeffs, x: LaurentElem) -> LaurentElem:
        R = self.rel
        acc = None
        xp = x
        for i, c in enumerate(coeffs):
            if i:
                xp = xp.frobenius(rel=R)
            t = (c * xp).with_rel(R)
            acc = t if acc is None else acc + t
        return acc

    def __call__(self, x: LaurentElem) -> LaurentElem:
        return self.eval(self.coeffs, x)


class TruncatedLattice:
    """e_W for W = {a w1 + b w2 : deg a <= D1, deg b <= D2} in a reduced basis."""

    def __init__(self, point: OmegaPoint, D, rel: int = 60):
        D1, D2 = _pair(D)
        if D1 < 0 and D2 < 0:
            raise ValueError("empty truncation")
        self.point = point
        self.tower = tw = point.tower
        self.q = tw.q
        self.D = (D1, D2)
        self.rel = rel
        e = tw.e
        T = tw.T()
        vecs = []
        for idx, (w, Dj) in enumerate(((point.w1, D1), (point.w2, D2))):
            x = w
            for i in range(Dj + 1):
                vecs.append((-x.val, idx, i, x))
                x = x * T
        vecs.sort(key=lambda t: t[:3])
        self.basis = [v for *_, v in vecs]
        self.vB = max(point.w1.val - e * (D1 + 1), point.w2.val - e * (D2 + 1))
        self.chain = LatticeChain(tw, self.basis, rel)

    @classmethod
    def for_tail(cls, point: OmegaPoint, vB: int, rel: int) -> "TruncatedLattice":
        """Smallest box whose excluded lattice points all have valuation <= vB."""
        e = point.tower.e
        Ds = [max(-1, -((vB - w.val) // e) - 1) for w in (point.w1, point.w2)]
        return cls(point, tuple(Ds), rel)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def coeffs(self) -> list[LaurentElem]:
        return self.chain.coeffs

    def e_W(self, x: LaurentElem) -> LaurentElem:
        return self.chain(x)

    def exp(self, x: LaurentElem) -> LaurentElem:
        """e_Lambda(x), precision lowered to what the tail bound guarantees."""
        x = self.point.reduce_mod_lattice(x)
        y = self.chain(x)
        if x.is_zero():
            return y
        gain = x.val - self.vB
        if gain <= 0:
            raise PrecisionError("argument too large for this truncation", achievable=None)
        if y.is_zero():
            return y
        return y.truncate(y.val + gain)

    def _tail(self, k: int) -> int:
        return -k * self.vB

    def eisenstein(self, k: int) -> LaurentElem:
        """E_k = sum' 1/l^k via X/e_W(X) = 1 - sum_k E_k X^k."""
        if k < 1:
            raise ValueError("weight must be positive")
        q = self.q
        a = self.coeffs
        R = self.rel
        tw = self.tower
        s = [tw.one()]
        for n in range(1, k + 1):
            acc = tw.zero()
            i = 1
            while i < len(a) and q ** i - 1 <= n:
                acc = acc + (a[i] * s[n - (q ** i - 1)]).with_rel(R)
                i += 1
            s.append(-acc)
        val = -s[k]
        return val.truncate(self._tail(k))

    def eisenstein_partial(self, k: int, u, lam0: LaurentElem | None = None,
                           method: str = "auto") -> LaurentElem:
        """E_{k,u} = sum over l = u1 z + u2 mod Lambda of 1/l^k.

        Coefficients t_n of 1/(e_W(x) - e_W(X)) = sum_n t_n X^n satisfy
        E_{k,u}(W) = t_{k-1}.  With method "auto" the weight-1 case uses
        E_{1,u} = 1/e_Lambda(lambda0), whose error is relative rather than absolute.
        """
        if k < 1:
            raise ValueError("weight must be positive")
        if lam0 is None:
            lam0, _ = self.point.coset_rep(u, self._tail(k) + 4 * self.rel)
        if lam0 is None:
            return self.eisenstein(k)
        if lam0.val <= self.vB:
            raise PrecisionError("coset representative outside the truncated box")
        if k == 1 and method == "auto":
            # sum 1/(x - l) = 1/e_Lambda(x): relative error instead of absolute
            return self.exp(lam0).inverse()
        q = self.q
        a = self.coeffs
        R = self.rel
        ex = self.chain(lam0)
        inv = ex.inverse()
        t = [inv]
        for n in range(1, k):
            acc = self.tower.zero()
            i = 0
            while i < len(a) and q ** i <= n:
                acc = acc + (a[i] * t[n - q ** i]).with_rel(R)
                i += 1
            t.append((inv * acc).with_rel(R))
        return t[k - 1].truncate(self._tail(k))

    def division_value(self, u) -> LaurentElem:
        """e_u = e_Lambda(u1 z + u2)."""
        lam0, _ = self.point.coset_rep(u, 4 * self.rel - self.vB)
        if lam0 is None:
            return self.tower.zero()
        return self.exp(lam0)

    def phi_T(self) -> tuple[LaurentElem, LaurentElem]:
        """(g, Delta) of phi_T = T + g tau + Delta tau^2 from the T-torsion e(w1/T), e(w2/T)."""
        tw = self.tower
        R = self.rel
        e = tw.e
        inv_T = tw.monomial(e)
        t1 = self.exp(self.point.w1 * inv_T)
        t2 = self.exp(self.point.w2 * inv_T)
        b1 = (t1 * t1.frobenius(rel=R).inverse()).with_rel(R)
        f2 = t2 - (b1 * t2.frobenius(rel=R)).with_rel(R)
        b2 = (f2 * f2.frobenius(rel=R).inverse()).with_rel(R)
        T = tw.T()
        g = -(T * (b1 + b2))
        delta = T * b2 * b1.frobenius(rel=R)
        return g, delta


# -- adaptive front ends -------------------------------------------------------------------


def _as_point(z) -> OmegaPoint:
    return z if isinstance(z, OmegaPoint) else OmegaPoint(z)


def _refine(compute, N: int, what: str):
    """Run compute(extra) with growing slack until every output reaches precision N."""
    extra = 8
    best = None
    for _ in range(MAX_REFINE):
        out = compute(extra)
        vals = out if isinstance(out, tuple) else (out,)
        precs = [x.prec for x in vals if x.prec is not None]
        worst = min(precs) if precs else None
        if worst is None or worst >= N:
            return out
        best = worst if best is None else max(best, worst)
        extra += (N - worst) + extra
    raise PrecisionError(f"{what}: precision {N} not reached", achievable=Fraction(best or 0))


def eisenstein(k: int, z, N: int = 40, D=None) -> LaurentElem:
    """E_k(z) to absolute precision N (D fixes the truncation box instead)."""
    if k < 1:
        raise ValueError("weight must be positive")
    P = _as_point(z)

    def run(extra):
        vB = -((N + extra) // k + 1)
        return P.lattice(vB, N + extra, D).eisenstein(k)
    return _refine(run, N, f"E_{k}")


def eisenstein_partial(k: int, u, z, N: int = 40, D=None, method: str = "auto") -> LaurentElem:
    """E_{k,u}(z) to absolute precision N."""
    if k < 1:
        raise ValueError("weight must be positive")
    P = _as_point(z)

    def run(extra):
        vB = -((N + extra) // k + 1)
        lam0, _ = P.coset_rep(u, N + 4 * extra + 40)
        if lam0 is not None:
            vB = min(vB, lam0.val - 1)
        lat = P.lattice(vB, N + extra, D)
        return lat.eisenstein_partial(k, u, lam0, method)
    return _refine(run, N, f"E_{k},u")


def lattice_exp(w: LaurentElem, z, N: int = 40, D=None) -> LaurentElem:
    """e_{Lambda_z}(w) to absolute precision N."""
    P = _as_point(z)
    w = P.reduce_mod_lattice(w)
    if w.is_zero():
        return w

    def run(extra):
        vB = w.val - (N + extra) - max(0, -w.val)
        return P.lattice(vB, N + extra, D).exp(w)
    return _refine(run, N, "e_Lambda")


def division_value(u, z, N: int = 40, D=None) -> LaurentElem:
    """e_u(z) = e_Lambda(u1 z + u2); exactly 0 for u in A^2."""
    P = _as_point(z)

    def run(extra):
        lam0, _ = P.coset_rep(u, N + 4 * extra + 40)
        if lam0 is None:
            return P.tower.zero()
        vB = lam0.val - (N + extra) - max(0, -lam0.val)
        return P.lattice(vB, N + extra, D).exp(lam0)
    return _refine(run, N, "e_u")


def phi_from_lattice(z, N: int = 40, D=None) -> tuple[LaurentElem, LaurentElem]:
    """(g(z), Delta(z)) to absolute precision N, with Delta distinguishable from 0."""
    P = _as_point(z)
    e = P.tower.e

    def run(extra):
        vB = P.w2.val + e - (N + extra)
        return P.lattice(vB, N + extra, D).phi_T()
    g, d = _refine(run, N, "phi_T")
    extra = 8
    while d.is_zero():
        extra *= 2
        if extra > 8 * (N + 64) or D is not None:
            raise PrecisionError("Delta indistinguishable from 0", achievable=d.absprec())
        vB = P.w2.val + e - (N + extra)
        g, d = P.lattice(vB, N + extra).phi_T()
    return g, d


def functional_equation_residual(w: LaurentElem, z, N: int = 40, a: Poly | None = None) -> LaurentElem:
    """e_Lambda(a w) - phi_a(e_Lambda(w)) (default a = T), with precision at least N - 5."""
    P = _as_point(z)
    tw = P.tower
    if a is None:
        a = Poly.gen(tw.base)
    M = N
    for _ in range(MAX_REFINE):
        phi = drinfeld_module_at(P, M).phi(a)
        r = lattice_exp(tw.from_poly(a) * w, P, M) - phi(lattice_exp(w, P, M))
        if r.prec is None or r.prec >= N - 5:
            return r
        M += (N - r.prec) + 8
    raise PrecisionError("functional equation: precision not reached", achievable=r.absprec())


def drinfeld_module_at(z, N: int = 40) -> DrinfeldModule:
    """phi^{(z)} over the Laurent tower."""
    P = _as_point(z)
    g, d = phi_from_lattice(P, N)
    af = AField.laurent(P.tower)
    return DrinfeldModule(af, [P.tower.T(), g, d])


def j_eval(z, N: int = 40) -> LaurentElem:
    """j(z) = g^{q+1}/Delta to absolute precision N."""
    P = _as_point(z)
    q = P.q
    M = N
    for _ in range(MAX_REFINE):
        g, d = phi_from_lattice(P, M)
        j = g ** (q + 1) / d
        if j.prec is None or j.prec >= N:
            return j
        M += (N - j.prec) + 8
    raise PrecisionError("j: precision not reached", achievable=j.absprec())


@dataclass
class IdentityResiduals:
    N: int
    g_residual: LaurentElem
    delta_residual: LaurentElem

    def ok(self, slack: int = 5) -> bool:
        return all(r.val_lower() >= self.N - slack for r in (self.g_residual, self.delta_residual))


def g_delta_identities(z, N: int = 40) -> IdentityResiduals:
    """Residuals of g = (T^q - T) E_{q-1} and
    Delta = (T^{q^2} - T) E_{q^2-1} + (T^{q^2} - T^q) E_{q-1}^{q+1}."""
    P = _as_point(z)
    q = P.q
    T = P.tower.T()
    M = N
    for _ in range(MAX_REFINE):
        g, d = phi_from_lattice(P, M)
        E1 = eisenstein(q - 1, P, M)
        E2 = eisenstein(q * q - 1, P, M)
        rg = g - (T ** q - T) * E1
        rd = d - ((T ** (q * q) - T) * E2 + (T ** (q * q) - T ** q) * E1 ** (q + 1))
        res = IdentityResiduals(N, rg, rd)
        if all(r.prec is None or r.prec >= N - 5 for r in (rg, rd)):
            return res
        M += N
    return res


def exp_from_phi(M: DrinfeldModule, i_max: int) -> list:
    """Coefficients alpha_0..alpha_imax of the exponential with e(Tz) = phi_T(e(z)).

    alpha_i (T^{q^i} - T) = sum_{j=1}^{min(i,r)} g_j alpha_{i-j}^{q^j}.
    """
    af = M.afield
    if af.char is not None:
        raise ValueError("the exponential needs generic characteristic")
    q = M.q
    gT = af.gammaT
    alphas = [af.one]
    for i in range(1, i_max + 1):
        acc = af.zero
        for j in range(1, min(i, M.rank) + 1):
            gj = M.g(j)
            if gj:
                acc = acc + gj * alphas[i - j].frobenius(q ** j)
        den = gT.frobenius(q ** i) - gT
        alphas.append(acc / den)
    return alphas


def exp_series(alphas, x: LaurentElem, q: int, rel: int | None = None) -> LaurentElem:
    acc = None
    xp = x
    for i, a in enumerate(alphas):
        if i:
            xp = xp.frobenius(rel=rel)
        t = a * xp
        acc = t if acc is None else acc + t
    return acc


# -- the cusp parameter ---------------------------------------------------------------------


def carlitz_lattice(tower: LaurentTower, D: int, rel: int) -> LatticeChain:
    """e_W for W = {a in A : deg a <= D}, a truncation of the rank-1 lattice A."""
    T = tower.T()
    vecs = [T ** i for i in range(D + 1)]
    return LatticeChain(tower, vecs, rel)


def t_param(z, D: int | None = None, rel: int = 20, level: Poly | None = None) -> LaurentElem:
    """t(z) = 1/e_A(z/n) for the level n (default n = 1), relative precision ``rel``."""
    x = z.z if isinstance(z, OmegaPoint) else z
    tw = x.tower
    if level is not None:
        x = x / tw.from_poly(level)
    need = max(0, -x.val // tw.e) + rel + 1
    if D is None:
        D = need
    lat = carlitz_lattice(tw, D, rel + 4)
    vB = -tw.e * (D + 1)
    gain = x.val - vB
    if gain <= 0:
        raise PrecisionError("t-parameter: D too small for this z")
    y = lat(x)
    y = y.truncate(y.val + gain)
    return y.inverse()


@dataclass
class SlopeReport:
    ms: list
    log_f: list
    log_t: list
    slopes: list

    @property
    def limit(self):
        return self.slopes[-1] if self.slopes else None

    def stable_from(self):
        """First m from which all later slopes agree with the last one."""
        if not self.slopes:
            return None
        last = self.slopes[-1]
        k = len(self.slopes) - 1
        while k > 0 and self.slopes[k - 1] == last:
            k -= 1
        return self.ms[k]

    def to_json(self) -> dict:
        from .base.laurent import _fmt_frac as f
        return {"m": self.ms, "log_f": [f(x) for x in self.log_f], "log_t": [f(x) for x in self.log_t],
                "slopes": [f(x) for x in self.slopes]}


def ray_point(tower: LaurentTower, m: int) -> OmegaPoint:
    """z_m = alpha T^m."""
    return OmegaPoint(tower.alpha() * tower.T() ** m)


def delta_relative(P: OmegaPoint, rel: int = 8) -> LaurentElem:
    """Delta(z) known to ``rel`` significant digits (for valuations near the cusp)."""
    e = P.tower.e
    R = rel + 4
    for _ in range(MAX_REFINE):
        vB = P.w2.val + e - R
        try:
            _, d = P.lattice(vB, R).phi_T()
        except PrecisionError:
            d = None
        if d is not None and not d.is_zero() and d.relprec() >= rel:
            return d
        R *= 2
    raise PrecisionError("Delta: no significant digits")


def e1u_relative(P: OmegaPoint, u, rel: int = 8) -> LaurentElem:
    R = rel + 4
    for _ in range(MAX_REFINE):
        lam0, _ = P.coset_rep(u, 10 * R)
        vB = lam0.val - R
        try:
            v = P.lattice(vB, R).eisenstein_partial(1, u, lam0)
        except PrecisionError:
            v = None
        if v is not None and not v.is_zero() and v.relprec() >= rel:
            return v
        R *= 2
    raise PrecisionError("E_1,u: no significant digits")


def slope_order(form, q: int, m_range, u=None, level: Poly | None = None, m: int = 2,
                rel: int = 8) -> SlopeReport:
    """Difference quotients of log_q|f(z_m)| against log_q|t(z_m)| along z_m = alpha T^m.

    ``form`` is "delta", "e1u", "const" or a callable OmegaPoint -> LaurentElem.
    ``level`` selects the parameter 1/e_A(z/level) (default level 1).
    """
    from .base.fields import fq_from_order
    tw = laurent_tower(fq_from_order(q), m, 1)
    F = tw.base
    if u is None:
        u = (RatFunc(Poly.constant(F, 1), Poly.gen(F)), RatFunc.constant(F, 0))
    ms = list(m_range)
    log_f, log_t = [], []
    for mm in ms:
        P = ray_point(tw, mm)
        if form == "delta":
            val = delta_relative(P, rel)
        elif form == "e1u":
            val = e1u_relative(P, u, rel)
        elif form == "const":
            val = tw.one()
        else:
            val = form(P)
        log_f.append(val.abs_log())
        log_t.append(t_param(P, rel=rel, level=level).abs_log())
    slopes = []
    for i in range(len(ms) - 1):
        dt = log_t[i + 1] - log_t[i]
        slopes.append((log_f[i + 1] - log_f[i]) / dt)
    return SlopeReport(ms, log_f, log_t, slopes)
