"""Factorisation of polynomials over finite fields.

Square-free decomposition, distinct-degree splitting and Cantor-Zassenhaus
equal-degree splitting driven by a seeded ``random.Random``.
"""

from __future__ import annotations

import random
from math import lcm

from .poly import Poly


def _pth_root(f: Poly) -> Poly:
    F = f.field
    p = F.p
    e = F.q // p  # a ** (q/p) is the p-th root of a
    return Poly(F, [F.pow(c, e) for c in f.coeffs[::p]], f.var)


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Monic square-free g_i with f = lc * prod g_i^{e_i}."""
    if not f:
        raise ValueError("square-free decomposition of 0")
    f = f.monic()
    if f.degree == 0:
        return []
    out: list[tuple[Poly, int]] = []
    df = f.derivative()
    if not df:
        return [(g, e * f.field.p) for g, e in squarefree_decomposition(_pth_root(f))]
    c = f.gcd(df)
    w = f.exact_div(c)
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        fac = w.exact_div(y)
        if fac.degree > 0:
            out.append((fac, i))
        w = y
        c = c.exact_div(y)
        i += 1
    if c.degree > 0:
        out.extend((g, e * f.field.p) for g, e in squarefree_decomposition(_pth_root(c)))
    return out


def distinct_degree_factor(f: Poly) -> list[tuple[Poly, int]]:
    """For square-free monic f: pairs (g_d, d), g_d the product of the degree-d factors."""
    Q = f.field.q
    x = Poly.gen(f.field, f.var)
    out = []
    h = x % f
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(Q, f)
        g = f.gcd(h - x)
        if g.degree > 0:
            out.append((g, d))
            f = f.exact_div(g)
            h = h % f
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def _trace_like(a: Poly, f: Poly, d: int) -> Poly:
    # sum_{i < k d} a^{2^i} mod f, for Q = 2^k
    F = f.field
    steps = F.n * d
    t = a % f
    acc = t
    for _ in range(steps - 1):
        t = (t * t) % f
        acc = acc + t
    return acc


def equal_degree_factor(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Split a monic square-free f whose irreducible factors all have degree d."""
    if f.degree == d:
        return [f]
    F = f.field
    Q = F.q
    while True:
        a = Poly(F, [rng.randrange(Q) for _ in range(f.degree)], f.var)
        if a.degree <= 0:
            continue
        g = a.gcd(f)
        if 0 < g.degree < f.degree:
            break
        if F.p == 2:
            b = _trace_like(a, f, d)
        else:
            b = a.powmod((Q ** d - 1) // 2, f) - 1
        g = b.gcd(f)
        if 0 < g.degree < f.degree:
            break
    return equal_degree_factor(g, d, rng) + equal_degree_factor(f.exact_div(g), d, rng)


def poly_factor(f: Poly, seed: int = 0) -> list[tuple[Poly, int]]:
    """Irreducible factorisation: sorted list of (monic factor, multiplicity).

    The product of factor**mult equals f divided by its leading coefficient.
    """
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    counts: dict[Poly, int] = {}
    for g, e in squarefree_decomposition(f):
        for h, d in distinct_degree_factor(g):
            for irr in equal_degree_factor(h, d, rng):
                counts[irr] = counts.get(irr, 0) + e
    return sorted(counts.items(), key=lambda t: (t[0].sort_key(), t[1]))


def is_irreducible(f: Poly) -> bool:
    if not f or f.degree < 1:
        return False
    g = f.monic()
    if g.gcd(g.derivative()).degree > 0:
        return False
    ddf = distinct_degree_factor(g)
    return len(ddf) == 1 and ddf[0][1] == g.degree


def factor_degrees(f: Poly) -> list[int]:
    """Multiset of irreducible factor degrees (with multiplicity), sorted."""
    out = []
    for g, e in squarefree_decomposition(f):
        for h, d in distinct_degree_factor(g):
            out.extend([d] * ((h.degree // d) * e))
    return sorted(out)


def splitting_degree(f: Poly) -> int:
    """Degree of the splitting field of f over its coefficient field."""
    degs = factor_degrees(f)
    return lcm(*degs) if degs else 1


def irreducibles(field, deg: int, var: str = "T"):
    """All monic irreducible polynomials of the given degree."""
    from .poly import all_polys
    for f in all_polys(field, deg, var, monic=True):
        if f.degree == deg and is_irreducible(f):
            yield f
