import random

import pytest
from hypothesis import given, settings, strategies as st

from drinfeld.base import Poly, RatFunc, fq_from_order, fq_make
from drinfeld.base.laurent import laurent_tower
from drinfeld.base.poly import random_poly
from drinfeld.module import AField
from drinfeld.skew import SkewPoly, SkewRing, parse_skew


def _finite_ring(q, n=3):
    F = fq_from_order(q)
    L = fq_make(F.p, F.n * n)
    return SkewRing(q, L.zero, L.one), L


def _rand_skew(ring, L, rng, d=3):
    return SkewPoly(ring, [L.elem(rng.randrange(L.q)) for _ in range(rng.randint(0, d + 1))])


def test_tau_times_a():
    for q in (2, 3, 4):
        ring, L = _finite_ring(q)
        a = L.gen()
        assert ring.tau() * a == SkewPoly(ring, [L.zero, a ** q])


def test_square_of_t_plus_tau_over_k():
    for q in (2, 3):
        af = AField.K(fq_from_order(q))
        T = af.gammaT
        f = af.skew([T, af.one])
        assert f * f == af.skew([T * T, T + T ** q, af.one])


def test_evaluation_examples():
    af = AField.K(fq_from_order(3))
    T = af.gammaT
    x = RatFunc(Poly.gen(af.base) + Poly.constant(af.base, 1), Poly.gen(af.base) ** 2)
    assert af.skew.tau()(x) == x ** 3
    assert af.skew([T, af.one])(x) == T * x + x ** 3


@pytest.mark.parametrize("q", [2, 3, 4])
def test_evaluation_is_composition(q):
    ring, L = _finite_ring(q)
    rng = random.Random(q)
    for _ in range(1000):
        f, g = _rand_skew(ring, L, rng, 2), _rand_skew(ring, L, rng, 2)
        x = L.elem(rng.randrange(L.q))
        assert (f * g)(x) == f(g(x))
        assert (f + g)(x) == f(x) + g(x)


def test_constant_term():
    af = AField.K(fq_from_order(2))
    f = af.skew([af.gammaT, af.one])
    assert f.constant() == af.gammaT
    assert not af.skew.tau(3).constant()
    ring, L = _finite_ring(3)
    rng = random.Random(0)
    for _ in range(1000):
        a, b = _rand_skew(ring, L, rng), _rand_skew(ring, L, rng)
        assert (a * b).constant() == a.constant() * b.constant()


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([2, 3, 4, 5]), st.integers(0, 2 ** 32))
def test_ring_axioms_over_finite_fields(q, seed):
    ring, L = _finite_ring(q)
    rng = random.Random(seed)
    a, b, c = (_rand_skew(ring, L, rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    if a and b:
        assert (a * b).degree == a.degree + b.degree


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(0, 2 ** 32))
def test_ring_axioms_over_k(q, seed):
    F = fq_from_order(q)
    af = AField.K(F)
    rng = random.Random(seed)

    def r():
        cs = [RatFunc(random_poly(F, rng.randint(-1, 2), rng), random_poly(F, rng.randint(0, 1), rng, monic=True))
              for _ in range(rng.randint(0, 3))]
        return af.skew(cs)
    a, b, c = r(), r(), r()
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_ring_axioms_over_laurent():
    tw = laurent_tower(fq_from_order(3))
    af = AField.laurent(tw)
    rng = random.Random(2)
    Q = tw.field.q

    def r():
        return af.skew([tw._elem(rng.randint(-2, 2), tw.from_ints([rng.randrange(1, Q)] +
                                                                    [rng.randrange(Q) for _ in range(4)]), None)
                        for _ in range(rng.randint(1, 3))])
    for _ in range(60):
        a, b, c = r(), r(), r()
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_evaluation_is_fq_linear(q):
    ring, L = _finite_ring(q, 2)
    F = fq_from_order(q)
    emb = L.embedding_from(F)
    rng = random.Random(q)
    f = _rand_skew(ring, L, rng, 3)
    for _ in range(20):
        x = L.elem(rng.randrange(L.q))
        for c in F.elements():
            cc = L.elem(emb[c])
            assert f(cc * x) == cc * f(x)


def test_parse_literal():
    af = AField.K(fq_from_order(2))
    f = parse_skew("tau^2 + (T+1)*tau + T", af.skew, {"T": af.gammaT}, af.const)
    T = af.gammaT
    assert f == af.skew([T, T + af.one, af.one])
    assert str(f) == "tau^2 + (T+1)*tau + T"


def test_negative_power_rejected():
    ring, _ = _finite_ring(2)
    with pytest.raises(ValueError):
        ring.tau() ** -1
