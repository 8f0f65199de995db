import random
from functools import reduce

import pytest
from hypothesis import given, settings, strategies as st

from drinfeld.base import NEG_INF, Poly, RatFunc, Residue, fq_from_order, fq_make, is_irreducible, poly_factor
from drinfeld.base.factor import factor_degrees, irreducibles, splitting_degree
from drinfeld.base.literal import ParseError, parse_apoly, parse_ratfunc
from drinfeld.base.poly import all_polys, random_poly
from drinfeld.base.residue import unit_group_order, unit_order

F2 = fq_make(2)
T2 = Poly.gen(F2)
ONE2 = Poly.constant(F2, 1)


def _roots(f):
    return [x for x in f.field.elements() if _eval(f, x) == 0]


def _eval(f, x):
    F = f.field
    acc = 0
    for c in reversed(f.coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def _brute_irreducible(f):
    # trial division by every monic polynomial of degree <= deg f / 2
    return f.degree >= 1 and all(
        f % g for d in range(1, f.degree // 2 + 1) for g in all_polys(f.field, d, monic=True) if g.degree == d)


def test_factor_x4_x2_x():
    X = Poly(F2, [0, 1], "X")
    f = X ** 4 + X ** 2 + X
    fac = poly_factor(f)
    assert sorted(str(g) for g, _ in fac) == ["X", "X^3+X+1"]
    assert reduce(lambda a, b: a * b, (g ** e for g, e in fac)) == f
    cubic = X ** 3 + X + Poly.constant(F2, 1, "X")
    assert not _roots(cubic) and _brute_irreducible(cubic)


def test_factor_t2_t():
    assert sorted(str(g) for g, _ in poly_factor(T2 * T2 + T2)) == ["T", "T+1"]


def test_factor_irreducible_quadratic():
    f = T2 * T2 + T2 + ONE2
    assert poly_factor(f) == [(f, 1)]
    assert not _roots(f)


def test_factor_multiplicities():
    f = T2 ** 3 * (T2 + ONE2) ** 2 * (T2 * T2 + T2 + ONE2)
    fac = dict((str(g), e) for g, e in poly_factor(f))
    assert fac == {"T": 3, "T+1": 2, "T^2+T+1": 1}


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_factor_roundtrip_random(q):
    F = fq_from_order(q)
    rng = random.Random(q)
    for _ in range(60 if q < 4 else 25):
        f = random_poly(F, rng.randint(1, 12), rng)
        fac = poly_factor(f, seed=rng.randrange(100))
        prod = reduce(lambda a, b: a * b, (g ** e for g, e in fac), Poly.constant(F, 1))
        assert prod == f.monic()
        assert all(g.is_monic() and is_irreducible(g) for g, _ in fac)


def test_irreducibility_against_trial_division():
    for q in (2, 3):
        F = fq_from_order(q)
        for f in all_polys(F, 4, monic=True):
            if f.degree >= 1:
                assert is_irreducible(f) == _brute_irreducible(f), f


def test_irreducible_counts_match_necklace_formula():
    # number of monic irreducibles of degree d: (1/d) sum_{e|d} mu(d/e) q^e
    mu = {1: 1, 2: -1, 3: -1, 4: 0}
    for q in (2, 3, 4):
        F = fq_from_order(q)
        for d in (1, 2, 3, 4):
            expect = sum(mu[d // e] * q ** e for e in range(1, d + 1) if d % e == 0) // d
            assert len(list(irreducibles(F, d))) == expect


def test_factor_degrees_and_splitting_degree():
    f = (T2 * T2 + T2 + ONE2) * (T2 ** 3 + T2 + ONE2)
    assert sorted(factor_degrees(f)) == [2, 3]
    assert splitting_degree(f) == 6


def test_unit_order_examples():
    n = T2 * T2 + T2 + ONE2
    assert unit_order(Residue(n, T2)) == 3
    assert (Residue(n, T2) ** 3) == Residue(n, ONE2)
    assert unit_order(Residue(n, ONE2)) == 1
    with pytest.raises(ValueError):
        unit_order(Residue(T2, T2))


def test_unit_group_order():
    F3 = fq_from_order(3)
    T = Poly.gen(F3)
    assert unit_group_order(T) == 2
    assert unit_group_order(T2 * T2) == 2
    assert unit_group_order(T2 * (T2 + ONE2)) == 1


def test_unit_order_divides_group_order():
    rng = random.Random(5)
    for q in (2, 3):
        F = fq_from_order(q)
        for _ in range(30):
            n = random_poly(F, rng.randint(1, 4), rng, monic=True)
            b = random_poly(F, rng.randint(0, 3), rng)
            if b.gcd(n).degree != 0:
                continue
            k = unit_order(Residue(n, b))
            assert unit_group_order(n) % k == 0
            assert Residue(n, b) ** k == Residue(n, Poly.constant(F, 1))


def test_zero_degree_sentinel():
    z = Poly(F2, [])
    assert z.deg() is NEG_INF
    assert z.deg() < -10 ** 9
    assert (T2 * z).deg() == z.deg()
    assert T2.deg() + z.deg() is NEG_INF
    assert z.abs_value() == 0


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 4, 5]), st.integers(0, 2 ** 32))
def test_degree_and_absolute_value_multiplicative(q, seed):
    F = fq_from_order(q)
    rng = random.Random(seed)
    a = random_poly(F, rng.randint(0, 6), rng)
    b = random_poly(F, rng.randint(0, 6), rng)
    if a and b:
        assert (a * b).degree == a.degree + b.degree
        assert (a * b).abs_value() == a.abs_value() * b.abs_value()


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 9]), st.integers(0, 2 ** 32))
def test_ring_axioms_and_division(q, seed):
    F = fq_from_order(q)
    rng = random.Random(seed)
    a, b, c = (random_poly(F, rng.randint(-1, 6), rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    if b:
        qt, r = divmod(a, b)
        assert qt * b + r == a and r.deg() < b.deg()
    g, s, t = a.xgcd(b)
    assert s * a + t * b == g
    if g:
        assert a % g == Poly(F, []) and b % g == Poly(F, [])


def test_frobenius_on_polynomials():
    F = fq_from_order(3)
    T = Poly.gen(F)
    f = T * T + Poly.constant(F, 2) * T + Poly.constant(F, 1)
    assert f.frobenius(3) == f ** 3


def test_powmod_matches_naive():
    f = T2 ** 5 + T2 ** 2 + ONE2
    assert T2.powmod(37, f) == (T2 ** 37) % f


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.integers(0, 2 ** 32))
def test_ratfunc_field_axioms(q, seed):
    F = fq_from_order(q)
    rng = random.Random(seed)

    def r():
        return RatFunc(random_poly(F, rng.randint(-1, 3), rng), random_poly(F, rng.randint(0, 3), rng, monic=True))
    a, b, c = r(), r(), r()
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a
    if a:
        assert a * a.inverse() == RatFunc.constant(F, 1)
        assert (a * b).deg() == a.deg() + b.deg()


def test_ratfunc_floor_and_reduce():
    t = parse_ratfunc("(T^3+1)/(T+1)", F2)
    assert t.is_poly() and str(t) == "T^2+T+1"
    u = parse_ratfunc("(T+1)/T^2", F2)
    assert u.deg() == -1 and not u.floor()
    f = RatFunc.from_poly(T2)
    red = parse_ratfunc("T^3+1/T", F2).reduce_mod(f)
    assert red.deg() < f.deg()
    assert ((parse_ratfunc("T^3+1/T", F2) - red) / f).is_poly()


def test_residue_ring_axioms():
    F = fq_from_order(3)
    rng = random.Random(9)
    n = random_poly(F, 3, rng, monic=True)
    for _ in range(200):
        a, b, c = (Residue(n, random_poly(F, rng.randint(-1, 5), rng)) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if a.is_unit():
            assert a * a.inverse() == Residue(n, Poly.constant(F, 1))


def test_literal_roundtrip_prime_and_extension():
    F3 = fq_from_order(3)
    f = parse_apoly("T^3+2*T+1", F3)
    assert str(f) == "T^3+2*T+1"
    assert parse_apoly(str(f), F3) == f
    F4 = fq_from_order(4)
    g = parse_apoly("g^2*T + g", F4)
    assert parse_apoly(str(g), F4) == g
    assert g.lc == F4.exp(2) and g.coeffs[0] == F4.generator


@pytest.mark.parametrize("text,pos", [("T+*", 2), ("T^", 2), ("(T+1", 4), ("", 0), ("T$1", 1)])
def test_literal_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as err:
        parse_apoly(text, F2)
    assert err.value.pos == pos


def test_integer_literals_are_images_of_z():
    assert not parse_apoly("2*T", F2)
    assert parse_apoly("3*T", F2) == T2
