import random

import pytest
from hypothesis import given, strategies as st

from drinfeld.base import fq_from_order, fq_make
from drinfeld.base.fields import factor_int, is_primitive_modulus, is_prime

ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27]


def test_prime_field_has_p_elements():
    F = fq_make(2, 1)
    assert F.q == 2 and len(list(F.elements())) == 2


def test_f9_generator_has_order_8():
    F = fq_make(3, 2)
    # exhaustive element orders: the generator is the only thing of order 8 we need
    g = F.gen()
    powers = set()
    x = F.one
    for k in range(1, 9):
        x = x * g
        powers.add(x.value)
        if k < 8:
            assert x != F.one
    assert x == F.one
    assert len(powers) == 8
    assert F.order(F.generator) == 8


def test_non_prime_characteristic_rejected():
    with pytest.raises(ValueError):
        fq_make(4, 1)


def test_from_order_rejects_non_prime_powers():
    with pytest.raises(ValueError):
        fq_from_order(6)


def test_modulus_table_is_primitive():
    for q in ORDERS:
        F = fq_from_order(q)
        assert F.q == q
        assert is_primitive_modulus(F.modulus, F.p) or F.n == 1


def test_fq_make_is_cached():
    assert fq_make(3, 2) is fq_make(3, 2)


def test_integer_helpers():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert factor_int(360) == {2: 3, 3: 2, 5: 1}


@pytest.mark.parametrize("q", ORDERS)
def test_field_axioms_exhaustive_small(q):
    F = fq_from_order(q)
    els = [F.elem(v) for v in F.elements()]
    rng = random.Random(q)
    for _ in range(300):
        a, b, c = (rng.choice(els) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a - a == F.zero
        if a:
            assert a * a.inverse() == F.one
            assert a ** (q - 1) == F.one


@pytest.mark.parametrize("q", [4, 8, 9, 27])
def test_frobenius_fixes_prime_field_and_is_additive(q):
    F = fq_from_order(q)
    p = F.p
    for v in F.elements():
        x = F.elem(v)
        assert x ** q == x
        for w in F.elements():
            y = F.elem(w)
            assert (x + y).frobenius(p) == x.frobenius(p) + y.frobenius(p)


def test_embedding_respects_arithmetic():
    sub = fq_make(2, 2)
    big = fq_make(2, 4)
    emb = big.embedding_from(sub)
    for a in sub.elements():
        for b in sub.elements():
            assert emb[sub.mul(a, b)] == big.mul(emb[a], emb[b])
            assert emb[sub.add(a, b)] == big.add(emb[a], emb[b])


@given(st.sampled_from(ORDERS), st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
def test_log_exp_roundtrip(q, i, j):
    F = fq_from_order(q)
    a = i % (q - 1)
    x = F.exp(a)
    assert F.log(x) == a
    y = F.exp(j % (q - 1))
    assert F.log(F.mul(x, y)) == (a + j) % (q - 1)
