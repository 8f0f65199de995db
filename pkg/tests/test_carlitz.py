import random

import pytest

from drinfeld.base import Poly, Residue, fq_from_order
from drinfeld.base.factor import irreducibles, poly_factor
from drinfeld.base.poly import random_poly
from drinfeld.base.residue import unit_order
from drinfeld.carlitz import (carlitz, cyclotomic_degree, division_poly, eisenstein_at, frobenius_degrees,
                              frobenius_pointwise, reduction_identity)
from drinfeld.module import AField


def _tc(q):
    F = fq_from_order(q)
    return F, Poly.gen(F), Poly.constant(F, 1)


def test_division_poly_examples():
    F, T, one = _tc(2)
    assert str(division_poly(T)) == "T*X + X^2"
    assert str(division_poly(T * T)) == "T^2*X + (T^2+T)*X^2 + X^4"
    assert str(division_poly(one)) == "X"
    F3, T3, _ = _tc(3)
    assert str(division_poly(T3)) == "T*X + X^3"


def test_division_poly_rejects_non_monic():
    F, T, one = _tc(3)
    with pytest.raises(ValueError):
        division_poly(Poly.constant(F, 2) * T)


@pytest.mark.parametrize("q", [2, 3])
def test_division_poly_invariants(q):
    F, T, one = _tc(q)
    rng = random.Random(q)
    for _ in range(20):
        a = random_poly(F, rng.randint(1, 3), rng, monic=True)
        rho = division_poly(a)
        assert rho.coeffs[0] == a
        assert rho.coeffs[-1] == one
        assert rho.degree == q ** a.degree
        # rho_a agrees with the Carlitz module over K
        K = AField.K(F)
        phi = carlitz(K).phi(a)
        assert [c.num for c in phi.coeffs] == rho.coeffs


def test_eisenstein_examples():
    F, T, one = _tc(2)
    rep = eisenstein_at(T)
    # rho_T / X = T + X: constant T, nothing else in the middle
    assert rep.eisenstein and rep.constant_is_pi and rep.leading_one
    assert eisenstein_at(T * T + T + one).eisenstein
    with pytest.raises(ValueError):
        eisenstein_at(T * (T + one))


def test_eisenstein_middle_coefficients_directly():
    F, T, one = _tc(2)
    pi = T * T + T + one
    cs = division_poly(pi).coeffs
    assert cs[0] == pi and cs[0] % (pi * pi)
    assert all(not (c % pi) for c in cs[1:-1])


@pytest.mark.parametrize("q", [2, 3, 4])
def test_eisenstein_all_small_irreducibles(q):
    F, _, _ = _tc(q)
    for d in (1, 2, 3):
        for pi in irreducibles(F, d):
            assert eisenstein_at(pi).eisenstein
            assert reduction_identity(pi)


def test_reduction_identity_examples():
    F, T, one = _tc(3)
    assert reduction_identity(T)
    F2, T2, one2 = _tc(2)
    pi = T2 * T2 + T2 + one2
    assert reduction_identity(pi)
    cs = division_poly(pi).coeffs
    assert all(not (c % pi) for c in cs[:-1]) and cs[-1] == one2


def test_frobenius_worked_instance():
    F, T, one = _tc(2)
    ell = T * T + T + one
    rep = frobenius_degrees(ell, T)
    assert rep.degrees == [3] and rep.predicted == 3 and rep.consistent
    # rho_ell / X reduced mod T, checked by hand: X^3 + X + 1
    f = division_poly(ell).reduced_quotient(AField.residue(T))
    assert str(f) == "X^3+X+1"
    assert poly_factor(f) == [(f, 1)]


def test_frobenius_linear_instance():
    F, T, one = _tc(2)
    rep = frobenius_degrees(T, T + one)
    assert rep.degrees == [1] and rep.predicted == 1
    f = division_poly(T).reduced_quotient(AField.residue(T + one))
    assert str(f) == "X+1"


def test_frobenius_ramified_rejected():
    F, T, one = _tc(2)
    with pytest.raises(ValueError):
        frobenius_degrees(T, T)


@pytest.mark.parametrize("q", [2, 3])
def test_frobenius_random_pairs(q):
    F, _, _ = _tc(q)
    rng = random.Random(20 + q)
    irr = [p for d in (1, 2, 3) for p in irreducibles(F, d)]
    for _ in range(15):
        ell, pi = rng.sample(irr, 2)
        rep = frobenius_degrees(ell, pi)
        assert rep.consistent
        assert rep.predicted == unit_order(Residue(ell, pi))
        assert sum(rep.degrees) == q ** ell.degree - 1


def test_frobenius_acts_as_pi_on_torsion():
    F, T, one = _tc(2)
    assert frobenius_pointwise(T * T + T + one, T)
    assert frobenius_pointwise(T, T + one)


def test_cyclotomic_degree_examples():
    _, T3, _ = _tc(3)
    assert cyclotomic_degree(T3) == 2
    _, T, one = _tc(2)
    assert cyclotomic_degree(T * T) == 2
    assert cyclotomic_degree(T * (T + one)) == 1


def test_cyclotomic_degree_counts_units():
    # brute force: count residues coprime to a
    from drinfeld.base.poly import all_polys
    for q in (2, 3):
        F, T, one = _tc(q)
        for a in (T * T + one, T ** 3, T * (T + one) * (T + one)):
            units = sum(1 for b in all_polys(F, a.degree - 1) if b and b.gcd(a).degree == 0)
            assert cyclotomic_degree(a.monic()) == units
