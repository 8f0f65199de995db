import random
from fractions import Fraction

import pytest

from drinfeld.analytic import (OmegaPoint, TruncatedLattice, division_value, drinfeld_module_at, eisenstein,
                               eisenstein_partial, exp_from_phi, exp_series, functional_equation_residual,
                               g_delta_identities, imaginary_abs, j_eval, lattice_exp, phi_from_lattice,
                               slope_order, t_param)
from drinfeld.base import Poly, RatFunc, fq_from_order
from drinfeld.base.fields import NEG_INF
from drinfeld.base.laurent import PrecisionError, laurent_tower, parse_laurent
from drinfeld.base.poly import all_polys
from drinfeld.boundary import random_gl2
from drinfeld.carlitz import carlitz
from drinfeld.module import AField

N = 24


def _point(text, q):
    return OmegaPoint.parse(text, q, prec=400)


def _box(P, D1, D2):
    """All nonzero a w1 + b w2 with deg a <= D1, deg b <= D2."""
    tw = P.tower
    F = tw.base
    out = []
    for a in all_polys(F, D1):
        for b in all_polys(F, D2):
            if a or b:
                out.append(tw.from_poly(a) * P.w1 + tw.from_poly(b) * P.w2)
    return out


def _inv(F):
    return RatFunc(Poly.constant(F, 1), Poly.gen(F))


def test_imaginary_abs_examples():
    tw = laurent_tower(fq_from_order(3))
    z = parse_laurent("alpha*T^3", tw, 50)
    assert imaginary_abs(z).exponent == 3
    assert str(imaginary_abs(z)) == "q^3"
    w = parse_laurent("T+alpha/T", tw, 50)
    assert imaginary_abs(w).exponent == -1
    x = parse_laurent("T^5", tw, 50)
    assert imaginary_abs(x).exponent is NEG_INF
    assert float(imaginary_abs(x)) == 0.0
    with pytest.raises(ValueError):
        OmegaPoint(x)


def test_reduced_basis_spans_the_lattice():
    for q, text in ((2, "alpha*T^3+T+1/T"), (3, "(alpha+1)*T+alpha/T"), (3, "alpha*T^2+T^5")):
        P = _point(text, q)
        tw = P.tower
        (a, b), (c, d) = P.M
        assert (a * d - b * c).degree == 0
        assert P.w1 == tw.from_poly(a) * P.z + tw.from_poly(b)
        assert P.w2 == tw.from_poly(c) * P.z + tw.from_poly(d)
        assert P.w1.val >= P.w2.val


@pytest.mark.parametrize("q", [2, 3])
def test_e_w_additive_and_linear(q):
    P = _point("alpha*T^2+1/T", q)
    lat = TruncatedLattice(P, (1, 1), rel=40)
    tw = P.tower
    rng = random.Random(q)
    Q = tw.field.q
    for _ in range(20):
        x = tw._elem(rng.randint(-3, 3), tw.from_ints([rng.randrange(Q) for _ in range(6)]), None)
        y = tw._elem(rng.randint(-3, 3), tw.from_ints([rng.randrange(Q) for _ in range(6)]), None)
        assert lat.e_W(x + y) == lat.e_W(x) + lat.e_W(y)
        for c in range(q):
            cc = tw.const(tw.base.elem(c))
            assert lat.e_W(cc * x) == cc * lat.e_W(x)


@pytest.mark.parametrize("q,D", [(2, (0, 0)), (2, (1, 2)), (3, (1, 1)), (3, (2, 0))])
def test_e_w_vanishes_exactly_on_w(q, D):
    P = _point("alpha*T^2+1/T", q)
    lat = TruncatedLattice(P, D, rel=40)
    pts = _box(P, *D)
    assert len(pts) == q ** lat.dimension - 1
    # a vector just outside W is not a root; its image sets the scale
    outside = lat.e_W(P.tower.T() ** (D[0] + 1) * P.w1)
    assert not outside.is_zero()
    for w in pts:
        y = lat.e_W(w)
        assert y.is_zero() and y.prec >= outside.val + 8


def test_lattice_exp_at_lattice_point_is_zero():
    P = _point("alpha*T^2", 3)
    assert lattice_exp(P.z, P, N).is_zero()
    assert lattice_exp(P.tower.T() * P.z + P.tower.one(), P, N).is_zero()


def test_lattice_exp_truncations_agree():
    P = _point("alpha*T^2+1/T", 2)
    tw = P.tower
    w = tw.alpha() * tw.monomial(2)
    a = TruncatedLattice(P, 0, rel=40).exp(w)
    b = TruncatedLattice(P, 1, rel=40).exp(w)
    assert (a - b).val_lower() >= min(a.prec, b.prec)
    assert b.prec > a.prec


def test_exp_from_phi_carlitz():
    for q in (2, 3):
        F = fq_from_order(q)
        K = AField.K(F)
        T = K.gammaT
        al = exp_from_phi(carlitz(K), 3)
        assert al[0] == K.one
        assert al[1] == (T ** q - T).inverse()
        assert al[2] == al[1] ** q / (T ** (q * q) - T)


def test_exp_from_phi_needs_generic_characteristic():
    F = fq_from_order(2)
    with pytest.raises(ValueError):
        exp_from_phi(carlitz(AField.residue(Poly.gen(F))), 3)


@pytest.mark.parametrize("q,text", [(2, "alpha*T^2"), (3, "alpha*T^2+1/T")])
def test_exp_from_phi_matches_lattice_exp(q, text):
    # two independent routes to e_Lambda: solving e(Tz) = phi_T(e(z)), and the lattice product
    P = _point(text, q)
    al = exp_from_phi(drinfeld_module_at(P, 40), 6)
    w = P.tower.alpha()
    assert (exp_series(al, w, q, rel=40) - lattice_exp(w, P, 30)).val_lower() >= 30


@pytest.mark.parametrize("q,text", [(2, "alpha*T^2"), (3, "alpha*T")])
def test_functional_equation(q, text):
    P = _point(text, q)
    tw = P.tower
    rng = random.Random(q)
    for _ in range(3):
        w = tw.const(tw.field.elem(rng.randrange(1, tw.field.q))) * P.z * tw.monomial(rng.randint(1, 3)) + tw.alpha()
        assert functional_equation_residual(w, P, N).val_lower() >= N - 5


@pytest.mark.parametrize("q,text,D", [(2, "alpha*T^2", (4, 4)), (3, "alpha*T^2+1/T", (1, 2))])
def test_eisenstein_against_direct_sum(q, text, D):
    P = _point(text, q)
    lat = TruncatedLattice(P, D, rel=60)
    pts = _box(P, *D)
    for k in (q - 1, 2 * (q - 1), q * q - 1):
        direct = P.tower.zero()
        for w in pts:
            direct = direct + w.inverse(rel=60) ** k
        prec = -k * lat.vB
        full = eisenstein(k, P, prec)
        assert (direct - full).val_lower() >= prec


@pytest.mark.parametrize("q,text,D", [(2, "alpha*T^2", (3, 3)), (3, "alpha*T^2", (1, 1))])
def test_eisenstein_partial_against_direct_sum(q, text, D):
    P = _point(text, q)
    F = P.tower.base
    u = (_inv(F), RatFunc.constant(F, 0))
    lam0, _ = P.coset_rep(u, 200)
    lat = TruncatedLattice(P, D, rel=60)
    pts = [lam0] + [lam0 + w for w in _box(P, *D)]
    for k in (1, 2, 3):
        direct = P.tower.zero()
        for w in pts:
            direct = direct + w.inverse(rel=60) ** k
        prec = -k * lat.vB
        full = eisenstein_partial(k, u, P, prec, method="newton")
        assert (direct - full).val_lower() >= prec


def test_eisenstein_partial_scaling_by_constants():
    q = 3
    P = _point("alpha*T^2+1/T", q)
    F = P.tower.base
    for c in range(1, q):
        cc = RatFunc.constant(F, c)
        u = (_inv(F), RatFunc.constant(F, 0))
        cu = (cc * u[0], u[1])
        for k in (1, 2):
            lhs = eisenstein_partial(k, cu, P, N)
            rhs = eisenstein_partial(k, u, P, N) * P.tower.const(F.elem(c)) ** (-k)
            assert (lhs - rhs).val_lower() >= N


def test_eisenstein_partial_on_lattice_is_eisenstein():
    P = _point("alpha*T^3", 2)
    F = P.tower.base
    u = (RatFunc.constant(F, 1), RatFunc.T(F))
    assert (eisenstein_partial(3, u, P, N) - eisenstein(3, P, N)).val_lower() >= N


def test_eisenstein_vanishes_off_multiples_of_q_minus_1():
    P = _point("alpha*T^2+1/T", 3)
    assert eisenstein(1, P, N).val_lower() >= N - 5
    assert eisenstein(3, P, N).val_lower() >= N - 5
    assert not eisenstein(2, P, N).is_zero()
    assert not eisenstein(8, P, N).is_zero()


def test_eisenstein_weight_rule():
    q = 3
    P = _point("alpha*T^2+1/T", q)
    rng = random.Random(7)
    for _ in range(3):
        gamma = random_gl2(P.tower.base, rng, 1)
        Q = P.act(gamma)
        k = q - 1
        lhs = eisenstein(k, Q, N) * P.automorphy(gamma).inverse(rel=80) ** k
        assert (lhs - eisenstein(k, P, N)).val_lower() >= N - 5


def test_eisenstein_stable_under_bigger_boxes():
    P = _point("alpha*T^2", 2)
    a = eisenstein(3, P, N)
    b = eisenstein(3, P, N, D=(12, 12))
    assert (a - b).val_lower() >= N


def test_eisenstein_rejects_weight_zero():
    with pytest.raises(ValueError):
        eisenstein(0, _point("alpha*T", 2), N)


def test_precision_shortfall_with_fixed_box():
    P = _point("alpha*T^2", 2)
    with pytest.raises(PrecisionError) as err:
        eisenstein(3, P, 40, D=1)
    assert err.value.achievable is not None


@pytest.mark.parametrize("q,text", [(2, "alpha*T^2"), (3, "alpha*T^3")])
def test_g_delta_identities(q, text):
    res = g_delta_identities(_point(text, q), 30)
    assert res.ok()


def test_identities_at_precision_zero():
    res = g_delta_identities(_point("alpha*T", 2), 0)
    assert res.ok()


def test_delta_nonzero_and_j_invariance():
    q = 2
    P = _point("alpha*T^2+1/T", q)
    g, d = phi_from_lattice(P, N)
    assert not d.is_zero()
    j = j_eval(P, N)
    rng = random.Random(11)
    for _ in range(3):
        Q = P.act(random_gl2(P.tower.base, rng, 2))
        assert (j_eval(Q, N) - j).val_lower() >= N - 10


def test_division_values():
    q = 3
    P = _point("alpha*T^2", q)
    F = P.tower.base
    zero = RatFunc.constant(F, 0)
    assert division_value((RatFunc.constant(F, 1), zero), P, N).is_zero()
    eu = division_value((_inv(F), zero), P, N)
    assert not eu.is_zero()
    # e_u is T-torsion for phi^{(z)}
    phi = drinfeld_module_at(P, N + 10).phi(Poly.gen(F))
    assert phi(eu).val_lower() >= N - 5


@pytest.mark.parametrize("u", ["first", "second"])
def test_e1u_is_reciprocal_of_division_value(u):
    q = 2
    P = _point("alpha*T^2+1/T", q)
    F = P.tower.base
    zero = RatFunc.constant(F, 0)
    uu = (_inv(F), zero) if u == "first" else (zero, _inv(F))
    prod = division_value(uu, P, N) * eisenstein_partial(1, uu, P, N, method="newton")
    assert (prod - P.tower.one()).val_lower() >= N - 5


def test_t_param_monotone_along_ray():
    tw = laurent_tower(fq_from_order(3))
    vals = [t_param(OmegaPoint(tw.alpha() * tw.T() ** m)).abs_log() for m in range(1, 6)]
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_slope_of_constant_form_is_zero():
    rep = slope_order("const", 3, range(2, 5))
    assert rep.slopes == [0, 0]


def test_delta_slope_is_q_minus_1():
    rep = slope_order("delta", 3, range(3, 7))
    assert rep.limit == 2 and rep.stable_from() <= 4


def test_e1u_slope_positive_and_level_normalised():
    rep = slope_order("e1u", 3, range(3, 7))
    assert rep.limit == Fraction(1, 3)
    F = fq_from_order(3)
    rep_n = slope_order("e1u", 3, range(3, 7), level=Poly.gen(F))
    assert rep_n.limit == 1
