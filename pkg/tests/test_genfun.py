"""Smooth-function sequences: seminorms, mollifiers, pairings, weak association."""

import math

import numpy as np
import pytest

from ultraseq.gennum import AssocKind, NotModerate
from ultraseq.genfun import (
    FunctionSpace,
    SeminormSpec,
    bump,
    classify_fun,
    const_fn,
    constant_seq,
    corrected_mollifier,
    derivative_seq,
    exp_seq,
    fn_linear,
    fn_product,
    make_element,
    make_mollifier,
    moment_class,
    mollified,
    mollify,
    pairing,
    poly_fn,
    seminorm,
    seq_scale,
    sin_fn,
    square_seq,
    standard_mollifier,
    sub_seq,
)
from ultraseq.genfun import TestFunction as TF
from ultraseq import growth

# reference values computed with scipy.integrate.quad on the bump profile
# exp(-1/(1-x^2)); quad reports error below 1e-9 on each
BUMP_MASS = 0.44399381616807865
PEAK = 0.8285688398691067  # e^-1 / BUMP_MASS
SQUARED_INTEGRAL = 0.6751168130096943  # integral of the normalized profile squared
PROFILE_MOMENT2 = 0.15811363626379665


# ---------------------------------------------------------------------------
# smooth functions


def test_bump_support_and_values():
    f = bump(0.0, 1.0, 1.0)
    assert f.support == (-1.0, 1.0)
    assert f(np.array([0.0]))[0] == pytest.approx(math.exp(-1.0), rel=1e-12)
    assert f(np.array([1.0, -1.0, 2.0])).tolist() == [0.0, 0.0, 0.0]
    # odd derivative vanishes at the symmetric center
    assert f(np.array([0.0]), order=1)[0] == pytest.approx(0.0, abs=1e-15)


def test_bump_derivative_matches_finite_difference():
    f = bump(0.3, 1.5, 2.0)
    xs = np.linspace(-1.0, 1.4, 9)
    h = 1e-6
    fd = (f(xs + h) - f(xs - h)) / (2 * h)
    np.testing.assert_allclose(f(xs, order=1), fd, rtol=1e-6, atol=1e-8)


def test_poly_and_product_derivatives():
    p = poly_fn([1.0, 2.0, 3.0])  # 1 + 2x + 3x^2
    xs = np.array([0.0, 1.0, 2.0])
    np.testing.assert_allclose(p(xs, order=1), 2.0 + 6.0 * xs)
    np.testing.assert_allclose(p(xs, order=2), [6.0, 6.0, 6.0])
    q = fn_product(p, sin_fn())
    h = 1e-6
    fd = (q(xs + h) - q(xs - h)) / (2 * h)
    np.testing.assert_allclose(q(xs, order=1), fd, rtol=1e-6, atol=1e-8)


def test_fn_linear_combination():
    f = fn_linear(2.0, const_fn(1.0), -1.0, poly_fn([0.0, 1.0]))
    xs = np.array([0.0, 3.0])
    np.testing.assert_allclose(f(xs), [2.0, -1.0])


# ---------------------------------------------------------------------------
# mollifiers


def test_standard_mollifier_is_normalized():
    m = standard_mollifier()
    assert m.profile(np.array([0.0]))[0] == pytest.approx(PEAK, rel=1e-9)
    q, err = moment_class(m.profile)
    assert q >= 1  # unit mass, first moment zero by symmetry
    # the second moment does not vanish
    assert q == 1


def test_corrected_mollifier_kills_low_moments():
    m = corrected_mollifier()
    q, err = moment_class(m.profile)
    assert q >= 3


def test_moment_class_rejects_non_unit_mass():
    with pytest.raises(ValueError):
        make_mollifier(bump(0.0, 1.0, 1.0))  # mass is BUMP_MASS, not 1


def test_mollified_scaling():
    m = standard_mollifier()
    d = m.sequence()  # delta_n = n * phi(n x)
    xs = np.array([0.0])
    assert d.at(16, xs)[0] == pytest.approx(16 * PEAK, rel=1e-9)
    assert d.at(16, np.array([1.0 / 8.0]))[0] == pytest.approx(
        16 * float(m.profile(np.array([2.0]))[0]), rel=1e-9
    )


def test_mollify_scales_kernel():
    m = standard_mollifier()
    k = mollify(m, 8)
    assert k.support == (-0.125, 0.125)
    assert k(np.array([0.0]))[0] == pytest.approx(8 * PEAK, rel=1e-9)
    # each derivative brings another factor n from the chain rule
    inner = float(m.profile(np.array([0.4]), order=2)[0])
    assert k(np.array([0.05]), order=2)[0] == pytest.approx(8**3 * inner, rel=1e-9)


# ---------------------------------------------------------------------------
# seminorms


def test_seminorm_sup_of_constant_function():
    f = constant_seq(poly_fn([0.0, 1.0]))  # x on the probe box
    spec = SeminormSpec(nu=0)
    v = seminorm(f, 4, spec)
    # sup domain has radius max(nu, 2) = 2
    assert v == pytest.approx(2.0, rel=1e-6)


def test_seminorm_delta_growth():
    d = standard_mollifier().sequence()
    for n in (8, 64, 256):
        v0 = seminorm(d, n, SeminormSpec(nu=0))
        assert v0 == pytest.approx(n * PEAK, rel=1e-3)
    # one derivative adds one factor of n
    v1 = seminorm(d, 64, SeminormSpec(nu=1))
    v1_small = seminorm(d, 8, SeminormSpec(nu=1))
    slope = math.log(v1 / v1_small) / math.log(64 / 8)
    assert slope == pytest.approx(2.0, rel=0.05)


def test_derivative_seq_shifts_order():
    d = standard_mollifier().sequence()
    dd = derivative_seq(d)
    xs = np.array([0.01])
    np.testing.assert_allclose(dd.at(32, xs, order=0), d.at(32, xs, order=1))
    np.testing.assert_allclose(dd.at(32, xs, order=1), d.at(32, xs, order=2))


# ---------------------------------------------------------------------------
# classification


def test_classify_fun_delta_moderate(colombeau):
    d = standard_mollifier().sequence()
    r = classify_fun(d, 2, colombeau)
    assert r.verdict == "moderate" and r.conclusive


def test_classify_fun_negligible(colombeau):
    j = seq_scale(growth.parse("exp(-n)"), constant_seq(sin_fn()))
    r = classify_fun(j, 2, colombeau)
    assert r.verdict == "negligible"


def test_classify_fun_divergent(colombeau):
    f = seq_scale(growth.parse("exp(n)"), constant_seq(sin_fn()))
    r = classify_fun(f, 1, colombeau)
    assert r.verdict == "divergent"


def test_make_element_rejects_divergent(colombeau):
    f = seq_scale(growth.parse("exp(n)"), constant_seq(sin_fn()))
    with pytest.raises(NotModerate):
        make_element(f, FunctionSpace(colombeau, nu_max=1))


def test_square_seq_is_pointwise_square():
    d = standard_mollifier().sequence()
    sq = square_seq(d)
    xs = np.linspace(-0.1, 0.1, 5)
    np.testing.assert_allclose(sq.at(16, xs), d.at(16, xs) ** 2)


def test_exp_seq_chain_rule():
    f = constant_seq(poly_fn([0.0, 1.0]))  # x
    e = exp_seq(f)
    xs = np.array([0.0, 0.5])
    np.testing.assert_allclose(e.at(4, xs), np.exp(xs))
    np.testing.assert_allclose(e.at(4, xs, order=1), np.exp(xs))
    np.testing.assert_allclose(e.at(4, xs, order=2), np.exp(xs))


# ---------------------------------------------------------------------------
# pairings and weak association


def test_pairing_recovers_point_value():
    d = standard_mollifier().sequence()
    psi = TF(bump(0.0, 1.0, 1.0))
    val = pairing(d, 256, psi)
    assert abs(val - math.exp(-1.0)) <= 1e-3


def test_pairing_of_squared_delta_grows_linearly():
    d = standard_mollifier().sequence()
    sq = square_seq(d)
    psi = TF(bump(0.0, 1.0, 1.0))
    v1, v2 = pairing(sq, 128, psi), pairing(sq, 512, psi)
    slope = math.log(v2 / v1) / math.log(4.0)
    assert slope == pytest.approx(1.0, abs=0.1)
    # the coefficient is psi(0) * integral of phi^2
    assert v2 / 512 == pytest.approx(math.exp(-1.0) * SQUARED_INTEGRAL, rel=1e-2)


def test_weak_assoc_delta_not_zero(colombeau):
    from ultraseq.genfun import weak_assoc_fun

    d = standard_mollifier().sequence()
    z = constant_seq(const_fn(0.0))
    v = weak_assoc_fun(d, z, AssocKind.weak(), space=colombeau)
    assert v.holds == "no"


def test_weak_assoc_mollification_converges(colombeau):
    # delta_n paired against psi tends to psi(0): delta_n - delta_2n ~ 0
    from ultraseq.genfun import reindex, weak_assoc_fun

    d = standard_mollifier().sequence()
    v = weak_assoc_fun(d, reindex(d, 2), AssocKind.weak(), space=colombeau)
    assert v.holds == "yes"
