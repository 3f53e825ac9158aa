"""Certificates for maps on the quotient algebras and the induced extensions."""

import math

import numpy as np
import pytest

from ultraseq import growth
from ultraseq.genfun import FunctionSpace, constant_seq, make_element, seq_scale, sin_fn
from ultraseq.spaces import SeqRep
from ultraseq.temperate import (
    ExtensionError,
    ScalarMap,
    affine_map,
    apply_scalar_map,
    check_compatible,
    check_moderate,
    check_temperate,
    compose_maps,
    continuity_trend,
    derivative_map,
    exp_map,
    exp_seq_map,
    expm1_map,
    extend,
    identity_map,
    log1p_map,
    power_map,
    scaled_map,
    square_map,
    sum_maps,
    verify_F2,
)
from ultraseq.weights import catalog, power_scale, scale_to_weights

COL = catalog("colombeau")
SCALE_II = scale_to_weights(power_scale())  # decreasing levels
ULTRA_I = catalog("ultra")  # increasing levels
NARROW_PEAK = 1.6571376797382134  # height of the width-1/2 unit-mass bump


# ---------------------------------------------------------------------------
# scalar map algebra


def test_scalar_map_call_is_vectorized():
    g = power_map(2)
    np.testing.assert_allclose(g(np.array([1.0, 3.0])), [1.0, 9.0])
    assert g(4.0) == 16.0


def test_power_map_bounds():
    g = power_map(3)
    assert g.poly_bound == (1.0, 3.0)
    assert g.vanish_bound == (1.0, 3.0, 1.0)
    assert g.zero_limit == 0.0


def test_compose_propagates_bounds():
    g = compose_maps(power_map(2), power_map(3))
    assert g.poly_bound == (1.0, 6.0)
    a, k, u0 = g.vanish_bound
    assert (a, k) == (1.0, 6.0) and u0 <= 1.0
    assert g(2.0) == 64.0


def test_sum_keeps_weaker_vanishing_rate():
    g = sum_maps(power_map(1), power_map(2))  # x + x^2
    a, k, u0 = g.vanish_bound
    assert k == 1.0 and a == 2.0
    assert g(3.0) == 12.0


def test_scaled_map_label_and_value():
    g = scaled_map(8.0, power_map(2))
    assert g(2.0) == 32.0
    assert "8x" in g.label


def test_affine_map_validation():
    with pytest.raises(ValueError):
        affine_map(0.0, 1.0)
    with pytest.raises(ValueError):
        affine_map(1.0, -2.0)
    g = affine_map(2.0, 0.0)
    assert g.label == "2x"
    assert g.symbolic_transform is not None
    assert affine_map(1.0, 1.0).symbolic_transform is None


# ---------------------------------------------------------------------------
# growth certificates (r-moderate)


def test_power_certified_single_weight():
    cert = check_moderate(power_map(2), COL)
    assert cert.status == "certified" and cert.exact
    assert cert.pairs == ((1, 1),)
    assert cert.value_bound == 1.0


def test_power_certified_on_indexed_family():
    cert = check_moderate(power_map(3), SCALE_II)
    assert cert.status == "certified" and cert.exact
    assert all(m == mm for m, mm in cert.pairs)


def test_scaled_power_value_bound():
    cert = check_moderate(scaled_map(5.0, power_map(2)), COL)
    assert cert.status == "certified"
    # the constant A enters as A^(r_n), worst at the largest weight value
    assert cert.value_bound == pytest.approx(5.0 ** (1.0 / math.log(2.0)))


def test_exp_refuted_with_replayable_witness():
    cert = check_moderate(exp_map(), SCALE_II)
    assert cert.status == "refuted" and cert.exact
    w = cert.witness
    # replay: at the witness index, r^M * x^(1/r^m) blows past the log cap
    r_m = SCALE_II.member(w["m"])
    r_M = SCALE_II.member(w["M"])
    n = w["n"]
    lhs = math.log(r_M.value(n)) + math.log(w["x"]) / r_m.value(n)
    assert lhs > math.log(w["log_value_exceeds"])


def test_exp_refuted_single_weight():
    cert = check_moderate(exp_map(), COL)
    assert cert.status == "refuted"


def test_black_box_square_certified_numerically():
    g = ScalarMap(label="u^2 black box", fn=lambda u: np.asarray(u) ** 2)
    cert = check_moderate(g, COL)
    assert cert.status == "certified" and not cert.exact


def test_black_box_exp_refuted_numerically():
    g = ScalarMap(label="e^u black box", fn=np.exp)
    cert = check_moderate(g, COL)
    assert cert.status == "refuted" and not cert.exact
    assert cert.witness["x"] > 0


def test_step_weights_stay_inconclusive():
    cert = check_moderate(power_map(2), catalog("egorov"))
    assert cert.status == "inconclusive"


def test_identity_certified_everywhere():
    for fam in (COL, SCALE_II, ULTRA_I):
        assert check_moderate(identity_map(), fam).status == "certified"


# ---------------------------------------------------------------------------
# vanishing certificates (r-compatible)


def test_power_compatible_certified():
    for k in (0.5, 1.0, 2.0):
        cert = check_compatible(power_map(k), COL)
        assert cert.status == "certified" and cert.exact


def test_affine_offset_refuted():
    cert = check_compatible(affine_map(1.0, 1.0), COL)
    assert cert.status == "refuted" and cert.exact
    assert cert.witness["zero_limit"] == 1.0


def test_expm1_compatible_certified():
    cert = check_compatible(expm1_map(), COL)
    assert cert.status == "certified" and cert.exact


def test_log1p_both_certificates():
    assert check_moderate(log1p_map(), COL).status == "certified"
    assert check_compatible(log1p_map(), COL).status == "certified"


def test_black_box_sqrt_compatible():
    g = ScalarMap(label="sqrt black box", fn=np.sqrt)
    cert = check_compatible(g, COL)
    assert cert.status == "certified" and not cert.exact


def test_black_box_log_reciprocal_refuted():
    g = ScalarMap(
        label="1/|log| black box",
        fn=lambda u: 1.0 / np.abs(np.log(np.clip(u, 1e-300, 0.5))),
    )
    cert = check_compatible(g, COL)
    assert cert.status == "refuted"
    # the witness records a small input whose image refuses to fall
    assert cert.witness["x"] <= 1e-4


# ---------------------------------------------------------------------------
# sequence maps


def test_square_map_temperate():
    report = check_temperate(square_map(), COL)
    assert report.status == "certified"
    assert report.alpha_checked > 0 and report.beta_checked > 0


def test_derivative_map_temperate():
    report = check_temperate(derivative_map(), COL)
    assert report.status == "certified"


def test_exp_seq_map_refuted():
    report = check_temperate(exp_seq_map(), COL)
    assert report.status == "refuted"
    assert report.witness


def test_square_difference_expansion():
    # (f+k)^2 - f^2 through the dedicated difference path
    phi = square_map()
    f = constant_seq(sin_fn())
    k = seq_scale(0.5, constant_seq(sin_fn()))
    xs = np.linspace(-1.0, 1.0, 7)
    lhs = phi.difference(f, k).at(5, xs)
    rhs = phi.apply(seq_scale(1.5, constant_seq(sin_fn()))).at(5, xs) - phi.apply(f).at(5, xs)
    np.testing.assert_allclose(lhs, rhs, atol=1e-12)


# ---------------------------------------------------------------------------
# extension on elements


@pytest.fixture(scope="module")
def delta_element(request):
    from ultraseq.corpus import named_function
    from ultraseq.spaces import colombeau_space

    fspace = FunctionSpace(colombeau_space(), nu_max=2)
    return make_element(named_function("delta"), fspace)


def test_extend_square_of_delta(delta_element):
    out = extend(square_map(), delta_element)
    assert out.report.verdict == "moderate"
    assert out.seq.label.startswith("(delta")


def test_extend_exp_rejected(delta_element):
    with pytest.raises(ExtensionError):
        extend(exp_seq_map(), delta_element)


def test_verify_f2_square(colombeau):
    from ultraseq.corpus import named_function

    f = named_function("delta")
    j = named_function("decaying-sin")
    rep = verify_F2(square_map(), f, j, colombeau)
    assert rep.passed is True and rep.diff_verdict == "negligible"


def test_verify_f2_requires_negligible_perturbation(colombeau):
    f = constant_seq(sin_fn())
    with pytest.raises(ValueError):
        verify_F2(square_map(), f, constant_seq(sin_fn()), colombeau)


def test_verify_f2_exp_fails_on_tall_mollifier(colombeau):
    # the narrow kernel peaks at ~1.657 n, so exp of it is not moderate and
    # the difference after perturbation cannot classify negligible
    from ultraseq.corpus import named_function

    f = named_function("delta-narrow")
    assert f.at(4, np.array([0.0]))[0] == pytest.approx(4 * NARROW_PEAK, rel=1e-9)
    j = named_function("decaying-sin")
    rep = verify_F2(exp_seq_map(), f, j, colombeau)
    assert rep.passed is not True


def test_continuity_trend_scales_down(colombeau):
    from ultraseq.corpus import named_function

    f = named_function("delta")
    k = seq_scale(0.25, named_function("delta"))
    steps = continuity_trend(square_map(), f, k, colombeau, steps=3)
    # each step scales the perturbation by n^-log(10): norms drop 10x
    for (d1, o1), (d2, o2) in zip(steps, steps[1:]):
        assert d2 == pytest.approx(d1 / 10.0, rel=1e-6)
        assert o2 == pytest.approx(o1 / 10.0, rel=1e-2)


# ---------------------------------------------------------------------------
# scalar maps on number representatives


def test_apply_scalar_map_symbolic_power():
    rep = SeqRep.symbolic("n^2")
    out = apply_scalar_map(power_map(2), rep)
    assert out.is_symbolic
    assert growth.format_expr(out.expr) == "n^4"


def test_apply_scalar_map_symbolic_scaling():
    rep = SeqRep.symbolic("n^2")
    out = apply_scalar_map(affine_map(3.0, 0.0), rep)
    assert growth.format_expr(out.expr) == "3*n^2"


def test_apply_scalar_map_sampled_fallback(colombeau):
    rep = SeqRep.symbolic("log(n)^-1")
    out = apply_scalar_map(log1p_map(), rep)
    assert not out.is_symbolic
    assert colombeau.classify(out).verdict in ("moderate", "negligible")
