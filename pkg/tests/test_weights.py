"""Weight sequences, indexed families and asymptotic decay scales."""

import math

import pytest

from ultraseq import growth
from ultraseq.weights import (
    Direction,
    Mode,
    WeightSeq,
    catalog,
    colombeau_weight,
    expdecay_scale,
    power_scale,
    scale_to_weights,
    single_family,
    verify_scale_axioms,
)


def test_colombeau_weight_values():
    w = colombeau_weight()
    assert w.value(math.e) == pytest.approx(1.0)
    assert w.value(100.0) == pytest.approx(1.0 / math.log(100.0))
    assert w.is_symbolic


def test_weight_must_decrease_to_zero():
    with pytest.raises(ValueError):
        WeightSeq(label="n", expr=growth.parse("n"))
    with pytest.raises(ValueError):
        WeightSeq(label="1", expr=growth.parse("1"))


def test_step_weight_values():
    w = catalog("egorov").member(3)
    assert w.is_step
    assert w.values([2, 3, 4, 10]) == [1.0, 1.0, 0.0, 0.0]


def test_catalog_directions_hold_pointwise():
    for name in ("egorov", "ultra"):
        fam = catalog(name)
        assert fam.direction is Direction.INCREASING
        assert fam.verify_direction()
    assert catalog("colombeau").single
    assert catalog("infra").single
    assert catalog("infra").default_mode is Mode.UNIT_BALL


def test_catalog_unknown_name():
    with pytest.raises(ValueError):
        catalog("lebesgue")


def test_ultra_family_exponents():
    fam = catalog("ultra")
    assert fam.m_start == 2
    assert growth.format_expr(fam.member(2).expr) == "n^-2"
    assert growth.format_expr(fam.member(3).expr) == "n^-1.5"
    with pytest.raises(ValueError):
        fam.member(1)


def test_single_family_wraps_one_weight():
    fam = single_family(colombeau_weight(), "solo")
    assert fam.single
    assert fam.member(1) is fam.member(5)


def test_scale_members_and_reciprocals():
    sc = power_scale()
    assert sc.member(0) == growth.ONE
    assert growth.format_expr(sc.member(3)) == "n^-3"
    assert growth.format_expr(sc.member(-3)) == "n^3"
    sd = expdecay_scale()
    assert growth.format_expr(sd.member(2)) == "exp(-2*n)"
    assert growth.format_expr(sd.member(-2)) == "exp(2*n)"


@pytest.mark.parametrize("scale", [power_scale(), expdecay_scale()])
def test_scale_axioms(scale):
    report = verify_scale_axioms(scale)
    assert report.holds
    # each witness level really does sit below the square
    for m, M in report.square_witness.items():
        sq = growth.mul(scale.member(m), scale.member(m))
        assert growth.compare(scale.member(M), sq).relation == growth.LESS


def test_scale_to_weights_symbolic_members():
    W = scale_to_weights(power_scale())
    assert W.direction is Direction.DECREASING
    # 1/|log n^-m| = 1/(m log n)
    w3 = W.member(3)
    assert w3.is_symbolic
    assert w3.value(math.e) == pytest.approx(1.0 / 3.0)

    W = scale_to_weights(expdecay_scale())
    w2 = W.member(2)
    assert w2.value(10.0) == pytest.approx(1.0 / 20.0)
    assert W.verify_direction()


def test_scale_to_weights_level_one_matches_named_families():
    # the power scale at m=1 reproduces the 1/log n weight
    w = scale_to_weights(power_scale()).member(1)
    assert w.value(1000.0) == pytest.approx(colombeau_weight().value(1000.0))
    # the exponential scale at m=1 reproduces 1/n
    w = scale_to_weights(expdecay_scale()).member(1)
    assert w.value(17.0) == pytest.approx(1.0 / 17.0)
