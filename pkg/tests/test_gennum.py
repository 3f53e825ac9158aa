"""Arithmetic on generalized numbers and the association hierarchy."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ultraseq import gennum, growth
from ultraseq.gennum import (
    AssocKind,
    NotModerate,
    PowerXFamily,
    associate,
    bounded_predicate,
    is_zero,
    jx_well_defined,
    make,
    null_predicate,
)
from ultraseq.spaces import SeqRep, colombeau_space, ultranorm

SPACE = colombeau_space()


def gn(text: str):
    return make(SeqRep.symbolic(text), SPACE)


ZERO_N = gn("0")


# ---------------------------------------------------------------------------
# construction and ring operations


def test_make_rejects_divergent_representative():
    with pytest.raises(NotModerate):
        gn("exp(n)")


def test_make_accepts_negligible_and_flags_zero():
    a = gn("exp(-log(n)^2)")
    assert is_zero(a).verdict == "negligible"
    assert is_zero(gn("n^2")).verdict == "moderate"


def test_add_ultrametric_on_norms():
    a, b = gn("n^2"), gn("n^-1")
    s = gennum.add(a, b)
    w = SPACE.single_weight()
    na = ultranorm(a.magnitude, w).log_value
    nb = ultranorm(b.magnitude, w).log_value
    ns = ultranorm(s.magnitude, w).log_value
    assert ns <= max(na, nb) + 1e-12
    # distinct norms force equality (isosceles sharpening)
    assert ns == pytest.approx(max(na, nb), abs=1e-12)


def test_mul_norms_multiply():
    a, b = gn("n^2"), gn("n^3*log(n)")
    p = gennum.mul(a, b)
    w = SPACE.single_weight()
    assert ultranorm(p.magnitude, w).value == pytest.approx(math.exp(5), rel=1e-12)


def test_sub_same_representative_is_zero():
    a = gn("n^2 + log(n)")
    d = gennum.sub(a, a)
    assert is_zero(d).verdict == "negligible"


def test_spaces_must_match():
    from ultraseq.spaces import infra_space

    with pytest.raises(ValueError):
        gennum.add(gn("n^2"), make(SeqRep.symbolic("n^-1"), infra_space()))


# ---------------------------------------------------------------------------
# association kinds: exact frozen examples


def test_strong_threshold_strict():
    # ||n^-3|| = e^-3: strictly below e^-2, not below e^-3 (boundary), not e^-4
    d = SeqRep.symbolic("n^-3")
    a = gn("n^-3")
    v = associate(a, ZERO_N, AssocKind.strong(2.0), difference=d)
    assert v.holds == "yes" and not v.boundary
    v = associate(a, ZERO_N, AssocKind.strong(3.0), difference=d)
    assert v.holds == "no" and v.boundary
    v = associate(a, ZERO_N, AssocKind.strong(4.0), difference=d)
    assert v.holds == "no" and not v.boundary


def test_weak_limits():
    assert associate(gn("log(n)^-1"), ZERO_N, AssocKind.weak()).holds == "yes"
    assert associate(gn("2"), ZERO_N, AssocKind.weak()).holds == "no"
    v = associate(gn("n^-1"), ZERO_N, AssocKind.weak())
    assert v.holds == "yes" and v.witness["limit"] == 0.0


def test_s_dual_weighs_by_reciprocal_weight():
    # e^(s/r_n) = n^s under the 1/log n weight
    d = SeqRep.symbolic("n^-2*log(n)^-1")
    a = make(d, SPACE)
    v = associate(a, ZERO_N, AssocKind.s_dual(2.0), difference=d)
    assert v.holds == "yes"
    assert v.witness["multiplier"] == "n^2"
    assert associate(a, ZERO_N, AssocKind.s_dual(3.0), difference=d).holds == "no"


def test_dual_holds_where_threshold_fails():
    # norm exactly e^-s: the threshold relation fails on the boundary while
    # the polynomially-weighted limit still vanishes
    for s in (1.0, 2.0, 3.0):
        d = SeqRep.symbolic(f"n^-{s:g}*log(n)^-1")
        a = make(d, SPACE)
        thr = associate(a, ZERO_N, AssocKind.weak_s(s), difference=d)
        assert thr.holds == "no" and thr.boundary
        assert thr.witness["log_ultranorm"] == pytest.approx(-s, abs=1e-12)
        dual = associate(a, ZERO_N, AssocKind.s_dual(s), difference=d)
        assert dual.holds == "yes"


_S_GRID = [0.5, 1.0, 2.0, 3.0]
_DECAYS = ["n^-1", "n^-2", "n^-4", "exp(-n)", "n^-2*log(n)", "exp(-log(n)^2)", "0"]


@pytest.mark.parametrize("s", _S_GRID)
@pytest.mark.parametrize("text", _DECAYS)
def test_implication_chain(s, text):
    # strong-s implies weak-s implies s-dual, for every tested pair
    d = SeqRep.symbolic(text)
    a = make(d, SPACE)
    strong = associate(a, ZERO_N, AssocKind.strong(s), difference=d).holds
    weak_s = associate(a, ZERO_N, AssocKind.weak_s(s), difference=d).holds
    dual = associate(a, ZERO_N, AssocKind.s_dual(s), difference=d).holds
    if strong == "yes":
        assert weak_s == "yes"
    if weak_s == "yes":
        assert dual == "yes"


def test_sampled_weak_association():
    d = SeqRep.sampled_from_expr("n^-1")
    a = make(d, SPACE)
    v = associate(a, ZERO_N, AssocKind.weak(), difference=d)
    assert v.holds == "yes"
    d = SeqRep.sampled_from_expr("2")
    v = associate(make(d, SPACE), ZERO_N, AssocKind.weak(), difference=d)
    assert v.holds == "no"


def test_sampled_pair_needs_explicit_difference():
    from ultraseq.growth import NotRepresentable

    a = make(SeqRep.sampled_from_expr("n^-1"), SPACE)
    z = make(SeqRep.sampled_from_expr("log(n)^-1"), SPACE)
    with pytest.raises(NotRepresentable):
        associate(a, z, AssocKind.weak())


# ---------------------------------------------------------------------------
# custom J,X association


def test_custom_jx_with_power_probes():
    # difference n^-2/log n: every fixed power x = n^j with j <= 2 sends it
    # into the null class, so the generic scheme with bounded probes holds
    d = SeqRep.symbolic("exp(-log(n)^2)")
    a = make(d, SPACE)
    kind = AssocKind.custom(null_predicate, PowerXFamily(), "null limit")
    v = associate(a, ZERO_N, kind, difference=d)
    assert v.holds == "yes"

    d2 = SeqRep.symbolic("n^-1")
    a2 = make(d2, SPACE)
    v2 = associate(a2, ZERO_N, kind, difference=d2)
    assert v2.holds == "no"  # x = n^2 sends it to n, not null


def test_jx_well_definedness_audit():
    rep = jx_well_defined(null_predicate, SPACE)
    assert rep.passed and rep.checked_members >= 5
    rep = jx_well_defined(bounded_predicate, SPACE, j_label="bounded")
    assert rep.passed


# ---------------------------------------------------------------------------
# representative change


_KINDS = [AssocKind.weak(), AssocKind.strong(1.0), AssocKind.weak_s(2.0), AssocKind.s_dual(1.0)]


@given(
    st.sampled_from(["n^2", "n^-1", "2", "n^-3*log(n)", "log(n)"]),
    st.sampled_from(["exp(-n)", "exp(-log(n)^2)", "exp(-0.5*n)"]),
)
@settings(max_examples=30, deadline=None)
def test_verdicts_survive_ideal_perturbation(text, ktext):
    base = SeqRep.symbolic(text)
    pert = SeqRep.symbolic(growth.add(growth.parse(text), growth.parse(ktext)))
    a, ap = make(base, SPACE), make(pert, SPACE)
    assert is_zero(a).verdict == is_zero(ap).verdict
    for kind in _KINDS:
        v1 = associate(a, ZERO_N, kind, difference=base)
        v2 = associate(ap, ZERO_N, kind, difference=pert)
        assert v1.holds == v2.holds
