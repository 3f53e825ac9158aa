"""Generalized numbers: quotient-ring arithmetic and association relations.

A generalized number is a moderate sequence taken modulo the negligible
ideal.  Elements carry a nonnegative magnitude representation plus a
unimodular phase (symbolic tier) or a complex evaluator (sampled tier).
Every association criterion factors through the magnitude of a difference
or a scalar limit, so phases only matter when building that difference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from ultraseq import growth
from ultraseq.growth import GrowthExpr, NotRepresentable, ParityLimits
from ultraseq.spaces import (
    ClassificationReport,
    NumberSpace,
    SeqRep,
    UltranormValue,
    format_value,
    ultranorm,
)
from ultraseq.weights import WeightSeq

__all__ = [
    "GenNumber",
    "AssocKind",
    "AssocVerdict",
    "NotModerate",
    "PowerXFamily",
    "make",
    "add",
    "mul",
    "neg",
    "sub",
    "is_zero",
    "associate",
    "jx_well_defined",
    "null_predicate",
    "bounded_predicate",
    "norm_below_predicate",
    "JXReport",
    "seq_add",
]


class NotModerate(ValueError):
    """Rejected representative: not moderate in the requested space."""


def _same_space(a: NumberSpace, b: NumberSpace) -> bool:
    return a.family.name == b.family.name and a.mode == b.mode


@dataclass(frozen=True)
class GenNumber:
    """One element of a generalized-number ring, by representative."""

    space: NumberSpace
    magnitude: SeqRep
    phase: complex = 1 + 0j
    complex_fn: Callable[[np.ndarray], np.ndarray] | None = None

    @property
    def sampled(self) -> bool:
        return self.complex_fn is not None

    @property
    def zero_rep(self) -> bool:
        return (
            self.magnitude.is_truncated
            or (self.magnitude.is_symbolic and self.magnitude.expr.is_zero)
        )

    def to_sampled(self) -> "GenNumber":
        if self.sampled:
            return self
        mag = self.magnitude
        ph = self.phase

        def fn(ns: np.ndarray) -> np.ndarray:
            with np.errstate(over="ignore"):
                vals = np.exp(np.minimum(mag.log_values(ns), 700.0))
            return ph * vals

        return GenNumber(
            space=self.space,
            magnitude=SeqRep.sampled(
                lambda ns: np.abs(fn(ns)),
                label=f"sampled {mag.label}",
                n_min=mag.n_min,
                n_max=mag.n_max,
            ),
            complex_fn=fn,
        )


def make(rep, space: NumberSpace, phase: complex = 1 + 0j, label: str | None = None) -> GenNumber:
    """Wrap a representative, rejecting magnitudes that are not moderate.

    `rep` may be an expression string, a growth expression, a SeqRep, or a
    callable yielding complex values on integer arrays.
    """
    if callable(rep) and not isinstance(rep, (str, GrowthExpr, SeqRep)):
        fn = rep
        mag = SeqRep.sampled(
            lambda ns: np.abs(np.asarray(fn(ns))), label=label or "sampled values"
        )
        g = GenNumber(space=space, magnitude=mag, complex_fn=lambda ns: np.asarray(fn(ns)))
    else:
        if isinstance(rep, SeqRep):
            mag = rep
        else:
            mag = SeqRep.symbolic(rep, label=label)
        if abs(abs(phase) - 1.0) > 1e-12:
            raise ValueError("phase must be unimodular")
        g = GenNumber(space=space, magnitude=mag, phase=phase)
    report = space.classify(g.magnitude)
    if report.in_moderate is False:
        raise NotModerate(
            f"representative {g.magnitude.label!r} is not moderate in {space.name}"
        )
    return g


# ---------------------------------------------------------------------------
# magnitude-level addition shared with the JX machinery


def seq_add(u: SeqRep, v: SeqRep) -> SeqRep:
    """Pointwise sum of nonnegative sequences, staying exact when possible.

    Truncated summands vanish on the tail, and every quantity computed here
    is tail-determined, so they drop out of mixed sums.
    """
    if u.is_truncated and v.is_truncated:
        return SeqRep.truncated(max(u.cutoff, v.cutoff))
    if u.is_truncated:
        return v
    if v.is_truncated:
        return u
    if u.is_symbolic and v.is_symbolic:
        return SeqRep.symbolic(growth.add(u.expr, v.expr))

    def log_sum(ns: np.ndarray) -> np.ndarray:
        return np.logaddexp(u.log_values(ns), v.log_values(ns))

    return SeqRep.sampled(
        log_sum,
        label=f"{u.label} + {v.label}",
        log_scale=True,
        n_min=max(u.n_min, v.n_min),
        n_max=min(u.n_max, v.n_max),
        sample_ns=u.sample_ns or v.sample_ns,
    )


def _check_spaces(a: GenNumber, b: GenNumber):
    if not _same_space(a.space, b.space):
        raise ValueError(f"space mismatch: {a.space.name} vs {b.space.name}")


def add(a: GenNumber, b: GenNumber) -> GenNumber:
    _check_spaces(a, b)
    if a.zero_rep:
        return b
    if b.zero_rep:
        return a
    if a.sampled or b.sampled:
        sa, sb = a.to_sampled(), b.to_sampled()

        def fn(ns: np.ndarray) -> np.ndarray:
            return sa.complex_fn(ns) + sb.complex_fn(ns)

        return make(fn, a.space, label=f"{a.magnitude.label} + {b.magnitude.label}")
    if a.magnitude.is_symbolic and b.magnitude.is_symbolic:
        if a.magnitude.expr == b.magnitude.expr:
            s = a.phase + b.phase
            mag = abs(s)
            if mag == 0.0:
                return GenNumber(space=a.space, magnitude=SeqRep.symbolic(growth.ZERO))
            scaled = growth.mul(growth.constant(mag), a.magnitude.expr)
            return GenNumber(
                space=a.space, magnitude=SeqRep.symbolic(scaled), phase=s / mag
            )
        if a.phase == b.phase:
            return GenNumber(
                space=a.space,
                magnitude=seq_add(a.magnitude, b.magnitude),
                phase=a.phase,
            )
    raise NotRepresentable(
        "sum of symbolic representatives with different phases and magnitudes; "
        "supply an explicit difference or use sampled representatives"
    )


def mul(a: GenNumber, b: GenNumber) -> GenNumber:
    _check_spaces(a, b)
    if a.zero_rep or b.zero_rep:
        cut = None
        for g in (a, b):
            if g.magnitude.is_truncated:
                cut = g.magnitude.cutoff if cut is None else min(cut, g.magnitude.cutoff)
        if cut is not None:
            return GenNumber(space=a.space, magnitude=SeqRep.truncated(cut))
        return GenNumber(space=a.space, magnitude=SeqRep.symbolic(growth.ZERO))
    if a.sampled or b.sampled:
        sa, sb = a.to_sampled(), b.to_sampled()

        def fn(ns: np.ndarray) -> np.ndarray:
            return sa.complex_fn(ns) * sb.complex_fn(ns)

        return make(fn, a.space, label=f"({a.magnitude.label})*({b.magnitude.label})")
    return GenNumber(
        space=a.space,
        magnitude=SeqRep.symbolic(growth.mul(a.magnitude.expr, b.magnitude.expr)),
        phase=a.phase * b.phase,
    )


def neg(a: GenNumber) -> GenNumber:
    if a.sampled:
        return GenNumber(
            space=a.space,
            magnitude=a.magnitude,
            complex_fn=lambda ns: -a.complex_fn(ns),
        )
    return GenNumber(space=a.space, magnitude=a.magnitude, phase=-a.phase)


def sub(a: GenNumber, b: GenNumber) -> GenNumber:
    return add(a, neg(b))


def is_zero(a: GenNumber) -> ClassificationReport:
    """Negligibility of the representative (equality in the quotient)."""
    return a.space.classify(a.magnitude)


# ---------------------------------------------------------------------------
# association


@dataclass(frozen=True)
class PowerXFamily:
    """The countable multiplier family n^s, s = 0, 1, 2, ...

    Symbolic differences admit an exact all-s decision; sampled ones are
    probed on a geometric subset of exponents up to s_max.
    """

    s_max: int = 32

    @property
    def probe_exponents(self) -> tuple[int, ...]:
        out, s = [], 1
        while s <= self.s_max:
            out.append(s)
            s *= 2
        return (0, *out)


@dataclass(frozen=True)
class AssocKind:
    """Which association relation to test.

    name is one of strong-s, weak, s-dual, weak-s, custom-JX; the threshold
    kinds carry s, the custom kind carries a predicate J on magnitude
    sequences and a multiplier set X.
    """

    name: str
    s: float | None = None
    j_predicate: Callable[[SeqRep], bool | None] | None = None
    x_set: tuple[GenNumber, ...] | PowerXFamily | None = None
    j_label: str = ""

    @staticmethod
    def strong(s: float) -> "AssocKind":
        return AssocKind(name="strong-s", s=float(s))

    @staticmethod
    def weak() -> "AssocKind":
        return AssocKind(name="weak")

    @staticmethod
    def s_dual(s: float) -> "AssocKind":
        return AssocKind(name="s-dual", s=float(s))

    @staticmethod
    def weak_s(s: float) -> "AssocKind":
        return AssocKind(name="weak-s", s=float(s))

    @staticmethod
    def custom(j_predicate, x_set, j_label: str = "custom J") -> "AssocKind":
        xs = x_set if isinstance(x_set, PowerXFamily) else tuple(x_set)
        return AssocKind(name="custom-JX", j_predicate=j_predicate, x_set=xs, j_label=j_label)

    def describe(self) -> str:
        if self.name in ("strong-s", "weak-s", "s-dual"):
            return f"{self.name}(s={self.s:g})"
        if self.name == "custom-JX":
            n = "n^s family" if isinstance(self.x_set, PowerXFamily) else f"{len(self.x_set)} multipliers"
            return f"custom-JX({self.j_label}; {n})"
        return self.name


@dataclass(frozen=True)
class AssocVerdict:
    holds: str  # yes | no | inconclusive
    kind: AssocKind
    boundary: bool = False
    witness: dict = field(default_factory=dict)
    notes: str = ""

    def __bool__(self) -> bool:
        return self.holds == "yes"


def _difference_magnitude(
    a: GenNumber, b: GenNumber, difference: SeqRep | GenNumber | None
) -> SeqRep:
    if difference is not None:
        return difference.magnitude if isinstance(difference, GenNumber) else difference
    try:
        return sub(a, b).magnitude
    except NotRepresentable:
        raise NotRepresentable(
            "cannot form |a - b| from these representatives; pass difference="
        ) from None


def _limit_is_zero(lv) -> bool:
    if isinstance(lv, ParityLimits):
        return lv.even == 0.0 and lv.odd == 0.0
    return lv == 0.0


_TREND_TOL = 1e-3


def _sampled_null_trend(diff: SeqRep, shift_log: Callable[[np.ndarray], np.ndarray] | None = None,
                        tol: float = _TREND_TOL) -> tuple[str, dict]:
    """Does the (optionally reweighted) sequence tend to zero, judged from
    dyadic window maxima of its log values?"""
    from ultraseq.spaces import _sample_grid

    ns = (
        np.asarray(sorted(set(diff.sample_ns)), dtype=np.int64)
        if diff.sample_ns is not None
        else _sample_grid(diff.n_min, diff.n_max)
    )
    logs = diff.log_values(ns)
    if shift_log is not None:
        logs = logs + shift_log(ns)
    keys = np.floor(np.log2(ns)).astype(int)
    sups = []
    for k in np.unique(keys):
        sups.append(float(np.max(logs[keys == k])))
    tail = sups[-4:]
    witness = {"last_window_sup_log": tail[-1], "tol_log": math.log(tol)}
    nonincreasing = all(tail[i + 1] <= tail[i] + 1e-9 for i in range(len(tail) - 1))
    if tail[-1] <= math.log(tol) and nonincreasing:
        return "yes", witness
    # stabilized or rising above tolerance: not tending to zero
    if tail[-1] > math.log(tol) and tail[-1] >= tail[0] - 0.05:
        return "no", witness
    return "inconclusive", witness


def _threshold_verdict(v: UltranormValue, s: float, kind: AssocKind) -> AssocVerdict:
    ans = v.below(-s)
    witness = {
        "ultranorm": format_value(v, with_band=True),
        "log_ultranorm": v.log_value,
        "threshold": f"e^-{s:g}",
        "log_threshold": -s,
    }
    if ans == "yes":
        return AssocVerdict("yes", kind, witness=witness)
    if ans == "boundary":
        return AssocVerdict(
            "no",
            kind,
            boundary=True,
            witness=witness,
            notes="ultranorm sits exactly on the threshold; the strict inequality fails",
        )
    if ans == "no":
        return AssocVerdict("no", kind, witness=witness)
    return AssocVerdict("inconclusive", kind, witness=witness)


def associate(
    a: GenNumber,
    b: GenNumber,
    kind: AssocKind,
    difference: SeqRep | GenNumber | None = None,
) -> AssocVerdict:
    """Test one association relation between two generalized numbers.

    Symbolic magnitudes lose sign information, so when neither automatic
    subtraction nor a supplied difference is available the call raises.
    """
    _check_spaces(a, b)
    diff = _difference_magnitude(a, b, difference)
    space = a.space

    if kind.name in ("strong-s", "weak-s"):
        w = space.single_weight()
        v = ultranorm(diff, w)
        out = _threshold_verdict(v, kind.s, kind)
        if kind.name == "weak-s":
            out = AssocVerdict(
                out.holds,
                kind,
                boundary=out.boundary,
                witness=out.witness,
                notes=(out.notes + "; " if out.notes else "")
                + "on scalar sequences this coincides with the strong form",
            )
        return out

    if kind.name == "weak":
        if diff.is_truncated:
            return AssocVerdict("yes", kind, witness={"limit": 0.0})
        if diff.is_symbolic:
            lv = growth.limit_value(diff.expr)
            holds = _limit_is_zero(lv)
            top = lv.sup if isinstance(lv, ParityLimits) else lv
            return AssocVerdict("yes" if holds else "no", kind, witness={"limit": top})
        ans, witness = _sampled_null_trend(diff)
        return AssocVerdict(ans, kind, witness=witness)

    if kind.name == "s-dual":
        w = space.single_weight()
        if diff.is_truncated:
            return AssocVerdict("yes", kind, witness={"limit": 0.0})
        if diff.is_symbolic and w.is_symbolic:
            try:
                mult = growth.exp_of_reciprocal(w.expr, kind.s)
                prod = growth.mul(mult, diff.expr) if not diff.expr.is_zero else growth.ZERO
                lv = growth.limit_value(prod)
                holds = _limit_is_zero(lv)
                top = lv.sup if isinstance(lv, ParityLimits) else lv
                return AssocVerdict(
                    "yes" if holds else "no",
                    kind,
                    witness={"limit": top, "multiplier": growth.format_expr(mult)},
                )
            except NotRepresentable:
                pass
        sval = kind.s
        ans, witness = _sampled_null_trend(
            diff, shift_log=lambda ns: sval / np.asarray(w.values(ns), dtype=float)
        )
        return AssocVerdict(ans, kind, witness=witness)

    if kind.name == "custom-JX":
        return _custom_jx(a, b, kind, diff)

    raise ValueError(f"unknown association kind {kind.name!r}")


def _custom_jx(a: GenNumber, b: GenNumber, kind: AssocKind, diff: SeqRep) -> AssocVerdict:
    xs = kind.x_set
    if isinstance(xs, PowerXFamily):
        if diff.is_truncated or (diff.is_symbolic and diff.expr.is_zero):
            return AssocVerdict("yes", kind, witness={"multipliers": "all n^s"})
        if diff.is_symbolic:
            # n^s * diff -> 0 for every s at once: the weighted log limit
            # against 1/log n must be -inf (faster-than-any-power decay)
            branches = diff.expr.branches if diff.expr.modulated else (diff.expr,)
            ok = True
            for e in branches:
                if e.is_zero:
                    continue
                lim = growth.limit_of_product(
                    growth.parse("log(n)^-1"), growth.log_expr(e)
                )
                if lim != -math.inf:
                    ok = False
            return AssocVerdict(
                "yes" if ok else "no",
                kind,
                witness={"multipliers": "all n^s, decided exactly"},
            )
        results = {}
        for s in xs.probe_exponents:
            ans, wit = _sampled_null_trend(
                diff, shift_log=lambda ns, s=s: s * np.log(np.asarray(ns, dtype=float))
            )
            results[s] = ans
            if ans != "yes":
                return AssocVerdict(
                    ans,
                    kind,
                    witness={"failing_exponent": s, **wit},
                    notes=f"probed exponents up to {xs.s_max}",
                )
        return AssocVerdict(
            "yes",
            kind,
            witness={"probed_exponents": list(results)},
            notes=f"probed exponents up to {xs.s_max}; exhaustive only on the symbolic tier",
        )

    answers = []
    for x in xs:
        prod = _scaled_magnitude(x, diff)
        res = kind.j_predicate(prod)
        answers.append(res)
        if res is False:
            return AssocVerdict(
                "no", kind, witness={"failing_multiplier": x.magnitude.label}
            )
    if any(r is None for r in answers):
        return AssocVerdict("inconclusive", kind, witness={"tested": len(answers)})
    return AssocVerdict("yes", kind, witness={"tested": len(answers)})


def _scaled_magnitude(x: GenNumber, diff: SeqRep) -> SeqRep:
    if diff.is_truncated:
        return diff
    if x.magnitude.is_symbolic and diff.is_symbolic:
        if diff.expr.is_zero:
            return diff
        return SeqRep.symbolic(growth.mul(x.magnitude.expr, diff.expr))

    def log_prod(ns: np.ndarray) -> np.ndarray:
        return x.magnitude.log_values(ns) + diff.log_values(ns)

    return SeqRep.sampled(
        log_prod,
        label=f"({x.magnitude.label})*({diff.label})",
        log_scale=True,
        n_min=max(x.magnitude.n_min, diff.n_min),
        n_max=min(x.magnitude.n_max, diff.n_max),
    )


# ---------------------------------------------------------------------------
# canned J predicates and the well-definedness audit


def null_predicate(rep: SeqRep) -> bool | None:
    """J = sequences tending to zero."""
    if rep.is_truncated:
        return True
    if rep.is_symbolic:
        return _limit_is_zero(growth.limit_value(rep.expr))
    ans, _ = _sampled_null_trend(rep)
    return {"yes": True, "no": False, "inconclusive": None}[ans]


def bounded_predicate(rep: SeqRep) -> bool | None:
    """J = bounded sequences."""
    if rep.is_truncated:
        return True
    if rep.is_symbolic:
        return growth.is_bounded(rep.expr)
    from ultraseq.spaces import _sample_grid

    ns = _sample_grid(rep.n_min, rep.n_max)
    logs = rep.log_values(ns)
    keys = np.floor(np.log2(ns)).astype(int)
    sups = [float(np.max(logs[keys == k])) for k in np.unique(keys)]
    if sups[-1] <= sups[-2] + 1e-9 and sups[-1] < 50.0:
        return True
    if sups[-1] > 50.0 and sups[-1] > sups[-2]:
        return False
    return None


def norm_below_predicate(s: float, weight: WeightSeq) -> Callable[[SeqRep], bool | None]:
    """J = sequences with ultranorm strictly below e^-s (an additive group
    by the ultrametric inequality)."""

    def pred(rep: SeqRep) -> bool | None:
        v = ultranorm(rep, weight)
        ans = v.below(-s)
        return {"yes": True, "no": False, "boundary": False, "inconclusive": None}[ans]

    return pred


@dataclass(frozen=True)
class JXReport:
    passed: bool
    containment_failures: tuple[str, ...]
    additivity_failures: tuple[str, ...]
    checked_members: int
    checked_pairs: int
    notes: str = ""


def _negligible_corpus(space: NumberSpace) -> list[SeqRep]:
    candidates = [
        SeqRep.symbolic(growth.ZERO, label="0"),
        SeqRep.truncated(40),
        SeqRep.symbolic("exp(-log(n)^2)"),
        SeqRep.symbolic("exp(-2*log(n)^2)"),
        SeqRep.symbolic("exp(-log(n)^3)"),
        SeqRep.symbolic("exp(-n)"),
        SeqRep.symbolic("exp(-0.5*n)"),
        SeqRep.symbolic("exp(-n^2)"),
    ]
    out = []
    for c in candidates:
        if space.classify(c).verdict == "negligible":
            out.append(c)
    return out


def jx_well_defined(
    j_predicate: Callable[[SeqRep], bool | None],
    space: NumberSpace,
    extra_members: Iterable[SeqRep] = (),
    j_label: str = "J",
) -> JXReport:
    """Audit that J can serve in JX-association over this space.

    Checks that J contains a corpus of ideal (negligible) elements and that
    J is closed under addition on sampled member pairs.  Sampling cannot
    prove the group property, only refute it; a pass means no
    counterexample was found.
    """
    ideal = _negligible_corpus(space)
    containment = []
    for j in ideal:
        if j_predicate(j) is False:
            containment.append(f"ideal element {j.label!r} is outside {j_label}")
    members = [m for m in (*ideal, *extra_members) if j_predicate(m) is True]
    additivity = []
    pairs = 0
    for i, u in enumerate(members):
        for v in members[i:]:
            pairs += 1
            s = seq_add(u, v)
            if j_predicate(s) is False:
                additivity.append(
                    f"{j_label} contains {u.label!r} and {v.label!r} but not their sum"
                )
    return JXReport(
        passed=not containment and not additivity,
        containment_failures=tuple(containment),
        additivity_failures=tuple(additivity),
        checked_members=len(members),
        checked_pairs=pairs,
        notes=f"ideal corpus of {len(ideal)} elements",
    )
