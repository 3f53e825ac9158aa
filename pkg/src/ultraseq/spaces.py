"""Ultranorms, sequence classification, and the induced pseudometric.

The central quantity is the ultranorm of a positive sequence f against a
weight r: exp of the upper limit of r_n * log f_n.  All computation stays
in the log domain so that values like e^-1000 keep their full meaning.

Sequences come in three representations.  Symbolic ones carry a growth
expression and admit exact answers.  Truncated ones are zero beyond a
cutoff, which forces the ultranorm to zero under every weight.  Sampled
ones expose only a log-evaluator; their ultranorms are estimated from
dyadic tail windows and returned with an uncertainty band.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

import numpy as np

from ultraseq import growth
from ultraseq.growth import GrowthExpr, ParityLimits
from ultraseq.weights import Direction, Mode, WeightFamily, WeightSeq, catalog

__all__ = [
    "SeqRep",
    "UltranormValue",
    "ClassificationReport",
    "NumberSpace",
    "ultranorm",
    "classify",
    "pseudometric",
    "ideal_check",
    "colombeau_space",
    "infra_space",
    "format_value",
]


# ---------------------------------------------------------------------------
# sequence representations


@dataclass(frozen=True)
class SeqRep:
    """A nonnegative sequence under one of three representations.

    `expr` gives exact symbolic asymptotics.  `cutoff` marks a sequence
    that vanishes beyond the given index (the values before it are
    irrelevant to every tail quantity).  `log_evaluator` supports sampled
    access: it maps an integer array to log-values, -inf encoding zeros.
    """

    label: str
    expr: GrowthExpr | None = None
    cutoff: int | None = None
    log_evaluator: Callable[[np.ndarray], np.ndarray] | None = None
    n_min: int = 2
    n_max: int = 1_000_000
    sample_ns: tuple[int, ...] | None = None

    def __post_init__(self):
        reps = sum(x is not None for x in (self.expr, self.cutoff, self.log_evaluator))
        if reps != 1:
            raise ValueError("need exactly one of expr, cutoff, log_evaluator")
        if self.expr is not None:
            object.__setattr__(self, "n_min", max(self.n_min, self.expr.eval_n_min))
        if self.n_max < 10_000:
            raise ValueError("n_max must leave room for tail estimation (>= 10^4)")

    # -- constructors

    @staticmethod
    def symbolic(text_or_expr: str | GrowthExpr, label: str | None = None) -> "SeqRep":
        e = growth.parse(text_or_expr) if isinstance(text_or_expr, str) else text_or_expr
        return SeqRep(label=label or growth.format_expr(e), expr=e)

    @staticmethod
    def truncated(cutoff: int, label: str | None = None) -> "SeqRep":
        return SeqRep(label=label or f"zero beyond {cutoff}", cutoff=cutoff)

    @staticmethod
    def sampled(
        values_fn: Callable[[np.ndarray], np.ndarray],
        label: str,
        *,
        log_scale: bool = False,
        n_min: int = 2,
        n_max: int = 1_000_000,
        sample_ns: Iterable[int] | None = None,
    ) -> "SeqRep":
        if log_scale:
            log_fn = values_fn
        else:

            def log_fn(ns: np.ndarray) -> np.ndarray:
                vals = np.asarray(values_fn(ns), dtype=float)
                with np.errstate(divide="ignore"):
                    return np.where(vals > 0, np.log(np.maximum(vals, 1e-300)), -math.inf)

        return SeqRep(
            label=label,
            log_evaluator=log_fn,
            n_min=n_min,
            n_max=n_max,
            sample_ns=tuple(sample_ns) if sample_ns is not None else None,
        )

    @staticmethod
    def sampled_from_expr(text_or_expr: str | GrowthExpr, label: str | None = None) -> "SeqRep":
        """Sampled view of a symbolic sequence, for exercising the estimator."""
        e = growth.parse(text_or_expr) if isinstance(text_or_expr, str) else text_or_expr
        return SeqRep(
            label=label or ("sampled " + growth.format_expr(e)),
            log_evaluator=lambda ns: np.atleast_1d(growth.eval_log(e, ns)),
            n_min=e.eval_n_min,
        )

    @property
    def is_symbolic(self) -> bool:
        return self.expr is not None

    @property
    def is_truncated(self) -> bool:
        return self.cutoff is not None

    def log_values(self, ns: np.ndarray) -> np.ndarray:
        ns = np.asarray(ns)
        if self.cutoff is not None:
            return np.where(ns <= self.cutoff, 0.0, -math.inf)
        if self.expr is not None:
            return np.atleast_1d(growth.eval_log(self.expr, ns))
        return np.asarray(self.log_evaluator(ns), dtype=float)


# ---------------------------------------------------------------------------
# ultranorm values


@dataclass(frozen=True)
class UltranormValue:
    """An ultranorm, kept in the log domain alongside the plain value.

    `log_value` is the authoritative field: +inf marks divergence, -inf a
    zero ultranorm.  Estimated results carry a log-scale uncertainty band
    and a stability flag; exact ones have `exact=True` and no band.
    """

    log_value: float
    exact: bool
    band_log: tuple[float, float] | None = None
    stable: bool = True
    witness: str = ""

    @property
    def value(self) -> float:
        if self.log_value == math.inf:
            return math.inf
        return math.exp(self.log_value) if self.log_value > -math.inf else 0.0

    def _band(self) -> tuple[float, float]:
        if self.band_log is not None:
            return self.band_log
        return (self.log_value, self.log_value)

    def is_finite(self) -> bool | None:
        """True/False when decided, None when the evidence straddles divergence.

        Estimated values key on the committed log_value: the estimator only
        commits to +inf under a strong divergence signal, recorded in the
        witness, and the band keeps the residual uncertainty for threshold
        queries.
        """
        if self.exact:
            return self.log_value < math.inf
        if self.log_value == math.inf:
            return False
        lo, hi = self._band()
        return True if hi < math.inf else None

    def is_zero(self) -> bool | None:
        if self.exact:
            return self.log_value == -math.inf
        if self.log_value == -math.inf:
            return True
        lo, hi = self._band()
        return False if lo > -math.inf else None

    def below(self, threshold_log: float) -> str:
        """Compare to a log threshold: 'yes', 'no', 'boundary', or 'inconclusive'."""
        if self.exact:
            if self.log_value == threshold_log:
                return "boundary"
            return "yes" if self.log_value < threshold_log else "no"
        lo, hi = self._band()
        if hi < threshold_log:
            return "yes"
        if lo > threshold_log:
            return "no"
        return "inconclusive"


def _fmt_point(log_value: float) -> str:
    if log_value == math.inf:
        return "divergent"
    if log_value == -math.inf:
        return "0"
    x = math.exp(log_value)
    if x == 0.0 or x == math.inf:
        # magnitude representable only in the log domain
        return f"exp({log_value:.9g})"
    return f"{x:.9g}"


def format_value(v: UltranormValue, with_band: bool = False) -> str:
    s = _fmt_point(v.log_value)
    if with_band and not v.exact and v.band_log is not None:
        lo, hi = v.band_log
        s += f" in [{_fmt_point(lo)}, {_fmt_point(hi)}]"
        if not v.stable:
            s += " (unstable)"
    return s


# ---------------------------------------------------------------------------
# exact ultranorms for symbolic input


def _exact_limit(f: SeqRep, r: WeightSeq) -> float:
    if f.cutoff is not None:
        return -math.inf
    e = f.expr
    if e.is_zero:
        return -math.inf
    if r.is_step:
        # beyond the step the exponent is 0 and positive entries contribute
        # log 1 = 0; a symbolic nonzero expression is eventually positive, so
        # the upper limit is 0 (norm 1) unless the whole tail vanishes.
        branches = e.branches if e.modulated else (e,)
        if any(not b.is_zero for b in branches):
            return 0.0
        return -math.inf
    lim = growth.limit_of_product(r.expr, growth.log_expr(e))
    if isinstance(lim, ParityLimits):
        return lim.sup
    return lim


def _exact_ultranorm(f: SeqRep, r: WeightSeq) -> UltranormValue:
    if f.expr is not None and f.expr.modulated:
        ev, od = f.expr.branches
        parts = []
        for branch, name in ((ev, "even"), (od, "odd")):
            sub = SeqRep(label=f"{f.label}[{name}]", expr=branch)
            parts.append(_exact_limit(sub, r))
        lim = max(parts)
        witness = f"upper limit over parity branches: even {parts[0]:g}, odd {parts[1]:g}"
    else:
        lim = _exact_limit(f, r)
        witness = "exact limit of weighted log values"
    return UltranormValue(log_value=lim, exact=True, witness=witness)


# ---------------------------------------------------------------------------
# sampled tail estimation

_WINDOW_FIT = 10
_DIVERGE_LOG = 50.0
_STABLE_WIDTH = 0.5


def _sample_grid(n_min: int, n_max: int, per_window: int = 6) -> np.ndarray:
    k_lo = int(math.floor(math.log2(max(n_min, 2))))
    k_hi = int(math.floor(math.log2(n_max)))
    pts: list[int] = []
    for k in range(k_lo, k_hi + 1):
        lo, hi = 2 ** k, min(2 ** (k + 1) - 1, n_max)
        if hi < n_min:
            continue
        lo = max(lo, n_min)
        qs = np.unique(np.round(np.geomspace(lo, hi, per_window)).astype(np.int64))
        pts.extend(int(q) for q in qs)
    return np.unique(np.asarray(pts, dtype=np.int64))


def _tail_estimate(f: SeqRep, r: WeightSeq) -> UltranormValue:
    """Estimate exp(limsup r_n log f_n) from dyadic window maxima.

    Window maxima of t_n = r_n log f_n are extrapolated against the basis
    {1, 1/L, log L / L} in L = log n, which reproduces the exact tail law
    for constants, powers of n, our weight catalogs, and exponentials.
    The band is driven by fit residuals; when the basis cannot explain the
    tail, a steady drift in L commits to a +-inf limit, and anything else
    comes back wide and unstable.
    """
    if f.sample_ns is not None:
        ns = np.asarray(sorted(set(f.sample_ns)), dtype=np.int64)
        ns = ns[ns >= max(f.n_min, r.n_min if not r.is_step else 2)]
    else:
        ns = _sample_grid(max(f.n_min, r.n_min if not r.is_step else 2), f.n_max)
    logs = f.log_values(ns)
    rs = np.asarray(r.values(ns), dtype=float)
    with np.errstate(invalid="ignore"):
        t = rs * logs
    # conventions: 0 * (-inf) = -inf here (a zero weight flattens zeros to
    # zero, positives to one), and r * log stays -inf whenever f_n = 0
    t = np.where(np.isneginf(logs), -math.inf, t)
    t = np.where((rs == 0.0) & np.isfinite(logs), 0.0, t)

    keys = np.floor(np.log2(ns)).astype(int)
    # keep the location of each window sup: fitting at the true argmax
    # instead of the window midpoint keeps the asymptote unbiased
    windows: list[tuple[int, float, float]] = []
    for k in np.unique(keys):
        mask = keys == k
        sub = t[mask]
        i = int(np.argmax(sub))
        windows.append((int(k), float(sub[i]), float(np.log(ns[mask][i]))))
    windows.sort()
    sups = np.asarray([w[1] for w in windows])
    sup_ls = np.asarray([w[2] for w in windows])

    tail = sups[-min(len(sups), _WINDOW_FIT):]
    tail_ls = sup_ls[-len(tail):]

    if np.isneginf(tail).all():
        return UltranormValue(
            log_value=-math.inf,
            exact=False,
            band_log=(-math.inf, -math.inf),
            stable=True,
            witness=f"all sampled tail values vanish beyond n={ns[0]}",
        )
    if tail[-1] > _DIVERGE_LOG and (len(tail) < 2 or tail[-1] >= tail[-2]):
        return UltranormValue(
            log_value=math.inf,
            exact=False,
            band_log=(_DIVERGE_LOG, math.inf),
            stable=True,
            witness=f"weighted log values exceed {_DIVERGE_LOG:g} and still rising",
        )
    if tail[-1] < -_DIVERGE_LOG and (len(tail) < 2 or tail[-1] <= tail[-2]):
        return UltranormValue(
            log_value=-math.inf,
            exact=False,
            band_log=(-math.inf, -_DIVERGE_LOG),
            stable=True,
            witness=f"weighted log values fall below -{_DIVERGE_LOG:g} and still falling",
        )

    finite = np.isfinite(tail)
    ys = tail[finite]
    Ls = tail_ls[finite]
    if len(ys) < 3:
        alpha = float(ys[-1])
        width = max(1.0, abs(alpha))
        return UltranormValue(
            log_value=alpha,
            exact=False,
            band_log=(alpha - width, alpha + width),
            stable=False,
            witness="too few finite tail windows for a fit",
        )
    basis = np.column_stack([np.ones_like(Ls), 1.0 / Ls, np.log(Ls) / Ls])
    coef, *_ = np.linalg.lstsq(basis, ys, rcond=None)
    resid = float(np.max(np.abs(basis @ coef - ys)))
    alpha = float(coef[0])
    last_sup = float(ys[-1])
    if resid <= 0.02:
        width = max(6.0 * resid, 1e-9 + 1e-5 * abs(alpha))
        return UltranormValue(
            log_value=alpha,
            exact=False,
            band_log=(alpha - width, alpha + width),
            stable=width <= _STABLE_WIDTH,
            witness=(
                f"tail fit over {len(ys)} dyadic windows; last window sup {last_sup:.6g}, "
                f"extrapolated {alpha:.6g}"
            ),
        )
    # the convergent basis cannot explain the tail; a steady drift in L
    # means t_n tracks a growing multiple of log n and the limsup is +-inf
    lin = np.column_stack([np.ones_like(Ls), Ls])
    lcoef, *_ = np.linalg.lstsq(lin, ys, rcond=None)
    lresid = float(np.max(np.abs(lin @ lcoef - ys)))
    slope = float(lcoef[1])
    if abs(slope) >= 0.05 and abs(slope) * Ls[-1] >= max(1.0, 8.0 * lresid):
        if slope > 0:
            return UltranormValue(
                log_value=math.inf,
                exact=False,
                band_log=(float(np.min(ys)), math.inf),
                stable=True,
                witness=f"weighted log values drift upward at slope {slope:.3g} per unit log n",
            )
        return UltranormValue(
            log_value=-math.inf,
            exact=False,
            band_log=(-math.inf, float(np.max(ys))),
            stable=True,
            witness=f"weighted log values drift downward at slope {slope:.3g} per unit log n",
        )
    spread = abs(last_sup - float(ys[0]))
    return UltranormValue(
        log_value=last_sup,
        exact=False,
        band_log=(float(np.min(ys)) - spread, float(np.max(ys)) + spread),
        stable=False,
        witness=(
            f"tail fit residual {resid:.3g} too large to extrapolate; "
            f"last window sup {last_sup:.6g}"
        ),
    )


def ultranorm(f: SeqRep, r: WeightSeq) -> UltranormValue:
    """The ultranorm of f against weight r: exact when both sides allow it."""
    if f.is_truncated:
        return UltranormValue(
            log_value=-math.inf, exact=True, witness=f"sequence vanishes beyond n={f.cutoff}"
        )
    if f.is_symbolic and (r.is_symbolic or r.is_step):
        return _exact_ultranorm(f, r)
    return _tail_estimate(f, r)


# ---------------------------------------------------------------------------
# classification


def _tri_and(vals: Iterable[bool | None]) -> bool | None:
    out: bool | None = True
    for v in vals:
        if v is False:
            return False
        if v is None:
            out = None
    return out


def _tri_or(vals: Iterable[bool | None]) -> bool | None:
    out: bool | None = False
    for v in vals:
        if v is True:
            return True
        if v is None:
            out = None
    return out


def _tri_not(v: bool | None) -> bool | None:
    return None if v is None else not v


@dataclass(frozen=True)
class ClassificationReport:
    verdict: str  # negligible | moderate | boundary | divergent | inconclusive
    in_moderate: bool | None
    in_negligible: bool | None
    conclusive: bool
    mode: Mode
    family: str
    m_probed: tuple[int, ...]
    lines: tuple[str, ...]
    channel_norms: Mapping[tuple, UltranormValue] = field(default_factory=dict)

    def report_lines(self) -> list[str]:
        return list(self.lines)


def _norm_bundle(
    bundle: Mapping, r: WeightSeq
) -> dict[object, UltranormValue]:
    return {key: ultranorm(f, r) for key, f in bundle.items()}


def _channel_in_F(v: UltranormValue, mode: Mode) -> bool | None:
    if mode is Mode.STANDARD:
        return v.is_finite()
    ans = v.below(0.0)
    return {"yes": True, "boundary": True, "no": False, "inconclusive": None}[ans]


def _channel_in_K(v: UltranormValue, mode: Mode) -> bool | None:
    if mode is Mode.STANDARD:
        return v.is_zero()
    ans = v.below(0.0)
    return {"yes": True, "boundary": False, "no": False, "inconclusive": None}[ans]


def classify(
    bundle: Mapping | SeqRep,
    family: WeightFamily,
    mode: Mode | None = None,
    m_max: int = 16,
    independent_channels: bool = False,
) -> ClassificationReport:
    """Classify a sequence bundle against a weight family.

    `bundle` maps channel keys (seminorm identifiers) to SeqRep values; a
    bare SeqRep is treated as a one-channel bundle.  Membership in the
    moderate class requires every channel to pass; for indexed families
    the level quantifier follows the family direction (exists-m for
    decreasing levels, for-all-m for increasing ones), probed up to m_max.

    With `independent_channels`, channel keys must be (group, probe) pairs
    and the existential level choice is made per group over its probes.
    """
    if isinstance(bundle, SeqRep):
        bundle = {"value": bundle}
    mode = mode or family.default_mode
    levels = (
        [family.m_start]
        if family.single
        else list(range(family.m_start, family.m_start + m_max))
    )
    per_level: dict[int, dict[object, UltranormValue]] = {}
    lines: list[str] = []
    for m in levels:
        r = family.member(m)
        per_level[m] = _norm_bundle(bundle, r)
        for key, v in per_level[m].items():
            tag = f"m={m} channel={key}"
            lines.append(
                f"{tag}: norm={format_value(v, with_band=True)}"
                + ("" if v.exact else " (estimated)")
            )

    def level_in_F(m: int) -> bool | None:
        return _tri_and(_channel_in_F(v, mode) for v in per_level[m].values())

    def level_in_K(m: int) -> bool | None:
        return _tri_and(_channel_in_K(v, mode) for v in per_level[m].values())

    if family.single:
        m0 = levels[0]
        in_F = level_in_F(m0)
        in_K = level_in_K(m0)
    elif family.direction is Direction.DECREASING:
        if independent_channels:
            in_F = _group_exists(per_level, mode, _channel_in_F)
        else:
            in_F = _tri_or(level_in_F(m) for m in levels)
        in_K = _tri_and(level_in_K(m) for m in levels)
    else:
        in_F = _tri_and(level_in_F(m) for m in levels)
        if independent_channels:
            in_K = _group_exists(per_level, mode, _channel_in_K)
        else:
            in_K = _tri_or(level_in_K(m) for m in levels)

    boundary = False
    if mode is Mode.UNIT_BALL and in_F is True and in_K is False:
        boundary = any(
            v.exact and v.log_value == 0.0
            for norms in per_level.values()
            for v in norms.values()
        )

    if in_F is True and in_K is True:
        verdict = "negligible"
    elif in_F is True and in_K is False:
        verdict = "boundary" if (mode is Mode.UNIT_BALL and boundary) else "moderate"
    elif in_F is False:
        verdict = "divergent"
    else:
        verdict = "inconclusive"
    conclusive = in_F is not None and (in_K is not None or in_F is False)
    if not family.single:
        lines.append(f"levels probed: m={levels[0]}..{levels[-1]} (membership verified up to m_max)")
    lines.append(f"verdict: {verdict}")

    flat: dict[tuple, UltranormValue] = {}
    for m, norms in per_level.items():
        for key, v in norms.items():
            flat[(m, key)] = v
    return ClassificationReport(
        verdict=verdict,
        in_moderate=in_F,
        in_negligible=_tri_and([in_F, in_K]),
        conclusive=conclusive,
        mode=mode,
        family=family.name,
        m_probed=tuple(levels),
        lines=tuple(lines),
        channel_norms=flat,
    )


def _group_exists(per_level, mode, channel_pred) -> bool | None:
    """Per-group existential level choice: every (group, probe) channel must
    pass at some level, with the level chosen independently per group."""
    groups: dict[object, list[bool | None]] = {}
    for m, norms in per_level.items():
        per_group: dict[object, list[bool | None]] = {}
        for key, v in norms.items():
            if not (isinstance(key, tuple) and len(key) == 2):
                raise ValueError("independent_channels needs (group, probe) channel keys")
            per_group.setdefault(key[0], []).append(channel_pred(v, mode))
        for g, vals in per_group.items():
            groups.setdefault(g, []).append(_tri_and(vals))
    return _tri_and(_tri_or(level_oks) for level_oks in groups.values())


# ---------------------------------------------------------------------------
# pseudometric and ideal absorption


def pseudometric(
    f: SeqRep,
    g: SeqRep,
    r: WeightSeq,
    difference: SeqRep | None = None,
) -> UltranormValue:
    """Ultranorm distance between two sequences.

    Symbolic representations carry no sign information, so the caller must
    supply |f - g| explicitly unless one side is zero or both are equal.
    Sampled pairs are differenced pointwise.
    """
    if difference is not None:
        return ultranorm(difference, r)
    if f.is_symbolic and g.is_symbolic:
        if f.expr == g.expr:
            return UltranormValue(log_value=-math.inf, exact=True, witness="identical expressions")
        if f.expr.is_zero:
            return ultranorm(g, r)
        if g.expr.is_zero:
            return ultranorm(f, r)
        raise ValueError("symbolic pair needs an explicit |f - g| representation")
    if f.is_truncated and g.is_truncated:
        return UltranormValue(
            log_value=-math.inf, exact=True, witness="both vanish beyond their cutoffs"
        )

    def log_diff(ns: np.ndarray) -> np.ndarray:
        a = f.log_values(ns)
        b = g.log_values(ns)
        # scale-shifted |e^a - e^b|: log as m + log|e^(a-m) - e^(b-m)|
        m = np.maximum(a, b)
        with np.errstate(invalid="ignore", divide="ignore"):
            rel = np.abs(np.exp(a - m) - np.exp(b - m))
            out = np.where(rel > 0, m + np.log(rel), -math.inf)
        return np.where(np.isneginf(m), -math.inf, out)

    diff = SeqRep(
        label=f"|{f.label} - {g.label}|",
        log_evaluator=log_diff,
        n_min=max(f.n_min, g.n_min),
        n_max=min(f.n_max, g.n_max),
        sample_ns=f.sample_ns or g.sample_ns,
    )
    return ultranorm(diff, r)


@dataclass(frozen=True)
class IdealCheckResult:
    holds: bool | None
    vacuous: bool
    notes: str


def ideal_check(
    k: SeqRep,
    f: SeqRep,
    product: SeqRep,
    family: WeightFamily,
    mode: Mode | None = None,
) -> IdealCheckResult:
    """Verify the absorption law: negligible k times moderate f stays negligible.

    The product representation is supplied by the caller (symbolic inputs
    multiply exactly; sampled ones multiply pointwise).  If the premise
    fails, the check passes vacuously and says so.
    """
    ck = classify(k, family, mode)
    cf = classify(f, family, mode)
    if ck.verdict != "negligible" or cf.in_moderate is not True:
        return IdealCheckResult(
            holds=True,
            vacuous=True,
            notes=f"premise not met (k: {ck.verdict}, f moderate: {cf.in_moderate})",
        )
    cp = classify(product, family, mode)
    if cp.verdict == "negligible":
        return IdealCheckResult(holds=True, vacuous=False, notes="product is negligible")
    if cp.conclusive:
        return IdealCheckResult(
            holds=False, vacuous=False, notes=f"product verdict: {cp.verdict}"
        )
    return IdealCheckResult(holds=None, vacuous=False, notes="product classification inconclusive")


# ---------------------------------------------------------------------------
# number spaces


@dataclass(frozen=True)
class NumberSpace:
    """A quotient-space description: weight family plus membership mode."""

    family: WeightFamily
    mode: Mode
    m_max: int = 16

    @property
    def name(self) -> str:
        return f"{self.family.name}[{self.mode.value}]"

    def classify(self, bundle, **kw) -> ClassificationReport:
        kw.setdefault("m_max", self.m_max)
        return classify(bundle, self.family, self.mode, **kw)

    def single_weight(self) -> WeightSeq:
        if not self.family.single:
            raise ValueError(
                "threshold comparisons need a single-weight space; indexed families "
                "have no distinguished scale"
            )
        return self.family.member(self.family.m_start)


def colombeau_space() -> NumberSpace:
    return NumberSpace(family=catalog("colombeau"), mode=Mode.STANDARD)


def infra_space() -> NumberSpace:
    return NumberSpace(family=catalog("infra"), mode=Mode.UNIT_BALL)
