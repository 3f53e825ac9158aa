"""Temperate-map certificates and the canonical extension to function algebras.

A scalar map g is moderate for a weight family when the reweighted values
(g(x^(1/r^m_n)))^(r^M_n) stay bounded in n, with the (m, M) quantifier
order set by the family direction; h is compatible when the same quantity
tends to zero with x uniformly in n.  Catalog maps carry structural bounds
that decide these questions exactly; black-box maps get a bounded numeric
search, and every certificate records the bounds it was established under.

Certified scalar bounds plus two seminorm inequalities (a growth bound for
the map itself and a difference bound with a compatible factor) let a map
on function sequences extend to the quotient algebra: outputs of moderate
inputs stay moderate, and negligible perturbations stay negligible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from ultraseq import genfun, growth
from ultraseq.genfun import (
    DEFAULT_SAMPLE_NS,
    FunctionElement,
    FunctionSpace,
    SeminormSpec,
    SmoothSeq,
    add_seq,
    bump,
    constant_seq,
    derivative_seq,
    exp_seq,
    poly_fn,
    product_seq,
    seminorm,
    seq_scale,
    sin_fn,
    square_seq,
    standard_mollifier,
    sub_seq,
)
from ultraseq.spaces import NumberSpace, SeqRep, colombeau_space, ultranorm
from ultraseq.weights import Direction, WeightFamily

__all__ = [
    "ScalarMap",
    "TemperateCertificate",
    "SeqMap",
    "TemperateMapReport",
    "ExtensionError",
    "identity_map",
    "power_map",
    "exp_map",
    "expm1_map",
    "log1p_map",
    "affine_map",
    "compose_maps",
    "sum_maps",
    "scaled_map",
    "check_moderate",
    "check_compatible",
    "check_temperate",
    "square_map",
    "derivative_map",
    "exp_seq_map",
    "extend",
    "verify_F2",
    "continuity_trend",
    "apply_scalar_map",
]


# ---------------------------------------------------------------------------
# scalar maps with structural facts


@dataclass(frozen=True)
class ScalarMap:
    """A nonnegative increasing map with optional structural bounds.

    poly_bound (A, K) certifies g(u) <= A * max(u, 1)^K everywhere.
    vanish_bound (A, kappa, u0) certifies h(u) <= A * u^kappa for u <= u0.
    zero_limit is the exact right limit at 0 when known.
    """

    label: str
    fn: Callable[[np.ndarray], np.ndarray]
    monotone: bool = True
    poly_bound: tuple[float, float] | None = None
    vanish_bound: tuple[float, float, float] | None = None
    zero_limit: float | None = None
    contains_exp: bool = False
    symbolic_transform: Callable[[growth.GrowthExpr], growth.GrowthExpr] | None = None

    def __call__(self, u):
        return self.fn(np.asarray(u, dtype=float))


def identity_map() -> ScalarMap:
    return power_map(1.0)


def power_map(k: float) -> ScalarMap:
    if k <= 0:
        raise ValueError("power maps need a positive exponent")
    return ScalarMap(
        label=f"x^{k:g}",
        fn=lambda u: u ** k,
        poly_bound=(1.0, k),
        vanish_bound=(1.0, k, 1.0),
        zero_limit=0.0,
        symbolic_transform=lambda e: growth.pow_expr(e, k),
    )


def exp_map() -> ScalarMap:
    return ScalarMap(
        label="exp(x)",
        fn=np.exp,
        zero_limit=1.0,
        contains_exp=True,
    )


def expm1_map() -> ScalarMap:
    # e^u - 1 <= e*u on [0, 1]
    return ScalarMap(
        label="exp(x)-1",
        fn=np.expm1,
        vanish_bound=(math.e, 1.0, 1.0),
        zero_limit=0.0,
        contains_exp=True,
    )


def log1p_map() -> ScalarMap:
    return ScalarMap(
        label="log(1+x)",
        fn=np.log1p,
        poly_bound=(1.0, 1.0),
        vanish_bound=(1.0, 1.0, 1.0),
        zero_limit=0.0,
    )


def affine_map(a: float, b: float) -> ScalarMap:
    if a <= 0 or b < 0:
        raise ValueError("affine maps need a > 0, b >= 0")
    sym = None
    if b == 0:
        sym = lambda e: growth.mul(growth.constant(a), e)
    return ScalarMap(
        label=f"{a:g}x" if b == 0 else f"{a:g}x + {b:g}",
        fn=lambda u: a * u + b,
        poly_bound=(a + b, 1.0),
        vanish_bound=(a, 1.0, math.inf) if b == 0 else None,
        zero_limit=b,
        symbolic_transform=sym,
    )


def compose_maps(outer: ScalarMap, inner: ScalarMap) -> ScalarMap:
    poly = None
    if outer.poly_bound and inner.poly_bound:
        ao, ko = outer.poly_bound
        ai, ki = inner.poly_bound
        poly = (ao * max(ai, 1.0) ** ko, ko * ki)
    vanish = None
    if outer.vanish_bound and inner.vanish_bound:
        ao, ko, uo = outer.vanish_bound
        ai, ki, ui = inner.vanish_bound
        # need inner(u) <= uo: suffices u <= (uo/ai)^(1/ki) within inner's range
        cap = min(ui, (uo / ai) ** (1.0 / ki) if math.isfinite(uo) else math.inf, 1.0)
        vanish = (ao * ai ** ko, ko * ki, cap)
    zl = None
    if inner.zero_limit is not None and outer.zero_limit is not None:
        if inner.zero_limit == 0.0:
            zl = outer.zero_limit
        else:
            zl = float(outer.fn(np.asarray(inner.zero_limit)))
    sym = None
    if outer.symbolic_transform and inner.symbolic_transform:
        o, i = outer.symbolic_transform, inner.symbolic_transform
        sym = lambda e: o(i(e))
    return ScalarMap(
        label=f"{outer.label} o {inner.label}",
        fn=lambda u: outer.fn(inner.fn(np.asarray(u, dtype=float))),
        monotone=outer.monotone and inner.monotone,
        poly_bound=poly,
        vanish_bound=vanish,
        zero_limit=zl,
        contains_exp=outer.contains_exp or inner.contains_exp,
        symbolic_transform=sym,
    )


def sum_maps(a: ScalarMap, b: ScalarMap) -> ScalarMap:
    poly = None
    if a.poly_bound and b.poly_bound:
        poly = (a.poly_bound[0] + b.poly_bound[0], max(a.poly_bound[1], b.poly_bound[1]))
    vanish = None
    if a.vanish_bound and b.vanish_bound:
        # on u <= 1 the smaller exponent dominates both terms
        vanish = (
            a.vanish_bound[0] + b.vanish_bound[0],
            min(a.vanish_bound[1], b.vanish_bound[1]),
            min(a.vanish_bound[2], b.vanish_bound[2], 1.0),
        )
    zl = None
    if a.zero_limit is not None and b.zero_limit is not None:
        zl = a.zero_limit + b.zero_limit
    sym = None
    if a.symbolic_transform and b.symbolic_transform:
        sa, sb = a.symbolic_transform, b.symbolic_transform
        sym = lambda e: growth.add(sa(e), sb(e))
    return ScalarMap(
        label=f"{a.label} + {b.label}",
        fn=lambda u: a.fn(np.asarray(u, dtype=float)) + b.fn(np.asarray(u, dtype=float)),
        monotone=a.monotone and b.monotone,
        poly_bound=poly,
        vanish_bound=vanish,
        zero_limit=zl,
        contains_exp=a.contains_exp or b.contains_exp,
        symbolic_transform=sym,
    )


def scaled_map(c: float, m: ScalarMap) -> ScalarMap:
    return compose_maps(affine_map(c, 0.0), m)


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class TemperateCertificate:
    status: str  # certified | refuted | inconclusive
    role: str  # moderate | compatible
    case: str  # II | I | single
    map_label: str
    family: str
    pairs: tuple[tuple[int, int], ...] = ()
    witness: dict = field(default_factory=dict)
    value_bound: float | None = None
    exact: bool = False
    notes: str = ""

    @property
    def certified(self) -> bool:
        return self.status == "certified"


def _family_case(W: WeightFamily) -> str:
    if W.single:
        return "single"
    return "II" if W.direction is Direction.DECREASING else "I"


def _has_step(W: WeightFamily, m_probe: Iterable[int]) -> bool:
    return any(W.member(m).is_step for m in m_probe)


_N_WINDOWS = tuple(2 ** k for k in range(4, 21, 2))
_X_GRID_FULL = tuple(float(x) for x in np.geomspace(1e-8, 1e8, 33))
_X_GRID_SMALL = tuple(float(x) for x in np.geomspace(1e-8, 1.0, 17))
_LOG_CAP = 230.0
_EPS_UNIFORM = 0.5


def _levels(W: WeightFamily, m_max: int) -> list[int]:
    if W.single:
        return [W.m_start]
    return list(range(W.m_start, W.m_start + m_max))


def _log_g_factory(g: ScalarMap) -> Callable[[float], float]:
    """log g(e^L) as a function of L, usable past double-precision range.

    Doubles cannot hold x^(1/r_n) once the weights are small, so the probe
    argument is kept in log scale.  Direct evaluation is used while g's value
    is representable; beyond that the log-log slope measured just below the
    overflow point extrapolates polynomial-like maps, while maps whose slope
    is itself growing (exp-like) read as divergent.
    """
    # largest L with g(e^L) finite, found by bisection on [0, 709]
    def finite_at(L: float) -> bool:
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            v = float(g.fn(np.asarray(math.exp(L))))
        return math.isfinite(v)

    lo, hi = 0.0, 709.0
    if finite_at(hi):
        l_star = hi
    elif not finite_at(lo):
        l_star = None
    else:
        for _ in range(40):
            mid = 0.5 * (lo + hi)
            if finite_at(mid):
                lo = mid
            else:
                hi = mid
        l_star = lo

    slope = None
    exp_like = False
    if l_star is not None and l_star > 1e-6:
        ladder = np.linspace(0.6 * l_star, 0.9 * l_star, 6)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            vals = np.asarray(g.fn(np.exp(ladder)), dtype=float)
        if np.all(np.isfinite(vals)) and np.all(vals > 0):
            logs = np.log(vals)
            slopes = np.diff(logs) / np.diff(ladder)
            slope = float(slopes[-1])
            drift = float(slopes[-1] - slopes[0])
            if drift > max(0.5, 0.1 * abs(slope)):
                exp_like = True

    def log_g(arg_log: float) -> float:
        if arg_log <= 709.0:
            with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
                v = float(g.fn(np.asarray(math.exp(arg_log))))
            if math.isfinite(v):
                return math.log(v) if v > 0 else -math.inf
        if exp_like or slope is None:
            return math.inf
        return math.log(float(g.fn(np.asarray(math.exp(0.9 * l_star))))) + slope * (
            arg_log - 0.9 * l_star
        )

    return log_g


def _reweighted_log(
    g: ScalarMap, x: float, r_m: float, r_M: float, log_g: Callable[[float], float] | None = None
) -> float:
    """log of (g(x^(1/r_m)))^(r_M), computed with overflow care."""
    if r_m == 0.0:
        return math.nan
    if log_g is None:
        log_g = _log_g_factory(g)
    return r_M * log_g(math.log(x) / r_m)


def check_moderate(g: ScalarMap, W: WeightFamily, m_max: int = 16) -> TemperateCertificate:
    """Decide whether g preserves the moderate cone over the family W."""
    case = _family_case(W)
    levels = _levels(W, m_max)
    if _has_step(W, levels):
        return TemperateCertificate(
            status="inconclusive",
            role="moderate",
            case=case,
            map_label=g.label,
            family=W.name,
            notes="step weights vanish on tails, so x^(1/r_n) is undefined; no decision",
        )

    r_top = max(W.member(m).value(W.member(m).n_min) for m in levels)

    if g.poly_bound is not None:
        a, k = g.poly_bound
        bound = max(a, 1.0) ** r_top
        pairs = tuple((m, m) for m in levels)
        return TemperateCertificate(
            status="certified",
            role="moderate",
            case=case,
            map_label=g.label,
            family=W.name,
            pairs=pairs,
            value_bound=bound,
            exact=True,
            notes=(
                f"structural bound g(u) <= {a:g}*max(u,1)^{k:g} gives "
                f"(g(x^(1/r_n)))^(r_n) <= {bound:g}*max(x,1)^{k:g} at equal levels"
            ),
        )

    symbolic = all(W.member(m).is_symbolic for m in levels)
    if g.contains_exp and symbolic:
        cert = _refute_exp_moderate(g, W, levels, case)
        if cert is not None:
            return cert

    return _numeric_moderate(g, W, levels, case, m_max)


def _refute_exp_moderate(
    g: ScalarMap, W: WeightFamily, levels: list[int], case: str
) -> TemperateCertificate | None:
    """Exact divergence of exp-type maps: at x = e^2 the reweighted value is
    exp(e^(2/r^m_n) * r^M_n), which diverges whenever e^(2/r^m) * r^M does."""
    x = math.exp(2.0)

    def diverges(m: int, M: int) -> bool:
        try:
            mult = growth.exp_of_reciprocal(W.member(m).expr, 2.0)
        except growth.NotRepresentable:
            return False
        lv = growth.limit_value(growth.mul(mult, W.member(M).expr))
        return lv == math.inf

    if case in ("II", "single"):
        m = levels[0]
        if not all(diverges(m, M) for M in levels):
            return None
        fixed, note = m, f"at level m={m} every probed M diverges"
    else:
        fixed = None
        for M in levels:
            if all(diverges(m, M) for m in levels):
                fixed = M
                break
        if fixed is None:
            return None
        note = f"at level M={fixed} every probed m diverges"

    m_w = fixed if case in ("II", "single") else levels[0]
    M_w = levels[-1] if case in ("II", "single") else fixed
    n_star = None
    wa, wb = W.member(m_w), W.member(M_w)
    for n in _N_WINDOWS:
        if n < max(wa.n_min, wb.n_min):
            continue
        # r^M * exp(log(x)/r^m) > cap, tested in the log domain so the
        # witness replays with plain float arithmetic
        if math.log(wb.value(n)) + math.log(x) / wa.value(n) > math.log(_LOG_CAP):
            n_star = n
            break
    return TemperateCertificate(
        status="refuted",
        role="moderate",
        case=case,
        map_label=g.label,
        family=W.name,
        witness={"m": m_w, "M": M_w, "x": x, "n": n_star, "log_value_exceeds": _LOG_CAP},
        exact=True,
        notes=note + f"; witness replay: reweighted log value at n={n_star} exceeds {_LOG_CAP:g}",
    )


def _pair_sup(
    g: ScalarMap,
    W: WeightFamily,
    m: int,
    M: int,
    xs: Sequence[float],
    log_g: Callable[[float], float] | None = None,
):
    """Max reweighted log value per n-window."""
    log_g = log_g if log_g is not None else _log_g_factory(g)
    wa, wb = W.member(m), W.member(M)
    n_lo = max(wa.n_min, wb.n_min)
    sups = []
    for n in _N_WINDOWS:
        if n < n_lo:
            continue
        vals = [_reweighted_log(g, x, wa.value(n), wb.value(n), log_g) for x in xs]
        sups.append(max(vals))
    return sups


def _numeric_moderate(
    g: ScalarMap, W: WeightFamily, levels: list[int], case: str, m_max: int
) -> TemperateCertificate:
    pairs = []
    worst = None
    log_g = _log_g_factory(g)
    outer = levels if case != "single" else levels[:1]
    for lead in outer:
        found = None
        for other in levels:
            m, M = (lead, other) if case in ("II", "single") else (other, lead)
            if case in ("II", "single") and other < lead:
                continue
            sups = _pair_sup(g, W, m, M, _X_GRID_FULL, log_g)
            bounded = sups[-1] < _LOG_CAP and (len(sups) < 2 or sups[-1] <= sups[-2] + 1.0)
            if bounded:
                found = (m, M, sups[-1])
                break
            worst = (m, M, sups[-1])
        if found is None:
            return TemperateCertificate(
                status="refuted",
                role="moderate",
                case=case,
                map_label=g.label,
                family=W.name,
                witness={
                    "m": worst[0],
                    "M": worst[1],
                    "x": max(_X_GRID_FULL),
                    "last_window_log": worst[2],
                },
                notes=f"no partner level up to {m_max} bounds the reweighted values on the probe grid",
            )
        pairs.append(found[:2])
    return TemperateCertificate(
        status="certified",
        role="moderate",
        case=case,
        map_label=g.label,
        family=W.name,
        pairs=tuple(pairs),
        value_bound=None,
        exact=False,
        notes=f"numeric search over x in [1e-8, 1e8], n-windows to 2^20, levels to {m_max}",
    )


def check_compatible(h: ScalarMap, W: WeightFamily, m_max: int = 16) -> TemperateCertificate:
    """Decide whether h collapses the negligible cone over the family W."""
    case = _family_case(W)
    levels = _levels(W, m_max)
    if _has_step(W, levels):
        return TemperateCertificate(
            status="inconclusive",
            role="compatible",
            case=case,
            map_label=h.label,
            family=W.name,
            notes="step weights vanish on tails, so x^(1/r_n) is undefined; no decision",
        )

    if h.zero_limit is not None and h.zero_limit > 0.0:
        w = W.member(levels[0])
        n_big = 2 ** 20
        val = _reweighted_log(h, 1e-12, w.value(n_big), w.value(n_big))
        return TemperateCertificate(
            status="refuted",
            role="compatible",
            case=case,
            map_label=h.label,
            family=W.name,
            witness={
                "m": levels[0],
                "M": levels[0],
                "x": 1e-12,
                "n": n_big,
                "log_value": val,
                "zero_limit": h.zero_limit,
            },
            exact=True,
            notes=(
                f"h(0+) = {h.zero_limit:g} > 0, and L^(r_n) tends to 1, so the values "
                "cannot vanish uniformly as x shrinks"
            ),
        )

    r_top = max(W.member(m).value(W.member(m).n_min) for m in levels)
    if h.vanish_bound is not None:
        a, kappa, u0 = h.vanish_bound
        bound = max(a, 1.0) ** r_top
        x_cap = 1.0 if u0 >= 1.0 else u0 ** (1.0 / r_top)
        pairs = tuple((m, m) for m in levels)
        return TemperateCertificate(
            status="certified",
            role="compatible",
            case=case,
            map_label=h.label,
            family=W.name,
            pairs=pairs,
            value_bound=bound,
            exact=True,
            notes=(
                f"structural bound h(u) <= {a:g}*u^{kappa:g} near 0 gives "
                f"(h(x^(1/r_n)))^(r_n) <= {bound:g}*x^{kappa:g} for x <= {x_cap:g}, "
                "vanishing uniformly in n at equal levels"
            ),
        )

    return _numeric_compatible(h, W, levels, case, m_max)


def _uniform_threshold(
    h: ScalarMap,
    W: WeightFamily,
    m: int,
    M: int,
    log_h: Callable[[float], float] | None = None,
):
    """Largest probe x below which the value is < eps in every n-window."""
    log_h = log_h if log_h is not None else _log_g_factory(h)
    wa, wb = W.member(m), W.member(M)
    n_lo = max(wa.n_min, wb.n_min)
    ok_x = None
    for x in sorted(_X_GRID_SMALL, reverse=True):
        good = True
        for n in _N_WINDOWS:
            if n < n_lo:
                continue
            if _reweighted_log(h, x, wa.value(n), wb.value(n), log_h) >= math.log(_EPS_UNIFORM):
                good = False
                break
        if good:
            ok_x = x
            break
    return ok_x


def _numeric_compatible(
    h: ScalarMap, W: WeightFamily, levels: list[int], case: str, m_max: int
) -> TemperateCertificate:
    pairs = []
    worst = None
    log_h = _log_g_factory(h)
    outer = levels if case != "single" else levels[:1]
    for lead in outer:
        found = None
        for other in levels:
            m, M = (other, lead) if case == "II" else (lead, other)
            if case == "single":
                m = M = lead
            x_star = _uniform_threshold(h, W, m, M, log_h)
            if x_star is not None:
                found = (m, M, x_star)
                break
            worst = (m, M)
            if case == "single":
                break
        if found is None:
            wa, wb = W.member(worst[0]), W.member(worst[1])
            n_big = _N_WINDOWS[-1]
            return TemperateCertificate(
                status="refuted",
                role="compatible",
                case=case,
                map_label=h.label,
                family=W.name,
                witness={
                    "m": worst[0],
                    "M": worst[1],
                    "x": min(_X_GRID_SMALL),
                    "n": n_big,
                    "log_value": _reweighted_log(h, min(_X_GRID_SMALL), wa.value(n_big), wb.value(n_big)),
                    "eps": _EPS_UNIFORM,
                },
                notes=(
                    "no probe x pushes the reweighted values below eps across all "
                    "n-windows: uniform vanishing fails on the grid"
                ),
            )
        pairs.append(found[:2])
    return TemperateCertificate(
        status="certified",
        role="compatible",
        case=case,
        map_label=h.label,
        family=W.name,
        pairs=tuple(pairs),
        exact=False,
        notes=f"numeric uniformity scan: x in [1e-8, 1], n-windows to 2^20, levels to {m_max}",
    )


# ---------------------------------------------------------------------------
# maps on function sequences


@dataclass(frozen=True)
class SeqMap:
    """A map on smooth sequences with declared seminorm bookkeeping.

    order_pairing sends the output seminorm order to the input order the
    bounds are stated against; g_alpha bounds the map's own seminorms,
    g_beta and h_beta bound difference seminorms in product form.
    """

    name: str
    apply: Callable[[SmoothSeq], SmoothSeq]
    order_pairing: Callable[[int], int]
    g_alpha: ScalarMap
    g_beta: ScalarMap
    h_beta: ScalarMap
    apply_diff: Callable[[SmoothSeq, SmoothSeq], SmoothSeq] | None = None

    def difference(self, f: SmoothSeq, k: SmoothSeq) -> SmoothSeq:
        if self.apply_diff is not None:
            return self.apply_diff(f, k)
        return sub_seq(self.apply(add_seq(f, k)), self.apply(f))


def square_map(nu_max: int = 3) -> SeqMap:
    # p_nu(2fk + k^2) <= 2^nu (2 p(f) p(k) + p(k)^2) <= 2^(nu+1) (p(f)+1)^2 (p(k) + p(k)^2)
    c = 2.0 ** (nu_max + 1)
    g_beta = scaled_map(c, compose_maps(power_map(2.0), affine_map(1.0, 1.0)))
    return SeqMap(
        name="square",
        apply=square_seq,
        order_pairing=lambda nu: nu,
        g_alpha=scaled_map(2.0 ** nu_max, power_map(2.0)),
        g_beta=g_beta,
        h_beta=sum_maps(power_map(1.0), power_map(2.0)),
        apply_diff=lambda f, k: add_seq(seq_scale(2.0, product_seq(f, k)), square_seq(k)),
    )


def derivative_map() -> SeqMap:
    # p_nu(k') <= p_(nu+1)(k) exactly; the beta growth factor still needs the
    # +1 floor because the product form must dominate even at tiny p(f)
    return SeqMap(
        name="derivative",
        apply=derivative_seq,
        order_pairing=lambda nu: nu + 1,
        g_alpha=identity_map(),
        g_beta=affine_map(1.0, 1.0),
        h_beta=identity_map(),
        apply_diff=lambda f, k: derivative_seq(k),
    )


def exp_seq_map() -> SeqMap:
    return SeqMap(
        name="exp",
        apply=exp_seq,
        order_pairing=lambda nu: nu,
        g_alpha=exp_map(),
        g_beta=exp_map(),
        h_beta=expm1_map(),
        apply_diff=lambda f, k: sub_seq(exp_seq(add_seq(f, k)), exp_seq(f)),
    )


@dataclass(frozen=True)
class TemperateMapReport:
    status: str  # certified | refuted | inconclusive
    map_name: str
    g_alpha_cert: TemperateCertificate
    g_beta_cert: TemperateCertificate
    h_beta_cert: TemperateCertificate
    alpha_checked: int
    beta_checked: int
    witness: dict = field(default_factory=dict)
    notes: str = ""

    @property
    def certified(self) -> bool:
        return self.status == "certified"


def _default_corpus() -> list[SmoothSeq]:
    return [
        standard_mollifier().sequence(),
        seq_scale(0.5, constant_seq(sin_fn())),
        constant_seq(poly_fn([0.2, 0.1], label="0.2 + 0.1x")),
        seq_scale(growth.parse("log(n)"), constant_seq(bump(0.0, 1.5))),
    ]


def check_temperate(
    phi: SeqMap,
    W: WeightFamily,
    corpus: Sequence[SmoothSeq] | None = None,
    nu_max: int = 2,
    sample_ns: Sequence[int] = (16, 64, 256, 1024),
    rtol: float = 1e-3,
) -> TemperateMapReport:
    """Certify a function-sequence map: scalar certificates plus numeric
    spot checks of the two seminorm inequalities on a corpus."""
    ga = check_moderate(phi.g_alpha, W)
    gb = check_moderate(phi.g_beta, W)
    hb = check_compatible(phi.h_beta, W)
    if any(c.status == "refuted" for c in (ga, gb, hb)):
        bad = next(c for c in (ga, gb, hb) if c.status == "refuted")
        return TemperateMapReport(
            status="refuted",
            map_name=phi.name,
            g_alpha_cert=ga,
            g_beta_cert=gb,
            h_beta_cert=hb,
            alpha_checked=0,
            beta_checked=0,
            witness=dict(bad.witness),
            notes=f"scalar certificate refuted for {bad.map_label!r} ({bad.role})",
        )

    fs = list(corpus) if corpus is not None else _default_corpus()
    alpha_checked = beta_checked = 0
    atol = 1e-12
    for f in fs:
        out = phi.apply(f)
        for nu in range(nu_max + 1):
            if nu > out.max_order or phi.order_pairing(nu) > f.max_order:
                continue
            for n in sample_ns:
                lhs = seminorm(out, n, SeminormSpec(nu=nu))
                p_in = seminorm(f, n, SeminormSpec(nu=phi.order_pairing(nu)))
                rhs = float(phi.g_alpha.fn(np.asarray(p_in)))
                alpha_checked += 1
                if lhs > rhs * (1 + rtol) + atol:
                    return TemperateMapReport(
                        status="refuted",
                        map_name=phi.name,
                        g_alpha_cert=ga,
                        g_beta_cert=gb,
                        h_beta_cert=hb,
                        alpha_checked=alpha_checked,
                        beta_checked=beta_checked,
                        witness={
                            "inequality": "alpha",
                            "f": f.label,
                            "nu": nu,
                            "n": n,
                            "lhs": lhs,
                            "rhs": rhs,
                        },
                        notes="growth inequality fails on the corpus",
                    )
    for f in fs:
        for k in fs:
            dseq = phi.difference(f, k)
            for nu in range(nu_max + 1):
                if (
                    nu > dseq.max_order
                    or phi.order_pairing(nu) > min(f.max_order, k.max_order)
                ):
                    continue
                for n in sample_ns:
                    lhs = seminorm(dseq, n, SeminormSpec(nu=nu))
                    pf = seminorm(f, n, SeminormSpec(nu=phi.order_pairing(nu)))
                    pk = seminorm(k, n, SeminormSpec(nu=phi.order_pairing(nu)))
                    rhs = float(phi.g_beta.fn(np.asarray(pf))) * float(
                        phi.h_beta.fn(np.asarray(pk))
                    )
                    beta_checked += 1
                    if lhs > rhs * (1 + rtol) + atol:
                        return TemperateMapReport(
                            status="refuted",
                            map_name=phi.name,
                            g_alpha_cert=ga,
                            g_beta_cert=gb,
                            h_beta_cert=hb,
                            alpha_checked=alpha_checked,
                            beta_checked=beta_checked,
                            witness={
                                "inequality": "beta",
                                "f": f.label,
                                "k": k.label,
                                "nu": nu,
                                "n": n,
                                "lhs": lhs,
                                "rhs": rhs,
                            },
                            notes="difference inequality fails on the corpus",
                        )
    status = (
        "certified"
        if all(c.status == "certified" for c in (ga, gb, hb))
        else "inconclusive"
    )
    return TemperateMapReport(
        status=status,
        map_name=phi.name,
        g_alpha_cert=ga,
        g_beta_cert=gb,
        h_beta_cert=hb,
        alpha_checked=alpha_checked,
        beta_checked=beta_checked,
        notes=f"numeric checks passed on {len(fs)} corpus functions",
    )


# ---------------------------------------------------------------------------
# extension, well-definedness, continuity


class ExtensionError(RuntimeError):
    """The extended map produced a non-moderate output."""


def extend(
    phi: SeqMap,
    element: FunctionElement,
    sample_ns: Sequence[int] = DEFAULT_SAMPLE_NS,
) -> FunctionElement:
    """Apply the map to a representative and re-validate moderateness."""
    out = phi.apply(element.seq)
    fspace = element.fspace
    nu_max = min(fspace.nu_max, out.max_order)
    report = genfun.classify_fun(out, nu_max, fspace.space, sample_ns)
    if report.in_moderate is False:
        raise ExtensionError(
            f"map {phi.name!r} sent {element.seq.label!r} outside the moderate "
            "class: the temperateness certificate does not cover this input"
        )
    return FunctionElement(seq=out, fspace=FunctionSpace(fspace.space, nu_max), report=report)


@dataclass(frozen=True)
class F2Report:
    passed: bool | None
    diff_verdict: str
    j_verdict: str
    lines: tuple[str, ...]


def verify_F2(
    phi: SeqMap,
    f: SmoothSeq,
    j: SmoothSeq,
    space: NumberSpace | None = None,
    nu_max: int = 2,
    sample_ns: Sequence[int] = DEFAULT_SAMPLE_NS,
) -> F2Report:
    """Ideal stability of the extension: the difference after a negligible
    perturbation must classify negligible."""
    space = space or colombeau_space()
    j_report = genfun.classify_fun(j, min(nu_max, j.max_order), space, sample_ns)
    if j_report.verdict != "negligible":
        raise ValueError(f"perturbation {j.label!r} is not negligible: {j_report.verdict}")
    dseq = phi.difference(f, j)
    d_report = genfun.classify_fun(dseq, min(nu_max, dseq.max_order), space, sample_ns)
    if d_report.verdict == "negligible":
        passed = True
    elif d_report.conclusive:
        passed = False
    else:
        passed = None
    return F2Report(
        passed=passed,
        diff_verdict=d_report.verdict,
        j_verdict=j_report.verdict,
        lines=tuple(d_report.report_lines()),
    )


def continuity_trend(
    phi: SeqMap,
    f: SmoothSeq,
    k: SmoothSeq,
    space: NumberSpace | None = None,
    steps: int = 4,
    nu: int = 0,
    sample_ns: Sequence[int] = DEFAULT_SAMPLE_NS,
) -> list[tuple[float, float]]:
    """Norms (input perturbation, output difference) along a shrinking ladder.

    Constant rescaling cannot move an ultranorm, so the ladder scales k by
    n^(-i log 10), which divides the perturbation norm by 10 per step.
    """
    space = space or colombeau_space()
    w = space.single_weight()
    out = []
    for i in range(steps):
        scale = growth.term_expr(1.0, pow_n=-i * math.log(10.0))
        ki = seq_scale(scale, k) if i > 0 else k
        rep_k = genfun._seminorm_seqrep(ki, nu, tuple(sample_ns))
        vk = ultranorm(rep_k, w)
        dseq = phi.difference(f, ki)
        rep_d = genfun._seminorm_seqrep(dseq, nu, tuple(sample_ns))
        vd = ultranorm(rep_d, w)
        out.append((vk.value, vd.value))
    return out


# ---------------------------------------------------------------------------
# pushing scalar sequences through certified maps


def apply_scalar_map(g: ScalarMap, rep: SeqRep) -> SeqRep:
    """g applied valuewise to a scalar sequence, exact when g carries a
    symbolic transform."""
    if rep.is_symbolic and g.symbolic_transform is not None and not rep.expr.modulated:
        if rep.expr.is_zero:
            zl = g.zero_limit if g.zero_limit is not None else float(g.fn(np.asarray(0.0)))
            e = growth.constant(zl) if zl > 0 else growth.ZERO
        else:
            e = g.symbolic_transform(rep.expr)
        return SeqRep.symbolic(e, label=f"{g.label}({rep.label})")
    if rep.is_truncated:
        zl = g.zero_limit if g.zero_limit is not None else float(g.fn(np.asarray(0.0)))
        if zl == 0.0:
            return rep
    def vals(ns: np.ndarray) -> np.ndarray:
        with np.errstate(over="ignore"):
            v = np.exp(np.minimum(rep.log_values(ns), 700.0))
        return np.asarray(g.fn(v), dtype=float)

    return SeqRep.sampled(
        vals,
        label=f"{g.label}({rep.label})",
        n_min=rep.n_min,
        n_max=rep.n_max,
        sample_ns=rep.sample_ns,
    )
