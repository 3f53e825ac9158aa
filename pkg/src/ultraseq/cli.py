"""Command-line front end.

Single-shot subcommands over the library plus a line-oriented batch format.
Exit codes: 0 when every query was decided, 2 when something came back
inconclusive, 1 on errors.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Sequence

import numpy as np

from ultraseq import corpus, genfun, gennum, growth, temperate
from ultraseq.gennum import AssocKind, NotModerate, PowerXFamily, null_predicate
from ultraseq.genfun import (
    FunctionSpace,
    TestFunction,
    bump,
    const_fn,
    constant_seq,
    pairing,
    seq_scale,
    square_seq,
    standard_mollifier,
    weak_assoc_fun,
)
from ultraseq.spaces import (
    NumberSpace,
    SeqRep,
    UltranormValue,
    colombeau_space,
    format_value,
    infra_space,
    ultranorm,
)
from ultraseq.weights import (
    Mode,
    WeightSeq,
    catalog,
    expdecay_scale,
    power_scale,
    scale_to_weights,
    single_family,
    verify_scale_axioms,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2


class CliError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument parsing helpers


def parse_space(text: str, mode: str | None = None) -> NumberSpace:
    t = text.strip()
    mode_enum = None
    if mode is not None:
        try:
            mode_enum = Mode(mode)
        except ValueError:
            raise CliError(f"unknown mode {mode!r}; use standard or unit-ball") from None
    if t == "colombeau":
        sp = colombeau_space()
    elif t == "infra":
        sp = infra_space()
    elif t in ("egorov", "ultra", "scale-power", "scale-expdecay"):
        fam = {
            "egorov": lambda: catalog("egorov"),
            "ultra": lambda: catalog("ultra"),
            "scale-power": lambda: scale_to_weights(power_scale()),
            "scale-expdecay": lambda: scale_to_weights(expdecay_scale()),
        }[t]()
        sp = NumberSpace(family=fam, mode=fam.default_mode)
    elif t.startswith("weight:"):
        expr_text = t[len("weight:"):]
        try:
            w = WeightSeq(label=expr_text, expr=growth.parse(expr_text))
        except (growth.ParseError, ValueError) as e:
            raise CliError(f"bad weight expression {expr_text!r}: {e}") from None
        fam = single_family(w, f"weight({expr_text})")
        sp = NumberSpace(family=fam, mode=Mode.STANDARD)
    else:
        raise CliError(
            f"unknown space {text!r}; use colombeau, infra, egorov, ultra, "
            "scale-power, scale-expdecay, or weight:EXPR"
        )
    if mode_enum is not None and mode_enum is not sp.mode:
        sp = NumberSpace(family=sp.family, mode=mode_enum, m_max=sp.m_max)
    return sp


def parse_kind(text: str) -> AssocKind:
    t = text.strip()
    if t == "weak":
        return AssocKind.weak()
    if t == "power-x":
        return AssocKind.custom(null_predicate, PowerXFamily(), "null limit")
    if ":" in t:
        name, _, stext = t.partition(":")
        try:
            s = float(stext)
        except ValueError:
            raise CliError(f"bad threshold in kind {text!r}") from None
        if name == "strong":
            return AssocKind.strong(s)
        if name == "weak-s":
            return AssocKind.weak_s(s)
        if name in ("dual", "s-dual"):
            return AssocKind.s_dual(s)
    raise CliError(
        f"unknown association kind {text!r}; use weak, strong:S, weak-s:S, "
        "dual:S, or power-x"
    )


def parse_expr(text: str) -> SeqRep:
    try:
        return SeqRep.symbolic(growth.parse(text), label=text)
    except growth.ParseError as e:
        raise CliError(f"cannot parse {text!r}: {e}") from None


_SCALAR_MAPS = ("identity", "exp", "expm1", "log1p", "power:K", "affine:A:B")
_SEQ_MAPS = ("square", "derivative", "exp-seq")


def parse_scalar_map(name: str) -> temperate.ScalarMap | None:
    t = name.strip()
    if t == "identity":
        return temperate.identity_map()
    if t == "exp":
        return temperate.exp_map()
    if t == "expm1":
        return temperate.expm1_map()
    if t == "log1p":
        return temperate.log1p_map()
    if t.startswith("power:"):
        try:
            return temperate.power_map(float(t[len("power:"):]))
        except ValueError as e:
            raise CliError(f"bad power map {name!r}: {e}") from None
    if t.startswith("affine:"):
        parts = t.split(":")[1:]
        if len(parts) != 2:
            raise CliError(f"affine maps are written affine:A:B, got {name!r}")
        try:
            return temperate.affine_map(float(parts[0]), float(parts[1]))
        except ValueError as e:
            raise CliError(f"bad affine map {name!r}: {e}") from None
    return None


def parse_seq_map(name: str) -> temperate.SeqMap | None:
    t = name.strip()
    if t == "square":
        return temperate.square_map()
    if t == "derivative":
        return temperate.derivative_map()
    if t == "exp-seq":
        return temperate.exp_seq_map()
    return None


def norm_text(v: UltranormValue) -> str:
    if v.exact:
        if v.log_value == -math.inf:
            return "exact 0"
        if v.log_value == math.inf:
            return "exact divergent"
        if v.log_value == 0.0:
            return "exact 1"
        return f"exact e^{v.log_value:.9g} = {format_value(v)}"
    tag = "estimated" if v.stable else "estimated, unstable"
    return f"{format_value(v, with_band=True)} ({tag})"


def _witness_text(witness: dict) -> str:
    return ", ".join(f"{k}={_fmt(v)}" for k, v in witness.items())


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.9g}"
    return str(v)


# ---------------------------------------------------------------------------
# command handlers: each returns (lines, exit code)


def cmd_norm(expr_text: str, space: NumberSpace) -> tuple[list[str], int]:
    try:
        w = space.single_weight()
    except ValueError as e:
        raise CliError(str(e)) from None
    rep = parse_expr(expr_text)
    v = ultranorm(rep, w)
    lines = [f"norm({expr_text}) under {w.label}: {norm_text(v)}"]
    if v.witness:
        lines.append(f"  witness: {v.witness}")
    code = EXIT_OK if (v.exact or v.stable) else EXIT_INCONCLUSIVE
    return lines, code


def cmd_classify(expr_text: str, space: NumberSpace) -> tuple[list[str], int]:
    rep = parse_expr(expr_text)
    report = space.classify(rep)
    lines = [f"classify({expr_text}) in {space.name}:"]
    lines.extend(f"  {ln}" for ln in report.report_lines())
    return lines, EXIT_OK if report.conclusive else EXIT_INCONCLUSIVE


def cmd_assoc(
    a_text: str,
    b_text: str,
    kind: AssocKind,
    space: NumberSpace,
    difference: str | None = None,
) -> tuple[list[str], int]:
    try:
        a = gennum.make(parse_expr(a_text), space)
        b = gennum.make(parse_expr(b_text), space)
    except NotModerate as e:
        raise CliError(str(e)) from None
    diff = parse_expr(difference) if difference is not None else None
    verdict = gennum.associate(a, b, kind, difference=diff)
    lines = [f"assoc({a_text}, {b_text}) {kind.describe()}: {verdict.holds}"]
    if verdict.boundary:
        lines.append("  boundary: ultranorm sits exactly on the threshold")
    if verdict.witness:
        lines.append(f"  witness: {_witness_text(verdict.witness)}")
    if verdict.notes:
        lines.append(f"  notes: {verdict.notes}")
    code = EXIT_OK if verdict.holds in ("yes", "no") else EXIT_INCONCLUSIVE
    return lines, code


def cmd_convert_scale(scale_name: str, m_show: int = 4) -> tuple[list[str], int]:
    if scale_name == "power":
        scale = power_scale()
    elif scale_name == "expdecay":
        scale = expdecay_scale()
    else:
        raise CliError(f"unknown scale {scale_name!r}; use power or expdecay")
    fam = scale_to_weights(scale)
    lines = [f"scale {scale.name} -> weight family {fam.name} ({fam.direction.value})"]
    for m in range(fam.m_start, fam.m_start + m_show):
        w = fam.member(m)
        desc = growth.format_expr(w.expr) if w.is_symbolic else "(numeric)"
        lines.append(f"  m={m}: r = {desc}")
    report = verify_scale_axioms(scale)
    lines.append(
        f"scale axioms: ordered={report.ordered} reciprocal={report.reciprocal_ok} "
        f"square-absorption={ {k: v for k, v in report.square_witness.items()} }"
    )
    lines.append(f"  axioms hold: {report.holds}")
    for note in report.notes:
        lines.append(f"  note: {note}")
    return lines, EXIT_OK


def cmd_check_map(name: str, space: NumberSpace, role: str | None) -> tuple[list[str], int]:
    scalar = parse_scalar_map(name)
    seq = parse_seq_map(name) if scalar is None else None
    if scalar is None and seq is None:
        raise CliError(
            f"unknown map {name!r}; scalar maps: {', '.join(_SCALAR_MAPS)}; "
            f"sequence maps: {', '.join(_SEQ_MAPS)}"
        )
    fam = space.family
    if scalar is not None:
        role = role or "moderate"
        if role == "moderate":
            cert = temperate.check_moderate(scalar, fam)
        elif role == "compatible":
            cert = temperate.check_compatible(scalar, fam)
        else:
            raise CliError("scalar maps take role moderate or compatible")
        lines = [
            f"map {scalar.label} as {cert.role} over {fam.name} (case {cert.case}): {cert.status}"
            + (" [exact]" if cert.exact else "")
        ]
        if cert.pairs:
            shown = ", ".join(f"({m},{M})" for m, M in cert.pairs[:6])
            lines.append(f"  level pairs: {shown}" + (" ..." if len(cert.pairs) > 6 else ""))
        if cert.value_bound is not None:
            lines.append(f"  value bound factor: {cert.value_bound:.9g}")
        if cert.witness:
            lines.append(f"  witness: {_witness_text(cert.witness)}")
        lines.append(f"  {cert.notes}")
        code = EXIT_OK if cert.status in ("certified", "refuted") else EXIT_INCONCLUSIVE
        return lines, code

    role = role or "temperate"
    if role != "temperate":
        raise CliError("sequence maps take role temperate")
    report = temperate.check_temperate(seq, fam)
    lines = [f"map {seq.name} over {fam.name}: {report.status}"]
    for cert, tag in (
        (report.g_alpha_cert, "growth bound"),
        (report.g_beta_cert, "difference growth factor"),
        (report.h_beta_cert, "difference vanishing factor"),
    ):
        lines.append(f"  {tag} {cert.map_label}: {cert.status}" + (" [exact]" if cert.exact else ""))
        if cert.witness:
            lines.append(f"    witness: {_witness_text(cert.witness)}")
    lines.append(
        f"  corpus spot checks: {report.alpha_checked} growth, {report.beta_checked} difference"
    )
    if report.witness:
        lines.append(f"  witness: {_witness_text(report.witness)}")
    if report.notes:
        lines.append(f"  {report.notes}")
    code = EXIT_OK if report.status in ("certified", "refuted") else EXIT_INCONCLUSIVE
    return lines, code


def cmd_extend(map_name: str, func_name: str, space: NumberSpace) -> tuple[list[str], int]:
    seq_map = parse_seq_map(map_name)
    if seq_map is None:
        raise CliError(f"unknown sequence map {map_name!r}; use one of {', '.join(_SEQ_MAPS)}")
    try:
        f = corpus.named_function(func_name)
    except KeyError as e:
        raise CliError(str(e).strip("'")) from None
    fspace = FunctionSpace(space, nu_max=2)
    try:
        element = genfun.make_element(f, fspace)
    except NotModerate as e:
        raise CliError(f"input rejected: {e}") from None
    try:
        out = temperate.extend(seq_map, element)
    except temperate.ExtensionError as e:
        raise CliError(str(e)) from None
    lines = [f"extend({map_name}, {func_name}) in {fspace.name}:"]
    lines.append(f"  output: {out.seq.label}")
    lines.extend(f"  {ln}" for ln in out.report.report_lines())
    return lines, EXIT_OK if out.report.conclusive else EXIT_INCONCLUSIVE


# ---------------------------------------------------------------------------
# delta walkthrough


def _fit_slope(ns: Sequence[int], logs: Sequence[float]) -> float:
    x = np.log(np.asarray(ns, dtype=float))
    y = np.asarray(logs, dtype=float)
    a = np.vstack([x, np.ones_like(x)]).T
    slope, _ = np.linalg.lstsq(a, y, rcond=None)[0]
    return float(slope)


def cmd_demo_delta(seed: int = corpus.DEFAULT_SEED) -> tuple[list[str], int]:
    del seed  # the walkthrough is deterministic; flag kept for uniformity
    space = colombeau_space()
    lines = ["delta walkthrough (colombeau space)"]
    ok = True

    moll = standard_mollifier()
    delta = moll.sequence()
    delta_sq = square_seq(delta, label="delta^2")

    lines.append("1. seminorm growth p_nu(delta_n), slope of log p vs log n:")
    ns = [16, 32, 64, 128, 256, 512, 1024]
    for nu in range(4):
        logs = [math.log(genfun.seminorm(delta, n, genfun.SeminormSpec(nu=nu))) for n in ns]
        slope = _fit_slope(ns, logs)
        want = nu + 1
        good = abs(slope - want) <= 0.05 * want
        ok = ok and good
        lines.append(f"   nu={nu}: slope={slope:.9g} (target {want}, within 5%: {good})")

    lines.append("2. classification:")
    for label, seq in (("delta", delta), ("delta^2", delta_sq)):
        rep = genfun.classify_fun(seq, nu_max=2, space=space)
        good = rep.verdict == "moderate"
        ok = ok and good
        lines.append(f"   {label}: {rep.verdict}")

    lines.append("3. delta pairing recovers the point value:")
    psi = TestFunction(bump(0.0, 1.0))
    val = pairing(delta, 256, psi)
    target = float(psi(np.asarray([0.0]))[0])
    err = abs(val - target)
    good = err <= 1e-3
    ok = ok and good
    lines.append(f"   <delta_256, psi> = {val:.9g}, psi(0) = {target:.9g}, err = {err:.3g}")

    lines.append("4. delta^2 pairings grow linearly in n:")
    pair_ns = [64, 128, 256, 512, 1024]
    logs = [math.log(abs(pairing(delta_sq, n, psi))) for n in pair_ns]
    slope = _fit_slope(pair_ns, logs)
    good = abs(slope - 1.0) <= 0.1
    ok = ok and good
    lines.append(f"   slope of log <delta_n^2, psi> vs log n = {slope:.9g} (target 1.0 +- 0.1)")

    lines.append("5. weak association through the test set:")
    phi_sq_mass = genfun._quad(
        lambda x: float(moll.profile(np.asarray([x]), 0)[0]) ** 2, *moll.profile.support
    )
    candidates = [
        ("0", constant_seq(const_fn(0.0))),
        ("delta", delta),
        (f"{phi_sq_mass:.6g}*delta", seq_scale(phi_sq_mass, delta)),
    ]
    weak = AssocKind.weak()
    for label, cand in candidates:
        verdict = weak_assoc_fun(delta_sq, cand, weak)
        good = verdict.holds == "no"
        ok = ok and good
        lines.append(f"   delta^2 ~ {label}: {verdict.holds}")
    scaled = seq_scale(growth.parse("n^-1"), delta_sq, label="n^-1 delta^2")
    verdict = weak_assoc_fun(scaled, seq_scale(phi_sq_mass, delta), weak)
    good = verdict.holds == "yes"
    ok = ok and good
    lines.append(
        f"   n^-1 delta^2 ~ {phi_sq_mass:.6g}*delta: {verdict.holds} "
        f"(integral of the squared profile = {phi_sq_mass:.9g})"
    )

    lines.append(f"walkthrough verdicts all as expected: {ok}")
    return lines, EXIT_OK if ok else EXIT_INCONCLUSIVE


# ---------------------------------------------------------------------------
# batch files


def _parse_batch(path: str) -> tuple[dict, dict[str, SeqRep], list[tuple[int, list[str], dict]]]:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = fh.readlines()
    except OSError as e:
        raise CliError(f"cannot read {path}: {e}") from None

    space_opts: dict[str, str] = {}
    sequences: dict[str, SeqRep] = {}
    queries: list[tuple[int, list[str], dict]] = []
    section = None
    for idx, line in enumerate(raw, start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        if text.startswith("[") and text.endswith("]"):
            section = text[1:-1].strip()
            if section not in ("space", "sequences", "queries"):
                raise CliError(f"{path}:{idx}: unknown section [{section}]")
            continue
        if section == "space":
            if "=" not in text:
                raise CliError(f"{path}:{idx}: expected key = value")
            key, _, value = text.partition("=")
            space_opts[key.strip()] = value.strip()
        elif section == "sequences":
            if "=" not in text:
                raise CliError(f"{path}:{idx}: expected name = expression")
            name, _, expr_text = text.partition("=")
            name = name.strip()
            try:
                sequences[name] = SeqRep.symbolic(growth.parse(expr_text.strip()), label=name)
            except growth.ParseError as e:
                raise CliError(f"{path}:{idx}: cannot parse {name}: {e}") from None
        elif section == "queries":
            words = text.split()
            positional = [w for w in words if "=" not in w]
            options = dict(w.split("=", 1) for w in words if "=" in w)
            queries.append((idx, positional, options))
        else:
            raise CliError(f"{path}:{idx}: content before any [section]")
    return space_opts, sequences, queries


def _resolve(name: str, sequences: dict[str, SeqRep], path: str, idx: int) -> SeqRep:
    if name not in sequences:
        raise CliError(f"{path}:{idx}: unknown sequence {name!r}")
    return sequences[name]


def cmd_batch(path: str) -> tuple[list[str], int]:
    space_opts, sequences, queries = _parse_batch(path)
    space = parse_space(space_opts.get("family", "colombeau"), space_opts.get("mode"))
    lines: list[str] = [f"space: {space.name}"]
    worst = EXIT_OK

    for idx, words, opts in queries:
        if not words:
            raise CliError(f"{path}:{idx}: empty query")
        cmd, args = words[0], words[1:]
        try:
            if cmd == "norm" and len(args) == 1:
                rep = _resolve(args[0], sequences, path, idx)
                sub, code = _norm_rep(rep, space)
            elif cmd == "classify" and len(args) == 1:
                rep = _resolve(args[0], sequences, path, idx)
                report = space.classify(rep)
                sub = [f"classify {args[0]}:"] + [f"  {ln}" for ln in report.report_lines()]
                code = EXIT_OK if report.conclusive else EXIT_INCONCLUSIVE
            elif cmd == "assoc" and len(args) == 2:
                if "kind" not in opts:
                    raise CliError(f"{path}:{idx}: assoc needs kind=...")
                kind = parse_kind(opts["kind"])
                diff = opts.get("difference")
                a = gennum.make(_resolve(args[0], sequences, path, idx), space)
                b = gennum.make(_resolve(args[1], sequences, path, idx), space)
                diff_rep = _resolve(diff, sequences, path, idx) if diff else None
                verdict = gennum.associate(a, b, kind, difference=diff_rep)
                sub = [f"assoc {args[0]} {args[1]} [{kind.describe()}]: {verdict.holds}"]
                if verdict.witness:
                    sub.append(f"  witness: {_witness_text(verdict.witness)}")
                code = EXIT_OK if verdict.holds in ("yes", "no") else EXIT_INCONCLUSIVE
            elif cmd == "check" and len(args) == 1:
                sub, code = cmd_check_map(args[0], space, opts.get("role"))
            elif cmd == "extend" and len(args) == 2:
                sub, code = cmd_extend(args[0], args[1], space)
            else:
                raise CliError(f"{path}:{idx}: cannot understand query {' '.join(words)!r}")
        except CliError:
            raise
        except (NotModerate, growth.NotRepresentable, ValueError) as e:
            raise CliError(f"{path}:{idx}: {e}") from None
        lines.append(f"-- line {idx}")
        lines.extend(sub)
        worst = max(worst, code)
    return lines, worst


def _norm_rep(rep: SeqRep, space: NumberSpace) -> tuple[list[str], int]:
    w = space.single_weight()
    v = ultranorm(rep, w)
    lines = [f"norm {rep.label} under {w.label}: {norm_text(v)}"]
    code = EXIT_OK if (v.exact or v.stable) else EXIT_INCONCLUSIVE
    return lines, code


# ---------------------------------------------------------------------------
# entry point


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ultraseq",
        description="Sequence-space calculus: ultranorms, classification, association",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_space(sp):
        sp.add_argument("--space", default="colombeau", help="space name (default colombeau)")
        sp.add_argument("--mode", default=None, help="standard or unit-ball (default per space)")

    s = sub.add_parser("norm", help="ultranorm of one expression")
    s.add_argument("expr")
    add_space(s)

    s = sub.add_parser("classify", help="moderate/negligible classification")
    s.add_argument("expr")
    add_space(s)

    s = sub.add_parser("assoc", help="association between two expressions")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--kind", required=True, help="weak, strong:S, weak-s:S, dual:S, power-x")
    s.add_argument("--difference", default=None, help="explicit |a - b| expression")
    add_space(s)

    s = sub.add_parser("convert-scale", help="weights induced by a decay scale")
    s.add_argument("scale", choices=["power", "expdecay"])

    s = sub.add_parser("check-map", help="moderate/compatible/temperate certificates")
    s.add_argument("name")
    s.add_argument("--role", default=None, choices=["moderate", "compatible", "temperate"])
    add_space(s)

    s = sub.add_parser("extend", help="apply a certified map to a named function sequence")
    s.add_argument("map")
    s.add_argument("func")
    add_space(s)

    s = sub.add_parser("demo", help="guided walkthroughs")
    s.add_argument("topic", choices=["delta"])
    s.add_argument("--seed", type=int, default=corpus.DEFAULT_SEED)

    s = sub.add_parser("batch", help="run a query file")
    s.add_argument("file")

    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "norm":
            lines, code = cmd_norm(args.expr, parse_space(args.space, args.mode))
        elif args.command == "classify":
            lines, code = cmd_classify(args.expr, parse_space(args.space, args.mode))
        elif args.command == "assoc":
            lines, code = cmd_assoc(
                args.a,
                args.b,
                parse_kind(args.kind),
                parse_space(args.space, args.mode),
                difference=args.difference,
            )
        elif args.command == "convert-scale":
            lines, code = cmd_convert_scale(args.scale)
        elif args.command == "check-map":
            lines, code = cmd_check_map(args.name, parse_space(args.space, args.mode), args.role)
        elif args.command == "extend":
            lines, code = cmd_extend(args.map, args.func, parse_space(args.space, args.mode))
        elif args.command == "demo":
            lines, code = cmd_demo_delta(args.seed)
        elif args.command == "batch":
            lines, code = cmd_batch(args.file)
        else:  # pragma: no cover - argparse enforces the choices
            raise CliError(f"unknown command {args.command!r}")
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except (NotModerate, growth.NotRepresentable) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    for line in lines:
        print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
