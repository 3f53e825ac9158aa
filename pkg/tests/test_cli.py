"""Command line behavior, driven in-process through cli.main."""

import pytest

from ultraseq import cli


def run(capsys, *argv):
    rc = cli.main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_norm_exact_power(capsys):
    rc, out, _ = run(capsys, "norm", "n^2")
    assert rc == 0
    assert "exact e^2 = 7.3890561" in out
    assert "witness: exact limit" in out


def test_norm_log_factor_collapses_to_one(capsys):
    rc, out, _ = run(capsys, "norm", "log(n)^-1")
    assert rc == 0
    assert "exact 1" in out


def test_classify_divergent(capsys):
    rc, out, _ = run(capsys, "classify", "exp(n)")
    assert rc == 0
    assert "verdict: divergent" in out


def test_classify_mode_override(capsys):
    rc, out, _ = run(capsys, "classify", "n^-1", "--space", "infra",
                     "--mode", "unit-ball")
    assert rc == 0
    assert "infra[unit-ball]" in out
    assert "norm=1" in out
    assert "verdict: boundary" in out


def test_assoc_dual_yes_with_multiplier(capsys):
    rc, out, _ = run(capsys, "assoc", "n^-2*log(n)^-1", "0", "--kind", "dual:2")
    assert rc == 0
    assert "s-dual(s=2): yes" in out
    assert "multiplier=n^2" in out


def test_assoc_weak_s_boundary_no(capsys):
    rc, out, _ = run(capsys, "assoc", "n^-2*log(n)^-1", "0",
                     "--kind", "weak-s:2")
    assert rc == 0
    assert "weak-s(s=2): no" in out
    assert "boundary" in out
    assert "ultranorm=0.135335283" in out


def test_assoc_rejects_non_moderate_input(capsys):
    rc, out, err = run(capsys, "assoc", "exp(n)", "0", "--kind", "weak")
    assert rc == 1
    assert "not moderate" in err


def test_convert_scale_power(capsys):
    rc, out, _ = run(capsys, "convert-scale", "power")
    assert rc == 0
    assert "scale n^-m -> weight family" in out
    assert "(decreasing)" in out
    assert "axioms hold: True" in out


def test_check_map_power_certified(capsys):
    rc, out, _ = run(capsys, "check-map", "power:2")
    assert rc == 0
    assert "certified [exact]" in out
    assert "level pairs: (1,1)" in out


def test_check_map_exp_refuted_with_witness(capsys):
    rc, out, _ = run(capsys, "check-map", "exp")
    assert rc == 0
    assert "refuted [exact]" in out
    assert "witness: m=1, M=1" in out


def test_check_map_egorov_inconclusive(capsys):
    rc, out, _ = run(capsys, "check-map", "square", "--space", "egorov")
    assert rc == 2
    assert "inconclusive" in out


def test_extend_square_of_delta(capsys):
    rc, out, _ = run(capsys, "extend", "square", "delta")
    assert rc == 0
    assert "output: (delta" in out
    assert "verdict: moderate" in out


def test_extend_refused_for_exp(capsys):
    rc, out, err = run(capsys, "extend", "exp-seq", "delta")
    assert rc == 1
    assert "outside the moderate class" in err


def test_batch_runs_queries_with_line_markers(capsys, tmp_path):
    path = tmp_path / "run.batch"
    path.write_text(
        "[space]\n"
        "family = colombeau\n"
        "\n"
        "[sequences]\n"
        "f = n^2\n"
        "g = exp(-n)\n"
        "\n"
        "[queries]\n"
        "norm f\n"
        "classify g\n"
    )
    rc, out, _ = run(capsys, "batch", str(path))
    assert rc == 0
    assert "space: colombeau[standard]" in out
    assert "-- line 9" in out
    assert "exact e^2 = 7.3890561" in out
    assert "-- line 10" in out
    assert "verdict: negligible" in out


def test_batch_reports_parse_error_with_position(capsys, tmp_path):
    path = tmp_path / "bad.batch"
    path.write_text(
        "[space]\n"
        "family = colombeau\n"
        "\n"
        "[sequences]\n"
        "f = n^^2\n"
        "\n"
        "[queries]\n"
        "norm f\n"
    )
    rc, out, err = run(capsys, "batch", str(path))
    assert rc == 1
    assert f"{path}:5: cannot parse f" in err
    assert "(at position 2)" in err


def test_batch_rejects_unknown_query(capsys, tmp_path):
    path = tmp_path / "unk.batch"
    path.write_text(
        "[sequences]\n"
        "f = n^2\n"
        "\n"
        "[queries]\n"
        "frobnicate f\n"
    )
    rc, out, err = run(capsys, "batch", str(path))
    assert rc == 1
    assert "cannot understand query 'frobnicate f'" in err


def test_batch_exit_code_is_worst_of_queries(capsys, tmp_path):
    path = tmp_path / "mix.batch"
    path.write_text(
        "[space]\n"
        "family = egorov\n"
        "\n"
        "[sequences]\n"
        "f = n^2\n"
        "\n"
        "[queries]\n"
        "classify f\n"
        "check square\n"
    )
    rc, out, _ = run(capsys, "batch", str(path))
    assert rc == 2
    assert "verdict: moderate" in out
    assert "inconclusive" in out
