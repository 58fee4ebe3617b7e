import json
import re

import pytest

from slcert.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_certify_defaults(capsys):
    code, out, _ = run_cli(
        capsys, "certify", "--surface", "genus2", "--alpha", "2", "--beta", "-3",
        "--max-len", "6",
    )
    assert code == 0
    report = json.loads(out)
    assert report["failures"] == []
    assert report["kernel_witness"]["verdict"] == "identity"
    assert report["nonconjugacy"]["word"] == "ax"


def test_certify_rejects_dependent_params(capsys):
    code, _, err = run_cli(capsys, "certify", "--alpha", "2", "--beta", "4")
    assert code == 2
    assert "alpha^-2 * beta^1" in err


def test_certify_punctured_torus(capsys):
    code, out, _ = run_cli(
        capsys, "certify", "--surface", "punctured-torus", "--max-len", "8"
    )
    assert code == 0
    report = json.loads(out)
    assert report["surface"] == "punctured-torus"
    assert report["failures"] == []


def test_certify_reports_are_reproducible(capsys):
    argv = ["certify", "--max-len", "5"]
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    strip = lambda s: re.sub(r'"timing_ms": \d+', '"timing_ms": 0', s)
    assert strip(out1) == strip(out2)


def test_certify_csv_and_pretty(capsys):
    code, out, _ = run_cli(capsys, "certify", "--max-len", "4", "--format", "csv")
    assert code == 0
    header, *rows = out.strip().splitlines()
    assert header == "word,kind,power,trace,verdict,reason"
    assert all(row.count(",") >= 5 for row in rows)
    code, out, _ = run_cli(capsys, "certify", "--max-len", "4", "--format", "pretty")
    assert code == 0
    assert "0 failures" in out


def test_word_kernel_witness(capsys):
    code, out, _ = run_cli(capsys, "word", "[[x,y],[x^2,y]]")
    assert code == 0
    assert "verdict: identity" in out


def test_word_hyperbolic(capsys):
    code, out, _ = run_cli(
        capsys, "word", "x^2 y", "--surface", "punctured-torus"
    )
    assert code == 0
    assert "trace: -145/12" in out
    assert "infinite-order (hyperbolic)" in out


def test_word_empty_after_reduction(capsys):
    code, _, err = run_cli(capsys, "word", "x X")
    assert code == 2
    assert "empty" in err


def test_word_syntax_error(capsys):
    code, _, err = run_cli(capsys, "word", "x$")
    assert code == 2
    assert "offset" in err


def test_word_out_of_scope(capsys):
    code, _, err = run_cli(capsys, "word", "a x", "--surface", "punctured-torus")
    assert code == 2
    assert "scope" in err


def test_enumerate(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--max-len", "3")
    assert code == 0
    records = [json.loads(line) for line in out.strip().splitlines()]
    nonboundary = [r["canonical"] for r in records if r["kind"] != "boundary"]
    assert nonboundary == ["x", "y", "xy", "xxy", "xyy"]
    code, out, _ = run_cli(capsys, "enumerate", "--max-len", "4")
    records = [json.loads(line) for line in out.strip().splitlines()]
    assert any(r["kind"] == "boundary" for r in records)


def test_enumerate_rejects_zero(capsys):
    code, _, err = run_cli(capsys, "enumerate", "--max-len", "0")
    assert code == 2
    assert "max-len" in err


def test_lemma(capsys):
    code, out, _ = run_cli(
        capsys, "lemma", "--trials", "50", "--max-l", "3", "--seed", "7"
    )
    assert code == 0
    assert out.strip() == "50/50 conform"


def test_lemma_single_trial(capsys):
    code, out, _ = run_cli(capsys, "lemma", "--trials", "1", "--max-l", "1")
    assert code == 0
    assert out.strip() == "1/1 conform"


def test_lemma_allow_bad_hypotheses(capsys):
    code, out, _ = run_cli(
        capsys,
        "lemma", "--trials", "60", "--max-l", "3", "--seed", "7",
        "--allow-bad-hypotheses",
    )
    assert code == 0
    assert "excluded" in out


def test_kernel_command(capsys):
    code, out, _ = run_cli(capsys, "kernel")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "identity"
    assert data["word"] == "[[x,y],[x^2,y]]"


def test_witness_command(capsys):
    code, out, _ = run_cli(capsys, "witness")
    assert code == 0
    data = json.loads(out)
    assert data["word"] == "ax"
    assert data["trace_poly"] == ["9/2", "1"]
    code, out, _ = run_cli(capsys, "witness", "--surface", "punctured-torus")
    data = json.loads(out)
    assert data["word"] == "y"


def test_config_file(tmp_path, capsys):
    config = tmp_path / "run.toml"
    config.write_text(
        'alpha = "3"\nbeta = "-2"\nsurface = "punctured-torus"\nmax_len = 5\n'
    )
    code, out, _ = run_cli(capsys, "certify", "--config", str(config))
    assert code == 0
    report = json.loads(out)
    assert report["params"] == {"alpha": "3", "beta": "-2"}
    assert report["surface"] == "punctured-torus"
    assert report["max_len"] == 5
    # flags override the file
    code, out, _ = run_cli(
        capsys, "certify", "--config", str(config), "--surface", "genus2",
        "--max-len", "4",
    )
    report = json.loads(out)
    assert report["surface"] == "genus2"
    assert report["max_len"] == 4


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "certify", "--max-len", "4", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["failures"] == []


def test_io_failure_exit_code(tmp_path, capsys):
    code, _, err = run_cli(
        capsys, "certify", "--max-len", "4",
        "--out", str(tmp_path / "missing" / "report.json"),
    )
    assert code == 3
    assert "cannot write" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["certify", "--surface", "genus3"])
    assert info.value.code == 2
