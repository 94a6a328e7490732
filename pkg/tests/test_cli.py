"""Command line behavior: golden outputs, format equivalence, determinism,
and exit codes."""

import json
import random
from fractions import Fraction

import pytest

import degenbell.numbers as numbers
from degenbell import clear_caches
from degenbell.cli import TABLE_FAMILIES, main
from degenbell.numbers import HALF, degen_falling, degen_rising
from degenbell.ring import LambdaPoly, poly_to_plain

F = Fraction


def run_cli(capsys, argv):
    rc = main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


# ---------------------------------------------------------------------------
# Golden outputs
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "argv, expected",
    [
        (
            ["eval", "central-factorial2", "--n", "2", "--k", "1", "--lambda", "sym"],
            "-1*L\n",
        ),
        (["eval", "stirling1", "--n", "3", "--k", "3"], "1\n"),
        (
            ["eval", "central-complete", "--n", "2", "--xs", "1,1", "--lambda", "1/2"],
            "1/2\n",
        ),
        (["eval", "bell-deg", "--n", "2", "--xs", "3"], "12 - 3*L\n"),
        (["eval", "bell-central-deg", "--n", "2", "--xs", "5"], "25 - 5*L\n"),
        (["eval", "incomplete", "--n", "4", "--k", "2", "--xs", "1,1,1"], "7\n"),
        (["eval", "central-incomplete", "--n", "3", "--k", "1", "--xs", "0,0,1"],
         "1/4 + 2*L^2\n"),
        (["eval", "stirling1", "--n", "1", "--k", "3"], "0\n"),
    ],
)
def test_eval_goldens(capsys, argv, expected):
    rc, out, _ = run_cli(capsys, argv)
    assert rc == 0
    assert out == expected


def test_table_goldens(capsys):
    rc, out, _ = run_cli(
        capsys,
        ["table", "central-factorial2", "--n-max", "2", "--lambda", "0",
         "--format", "csv"],
    )
    assert rc == 0
    assert out == "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,0\n2,2,1\n"

    rc, out, _ = run_cli(
        capsys, ["table", "stirling1", "--n-max", "2", "--format", "csv"]
    )
    assert rc == 0
    assert out == "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,-1\n2,2,1\n"

    rc, out, _ = run_cli(capsys, ["table", "central-factorial2", "--n-max", "0"])
    assert rc == 0
    assert out == "0 0 1\n"


def test_eval_json_symbolic(capsys):
    rc, out, _ = run_cli(
        capsys,
        ["eval", "central-factorial2", "--n", "2", "--k", "1", "--format", "json"],
    )
    assert rc == 0
    payload = json.loads(out)
    assert payload == {
        "family": "central-factorial2",
        "n": 2,
        "k": 1,
        "lambda": "sym",
        "value": ["0", "-1"],
    }


def test_eval_json_numeric_lambda(capsys):
    rc, out, _ = run_cli(
        capsys,
        ["eval", "central-factorial2", "--n", "2", "--k", "1",
         "--lambda=-2/3", "--format", "json"],
    )
    assert rc == 0
    assert json.loads(out)["value"] == "2/3"


# ---------------------------------------------------------------------------
# Format equivalence and determinism
# ---------------------------------------------------------------------------


def _parse_csv_table(text):
    lines = text.strip().split("\n")
    assert lines[0] == "n,k,value"
    rows = []
    for line in lines[1:]:
        n, k, value = line.split(",", 2)
        rows.append((int(n), int(k), value))
    return rows


def test_json_csv_cross_parse_on_random_invocations(capsys):
    rng = random.Random(42)
    lambda_pool = ("sym", "0", "1/2", "-1/3", "3")
    for _ in range(20):
        family = rng.choice(TABLE_FAMILIES)
        n_max = rng.randint(0, 5)
        lam = rng.choice(lambda_pool)
        base = ["table", family, "--n-max", str(n_max), f"--lambda={lam}"]

        rc, json_out, _ = run_cli(capsys, base + ["--format", "json"])
        assert rc == 0
        rc, csv_out, _ = run_cli(capsys, base + ["--format", "csv"])
        assert rc == 0

        # Identical invocations must be byte-identical.
        rc, json_again, _ = run_cli(capsys, base + ["--format", "json"])
        assert rc == 0 and json_again == json_out

        payload = json.loads(json_out)
        assert payload["family"] == family
        assert payload["lambda"] == lam
        csv_rows = _parse_csv_table(csv_out)
        assert len(csv_rows) == len(payload["rows"])
        for (n, k, csv_value), row in zip(csv_rows, payload["rows"]):
            assert (n, k) == (row["n"], row["k"])
            if lam == "sym":
                # JSON carries the coefficient array; rendering it must
                # reproduce the CSV cell.
                poly = LambdaPoly([F(c) for c in row["value"]])
                assert poly_to_plain(poly) == csv_value
            else:
                assert row["value"] == csv_value


def test_numeric_lambda_is_symbolic_evaluation(capsys):
    # Round trip: the rational-mode value equals the symbolic polynomial
    # evaluated at that parameter value.
    cases = [
        ["eval", "stirling2-deg", "--n", "5", "--k", "3"],
        ["eval", "central-factorial2", "--n", "6", "--k", "2"],
        ["eval", "central-complete", "--n", "3", "--xs", "2,-1,1/3"],
        ["eval", "incomplete-deg", "--n", "4", "--k", "2", "--xs", "1,2,3"],
    ]
    lam = F(-3, 7)
    for argv in cases:
        rc, sym_out, _ = run_cli(capsys, argv + ["--format", "json"])
        assert rc == 0
        coeffs = [F(c) for c in json.loads(sym_out)["value"]]
        rc, num_out, _ = run_cli(capsys, argv + ["--lambda=-3/7"])
        assert rc == 0
        assert F(num_out.strip()) == LambdaPoly(coeffs).eval(lam)


# ---------------------------------------------------------------------------
# verify subcommand
# ---------------------------------------------------------------------------


def test_verify_passes_and_writes_report(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    rc, out, err = run_cli(
        capsys, ["verify", "--n-max", "4", "--seed", "1", "--out", str(out_path)]
    )
    assert rc == 0
    assert out == ""
    lines = err.strip().split("\n")
    assert len(lines) == 13
    assert all(line.endswith(": pass") for line in lines)
    payload = json.loads(out_path.read_text())
    assert len(payload) == 13
    assert all(entry["status"] == "pass" for entry in payload)


def test_verify_stdout_report(capsys):
    rc, out, err = run_cli(capsys, ["verify", "--n-max", "2"])
    assert rc == 0
    payload = json.loads(out)
    assert [entry["check_id"] for entry in payload] == [
        "L1", "T2", "C3", "Z0", "H1", "H2", "E9", "E11", "E12", "T4", "T5",
        "C6", "D0",
    ]


def test_verify_detects_broken_build(capsys, monkeypatch, tmp_path):
    def flipped(m):
        return degen_falling(HALF, m) + degen_rising(HALF, m) * F((-1) ** m)

    clear_caches()
    monkeypatch.setattr(numbers, "central_coeff", flipped)
    try:
        out_path = tmp_path / "broken.json"
        rc, _, err = run_cli(
            capsys, ["verify", "--n-max", "3", "--out", str(out_path)]
        )
        assert rc == 1
        payload = json.loads(out_path.read_text())
        failed = {e["check_id"] for e in payload if e["status"] == "fail"}
        assert {"L1", "C3", "T5"} <= failed
        for entry in payload:
            if entry["status"] == "fail":
                assert entry["counterexample"]["lhs"] != entry["counterexample"]["rhs"]
    finally:
        monkeypatch.undo()
        clear_caches()


# ---------------------------------------------------------------------------
# Exit codes
# ---------------------------------------------------------------------------


def test_unknown_family_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "nonesuch", "--n", "1"])
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "central-incomplete", "--n", "3", "--k", "1", "--xs", "1,2"],
        ["eval", "stirling1", "--n", "3"],
        ["eval", "bell-deg", "--n", "2", "--k", "1", "--xs", "1"],
        ["eval", "stirling1", "--n", "3", "--k", "1", "--xs", "1"],
        ["eval", "bell-deg", "--n", "2"],
        ["eval", "bell-deg", "--n", "2", "--xs", "1.5"],
        ["eval", "bell-deg", "--n", "-2", "--xs", "1"],
        ["eval", "central-complete", "--n", "2", "--xs", "1,1", "--lambda", "x"],
        ["eval", "incomplete", "--n", "2", "--k", "3", "--xs", "1"],
        ["table", "stirling1", "--n-max", "-1"],
        ["verify", "--n-max", "-3"],
        ["verify", "--seed", "-1"],
        ["verify", "--lambda", "0.5"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    rc, out, err = run_cli(capsys, argv)
    assert rc == 2
    assert out == ""
    assert err.startswith("degenbell: ")
    assert err.count("\n") == 1


def test_io_error_exit_3(capsys, tmp_path):
    missing = tmp_path / "no" / "such" / "dir" / "out.txt"
    rc, _, err = run_cli(
        capsys, ["eval", "stirling1", "--n", "1", "--k", "1", "--out", str(missing)]
    )
    assert rc == 3
    assert err.startswith("degenbell: ")

    rc, _, err = run_cli(capsys, ["verify", "--n-max", "2", "--out", str(missing)])
    assert rc == 3


def test_out_file_matches_stdout(capsys, tmp_path):
    argv = ["table", "stirling2-deg", "--n-max", "3", "--format", "csv"]
    rc, stdout_text, _ = run_cli(capsys, argv)
    assert rc == 0
    out_path = tmp_path / "table.csv"
    rc, out, _ = run_cli(capsys, argv + ["--out", str(out_path)])
    assert rc == 0
    assert out == ""
    assert out_path.read_text() == stdout_text
