"""Verification suite behavior: grid coverage, determinism, report schema,
parameter modes, and failure detection under a deliberately broken build."""

import json
from fractions import Fraction

import pytest

import degenbell.numbers as numbers
from degenbell import clear_caches
from degenbell.bell import central_incomplete, incomplete_bell_classical_poly
from degenbell.identities import (
    CHECKS,
    SuiteConfig,
    reports_to_json,
    run_suite,
)
from degenbell.numbers import HALF, degen_falling, degen_rising
from degenbell.ring import parse_rational

CHECK_IDS = [
    "L1",
    "T2",
    "C3",
    "Z0",
    "H1",
    "H2",
    "E9",
    "E11",
    "E12",
    "T4",
    "T5",
    "C6",
    "D0",
]


def test_registry_ids_unique_and_ordered():
    assert [check_id for check_id, _ in CHECKS] == CHECK_IDS
    assert len(set(CHECK_IDS)) == len(CHECK_IDS)


def test_suite_passes_symbolically():
    reports = run_suite(SuiteConfig(n_max=6))
    assert [r.check_id for r in reports] == CHECK_IDS
    assert all(r.status == "pass" for r in reports)
    assert all(r.counterexample is None for r in reports)


def test_grid_coverage_counts():
    reports = {r.check_id: r for r in run_suite(SuiteConfig(n_max=6))}
    # Even n-k pairs with 0 <= k <= n <= 6.
    assert reports["L1"].pairs_visited == 16
    assert reports["C3"].pairs_visited == 16
    assert reports["Z0"].pairs_visited == 16
    # All pairs, one visit per pair.
    assert reports["E9"].pairs_visited == 28
    assert reports["H1"].pairs_visited == 28
    # One visit per n.
    assert reports["E11"].pairs_visited == 7
    # Odd n only.
    assert reports["T4"].pairs_visited == 3
    # Three x samples per n.
    assert reports["T5"].pairs_visited == 21
    assert reports["C6"].pairs_visited == 21


def test_suite_deterministic():
    config = SuiteConfig(n_max=5, seed=11)
    first = reports_to_json(run_suite(config))
    second = reports_to_json(run_suite(config))
    assert first == second


def test_seed_changes_are_still_green():
    reports = run_suite(SuiteConfig(n_max=4, seed=20260819))
    assert all(r.status == "pass" for r in reports)


def test_rational_lambda_mode():
    config = SuiteConfig(n_max=4, lambda_mode="1/2")
    reports = run_suite(config)
    assert all(r.status == "pass" for r in reports)
    payload = json.loads(reports_to_json(reports))
    assert all(entry["grid"]["lambda_mode"] == "1/2" for entry in payload)
    assert config.lambda_value() == Fraction(1, 2)


def test_trivial_grid_passes():
    reports = run_suite(SuiteConfig(n_max=0))
    assert all(r.status == "pass" for r in reports)


def test_bad_config_rejected():
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(n_max=-1))
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(n_max=2, lambda_mode="0.5"))
    with pytest.raises(ValueError):
        parse_rational("1/0")


def test_report_json_schema():
    payload = json.loads(reports_to_json(run_suite(SuiteConfig(n_max=3))))
    assert isinstance(payload, list) and len(payload) == len(CHECK_IDS)
    for entry in payload:
        assert {"check_id", "description", "grid", "status"} <= set(entry)
        assert set(entry) <= {
            "check_id",
            "description",
            "grid",
            "status",
            "counterexample",
            "observations",
        }
        assert set(entry["grid"]) == {"n_max", "samples", "lambda_mode"}
        assert entry["status"] in ("pass", "fail")
        if "observations" in entry:
            assert all(isinstance(o, str) for o in entry["observations"])


def test_off_parity_observations_recorded():
    reports = {r.check_id: r for r in run_suite(SuiteConfig(n_max=6))}
    for check_id in ("L1", "T2", "C3", "Z0", "T4"):
        obs = reports[check_id].observations
        assert obs, check_id
        assert any("agree" in line for line in obs)


def _flipped_central_coeff(m: int):
    # Same two factorial products, opposite sign on the reflected one.
    return degen_falling(HALF, m) + degen_rising(HALF, m) * Fraction((-1) ** m)


def test_mutated_kernel_weight_is_caught(monkeypatch):
    clear_caches()
    monkeypatch.setattr(numbers, "central_coeff", _flipped_central_coeff)
    try:
        reports = {r.check_id: r for r in run_suite(SuiteConfig(n_max=4))}
        for check_id in ("L1", "C3", "T5"):
            report = reports[check_id]
            assert report.status == "fail", check_id
            assert report.counterexample is not None, check_id
            assert report.counterexample.lhs != report.counterexample.rhs

        # Soundness: the reported counterexample reproduces through the
        # public operations while the build is still broken.
        ce = reports["L1"].counterexample
        xs = tuple(parse_rational(s) for s in ce.xs)
        lhs = central_incomplete(ce.n, ce.k, xs)
        weights = []
        for j, x in enumerate(xs, start=1):
            fall = degen_falling(HALF, j)
            rise = degen_rising(HALF, j)
            weights.append((fall + rise if j % 2 else fall - rise) * x)
        rhs = incomplete_bell_classical_poly(ce.n, ce.k, weights)
        assert lhs != rhs
    finally:
        monkeypatch.undo()
        clear_caches()

    healthy = run_suite(SuiteConfig(n_max=4))
    assert all(r.status == "pass" for r in healthy)
