"""Mechanical verification suite for the polynomial family identities.

Each check sweeps a grid of indices up to a configurable bound, evaluates
both sides of one identity through the public operations, and reports the
first counterexample if the sides ever differ.  Checks whose source
statement restricts the parity of ``n - k`` assert only on that parity
class; the opposite class is still evaluated and its outcome is recorded in
the report's observations, never folded into pass/fail.

Runs are deterministic: the same configuration produces byte-identical
reports.  Every random argument is a small nonzero rational drawn from a
per-check stream seeded by the configuration seed and the check id.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import bell, numbers
from .bell import all_ones
from .numbers import HALF
from .ring import LambdaPoly, parse_rational, poly_to_plain


@dataclass(frozen=True)
class SuiteConfig:
    """Configuration of one verification run."""

    n_max: int = 8
    lambda_mode: str = "sym"  # "sym" or a rational literal like "1/2"
    seed: int = 1

    def lambda_value(self) -> Fraction | None:
        if self.lambda_mode == "sym":
            return None
        return parse_rational(self.lambda_mode)


@dataclass(frozen=True)
class Counterexample:
    n: int
    k: int | None
    lam: str
    xs: tuple[str, ...] | None
    lhs: str
    rhs: str

    def to_json_dict(self) -> dict:
        out: dict = {"n": self.n}
        if self.k is not None:
            out["k"] = self.k
        out["lambda"] = self.lam
        if self.xs is not None:
            out["xs"] = list(self.xs)
        out["lhs"] = self.lhs
        out["rhs"] = self.rhs
        return out


@dataclass
class IdentityReport:
    check_id: str
    description: str
    n_max: int
    samples: int
    lambda_mode: str
    status: str
    counterexample: Counterexample | None = None
    observations: tuple[str, ...] = ()
    pairs_visited: int = 0

    def to_json_dict(self) -> dict:
        out: dict = {
            "check_id": self.check_id,
            "description": self.description,
            "grid": {
                "n_max": self.n_max,
                "samples": self.samples,
                "lambda_mode": self.lambda_mode,
            },
            "status": self.status,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_json_dict()
        if self.observations:
            out["observations"] = list(self.observations)
        return out


def reports_to_json(reports: list[IdentityReport]) -> str:
    return json.dumps([r.to_json_dict() for r in reports], indent=2) + "\n"


# ---------------------------------------------------------------------------
# Shared helpers
# ---------------------------------------------------------------------------


def _rng_for(config: SuiteConfig, check_id: str) -> random.Random:
    # String seeds hash through sha512, so streams are stable across runs
    # and independent of check execution order.
    return random.Random(f"{config.seed}:{check_id}")


def _rand_rational(rng: random.Random) -> Fraction:
    p = rng.randint(1, 20) * rng.choice((-1, 1))
    q = rng.randint(1, 10)
    return Fraction(p, q)


def _rand_vector(rng: random.Random, length: int) -> tuple[Fraction, ...]:
    return tuple(_rand_rational(rng) for _ in range(length))


def _equal(lhs: LambdaPoly, rhs: LambdaPoly, lam: Fraction | None) -> bool:
    if lam is None:
        return lhs == rhs
    return lhs.eval(lam) == rhs.eval(lam)


def _render(value: LambdaPoly, lam: Fraction | None) -> str:
    if lam is None:
        return poly_to_plain(value)
    return str(value.eval(lam))


def _lam_label(lam: Fraction | None) -> str:
    return "sym" if lam is None else str(lam)


class _Recorder:
    """Collects the first counterexample plus off-statement tallies."""

    def __init__(self, lam: Fraction | None) -> None:
        self.lam = lam
        self.counterexample: Counterexample | None = None
        self.visited = 0
        self.off_total = 0
        self.off_agree = 0
        self.off_detail: str | None = None

    def stated(
        self,
        ok: bool,
        n: int,
        k: int | None,
        xs: tuple[Fraction, ...] | None,
        lhs: LambdaPoly,
        rhs: LambdaPoly,
    ) -> None:
        self.visited += 1
        if not ok and self.counterexample is None:
            self.counterexample = Counterexample(
                n=n,
                k=k,
                lam=_lam_label(self.lam),
                xs=None if xs is None else tuple(str(x) for x in xs),
                lhs=_render(lhs, self.lam),
                rhs=_render(rhs, self.lam),
            )

    def off(self, ok: bool, n: int, k: int | None) -> None:
        self.off_total += 1
        if ok:
            self.off_agree += 1
        elif self.off_detail is None:
            where = f"n={n}" if k is None else f"n={n}, k={k}"
            self.off_detail = f"first off-statement disagreement at {where}"

    def observations(self, label: str) -> tuple[str, ...]:
        if not self.off_total:
            return ()
        obs = [f"{label}: {self.off_agree}/{self.off_total} agree"]
        if self.off_detail is not None:
            obs.append(self.off_detail)
        return tuple(obs)

    def status(self) -> str:
        return "fail" if self.counterexample is not None else "pass"


def _report(
    config: SuiteConfig,
    check_id: str,
    description: str,
    samples: int,
    rec: _Recorder,
    obs_label: str | None = None,
    extra_obs: tuple[str, ...] = (),
) -> IdentityReport:
    observations = rec.observations(obs_label) if obs_label else ()
    return IdentityReport(
        check_id=check_id,
        description=description,
        n_max=config.n_max,
        samples=samples,
        lambda_mode=config.lambda_mode,
        status=rec.status(),
        counterexample=rec.counterexample,
        observations=observations + extra_obs,
        pairs_visited=rec.visited,
    )


# ---------------------------------------------------------------------------
# Individual checks
# ---------------------------------------------------------------------------


def _displayed_central_weights(
    xs: tuple[Fraction, ...]
) -> list[LambdaPoly]:
    """Argument weights written out the long way: falling plus rising
    half-point factorial on odd slots, falling minus rising on even ones.
    Deliberately avoids ``central_coeff`` so this side stays an independent
    witness of the compact kernel form."""
    ws = []
    for j, x in enumerate(xs, start=1):
        fall = numbers.degen_falling(HALF, j)
        rise = numbers.degen_rising(HALF, j)
        base = fall + rise if j % 2 else fall - rise
        ws.append(base * Fraction(x))
    return ws


def check_kernel_weighted_classical(config: SuiteConfig) -> IdentityReport:
    """Central incomplete equals the classical incomplete Bell polynomial at
    kernel-weighted arguments (stated for even ``n - k``)."""
    rng = _rng_for(config, "L1")
    rec = _Recorder(config.lambda_value())
    for n in range(config.n_max + 1):
        for k in range(n + 1):
            xs = _rand_vector(rng, n - k + 1)
            lhs = bell.central_incomplete(n, k, xs)
            rhs = bell.incomplete_bell_classical_poly(
                n, k, _displayed_central_weights(xs)
            )
            ok = _equal(lhs, rhs, rec.lam)
            if (n - k) % 2 == 0:
                rec.stated(ok, n, k, xs, lhs, rhs)
            else:
                rec.off(ok, n, k)
    return _report(
        config,
        "L1",
        "central incomplete Bell equals the classical incomplete Bell "
        "polynomial at kernel-weighted arguments",
        1,
        rec,
        obs_label="odd n-k pairs",
    )


T2_LAMBDA_SAMPLES: tuple[Fraction, ...] = (
    Fraction(1, 2),
    Fraction(-1, 3),
    Fraction(3),
)


def _stirling_expansion(n: int, k: int, x: Fraction) -> LambdaPoly:
    """Explicit expansion: alternating binomial power sums against Stirling
    numbers of the first kind, graded by powers of the parameter."""
    total = LambdaPoly.zero()
    kf = numbers.factorial(k)
    half_k = Fraction(k, 2)
    xn = x**n
    for m in range(n + 1):
        inner = Fraction(0)
        for l in range(k + 1):
            inner += (
                numbers.binomial(k, l)
                * Fraction((-1) ** (k - l))
                * (l - half_k) ** m
            )
        coef = xn * inner / kf * numbers.stirling1(n, m)
        if coef:
            total = total + LambdaPoly.monomial(coef, n - m)
    return total


def check_stirling_expansion(config: SuiteConfig) -> IdentityReport:
    """The Stirling expansion matches central incomplete at power arguments
    for ``n >= k`` and is identically zero for ``n < k`` (stated for even
    ``n - k``).  Verified symbolically and at a few nonzero rational values
    of the parameter."""
    rng = _rng_for(config, "T2")
    lam = config.lambda_value()
    samples = T2_LAMBDA_SAMPLES
    if lam is not None and lam not in samples:
        samples = samples + (lam,)
    rec = _Recorder(lam)
    for n in range(config.n_max + 1):
        for k in range(config.n_max + 1):
            for _ in range(2):
                x = _rand_rational(rng)
                lhs = _stirling_expansion(n, k, x)
                if k <= n:
                    powers = tuple(x**m for m in range(1, n - k + 2))
                    rhs = bell.central_incomplete(n, k, powers)
                else:
                    rhs = LambdaPoly.zero()
                ok = _equal(lhs, rhs, lam) and all(
                    lhs.eval(s) == rhs.eval(s) for s in samples
                )
                if (n - k) % 2 == 0:
                    rec.stated(ok, n, k, (x,), lhs, rhs)
                else:
                    rec.off(ok, n, k)
    return _report(
        config,
        "T2",
        "the first-kind Stirling expansion reproduces central incomplete "
        "Bell values at geometric arguments and vanishes for n < k",
        2,
        rec,
        obs_label="odd n-k pairs",
    )


def check_all_ones_central(config: SuiteConfig) -> IdentityReport:
    """All-ones central incomplete values are the central factorial numbers
    (both routes), and geometric arguments scale them by ``x**n`` (stated
    for even ``n - k``)."""
    rng = _rng_for(config, "C3")
    rec = _Recorder(config.lambda_value())
    for n in range(config.n_max + 1):
        for k in range(n + 1):
            ones_val = bell.central_incomplete(n, k, all_ones(n - k + 1))
            kernel_route = numbers.central_factorial2(n, k)
            stirling_route = numbers.central_factorial2_from_stirling1(n, k)
            ok = _equal(ones_val, kernel_route, rec.lam) and _equal(
                ones_val, stirling_route, rec.lam
            )
            for _ in range(3):
                x = _rand_rational(rng)
                powers = tuple(x**m for m in range(1, n - k + 2))
                scaled = bell.central_incomplete(n, k, powers)
                ok = ok and _equal(scaled, ones_val * x**n, rec.lam)
            if (n - k) % 2 == 0:
                rec.stated(ok, n, k, None, ones_val, kernel_route)
            else:
                rec.off(ok, n, k)
    return _report(
        config,
        "C3",
        "all-ones central incomplete Bell values equal the degenerate "
        "central factorial numbers and scale geometrically",
        3,
        rec,
        obs_label="odd n-k pairs",
    )


def check_zero_tail(config: SuiteConfig) -> IdentityReport:
    """With every argument after the first set to zero, central incomplete
    collapses to ``x**k`` on the diagonal and to zero above it."""
    rng = _rng_for(config, "Z0")
    rec = _Recorder(config.lambda_value())
    for n in range(config.n_max + 1):
        for k in range(n + 1):
            x = _rand_rational(rng)
            xs = (x,) + (Fraction(0),) * (n - k)
            lhs = bell.central_incomplete(n, k, xs)
            rhs = (
                LambdaPoly.const(x**k) if n == k else LambdaPoly.zero()
            )
            ok = _equal(lhs, rhs, rec.lam)
            if (n - k) % 2 == 0:
                rec.stated(ok, n, k, xs, lhs, rhs)
            else:
                rec.off(ok, n, k)
    return _report(
        config,
        "Z0",
        "zero-tail arguments collapse central incomplete Bell values to "
        "x^k on the diagonal and zero elsewhere",
        1,
        rec,
        obs_label="odd n-k pairs",
    )


def check_homogeneity_linear(config: SuiteConfig) -> IdentityReport:
    """Scaling every argument by ``a`` multiplies incomplete values by
    ``a**k``; equal arguments collapse to ``x**k`` times the all-ones value.
    The degenerate family is stated for all pairs, the central family for
    even ``n - k``."""
    rng = _rng_for(config, "H1")
    rec = _Recorder(config.lambda_value())
    for n in range(config.n_max + 1):
        for k in range(n + 1):
            length = n - k + 1
            xs = _rand_vector(rng, length)
            alpha = _rand_rational(rng)
            x = _rand_rational(rng)
            scaled = tuple(alpha * v for v in xs)

            deg_base = bell.incomplete_bell_degenerate(n, k, xs)
            deg_scaled = bell.incomplete_bell_degenerate(n, k, scaled)
            ok_deg = _equal(deg_scaled, deg_base * alpha**k, rec.lam)

            cen_base = bell.central_incomplete(n, k, xs)
            cen_scaled = bell.central_incomplete(n, k, scaled)
            diag = bell.central_incomplete(n, k, (x,) * length)
            ones_val = bell.central_incomplete(n, k, all_ones(length))
            ok_cen = _equal(cen_scaled, cen_base * alpha**k, rec.lam) and _equal(
                diag, ones_val * x**k, rec.lam
            )

            if (n - k) % 2 == 0:
                rec.stated(
                    ok_deg and ok_cen, n, k, xs, cen_scaled, cen_base * alpha**k
                )
            else:
                rec.stated(ok_deg, n, k, xs, deg_scaled, deg_base * alpha**k)
                rec.off(ok_cen, n, k)
    return _report(
        config,
        "H1",
        "argument scaling multiplies incomplete Bell values by a^k and "
        "equal arguments collapse to x^k times the all-ones value",
        1,
        rec,
        obs_label="odd n-k pairs (central family)",
    )


def check_homogeneity_graded(config: SuiteConfig) -> IdentityReport:
    """Replacing the j-th argument by ``a**j`` times itself multiplies
    degenerate incomplete values by ``a**n``.  The central analogue is not
    part of the statement and is recorded as an observation."""
    rng = _rng_for(config, "H2")
    rec = _Recorder(config.lambda_value())
    for n in range(config.n_max + 1):
        for k in range(n + 1):
            xs = _rand_vector(rng, n - k + 1)
            alpha = _rand_rational(rng)
            graded = tuple(alpha**j * v for j, v in enumerate(xs, start=1))

            deg_base = bell.incomplete_bell_degenerate(n, k, xs)
            deg_graded = bell.incomplete_bell_degenerate(n, k, graded)
            rec.stated(
                _equal(deg_graded, deg_base * alpha**n, rec.lam),
                n,
                k,
                xs,
                deg_graded,
                deg_base * alpha**n,
            )

            cen_base = bell.central_incomplete(n, k, xs)
            cen_graded = bell.central_incomplete(n, k, graded)
            rec.off(_equal(cen_graded, cen_base * alpha**n, rec.lam), n, k)
    return _report(
        config,
        "H2",
        "graded argument scaling multiplies degenerate incomplete Bell "
        "values by a^n",
        1,
        rec,
        obs_label="central-family graded scaling (unstated)",
    )


def check_degenerate_all_ones(config: SuiteConfig) -> IdentityReport:
    """All-ones degenerate incomplete Bell values are the degenerate
    Stirling numbers of the second kind."""
    rec = _Recorder(config.lambda_value())
    for n in range(config.n_max + 1):
        for k in range(n + 1):
            lhs = bell.incomplete_bell_degenerate(n, k, all_ones(n - k + 1))
            rhs = numbers.degen_stirling2(n, k)
            rec.stated(_equal(lhs, rhs, rec.lam), n, k, None, lhs, rhs)
    return _report(
        config,
        "E9",
        "all-ones degenerate incomplete Bell values equal the degenerate "
        "Stirling numbers of the second kind",
        0,
        rec,
    )


def check_complete_sum(config: SuiteConfig) -> IdentityReport:
    """The degenerate complete Bell polynomial is the sum of the incomplete
    ones."""
    rng = _rng_for(config, "E11")
    rec = _Recorder(config.lambda_value())
    for n in range(config.n_max + 1):
        xs = _rand_vector(rng, n)
        lhs = bell.complete_bell_degenerate(n, xs)
        rhs = bell.complete_bell_degenerate_sum(n, xs)
        rec.stated(_equal(lhs, rhs, rec.lam), n, None, xs, lhs, rhs)
    return _report(
        config,
        "E11",
        "the degenerate complete Bell polynomial is the sum of the "
        "incomplete ones",
        1,
        rec,
    )


def check_bell_collapse(config: SuiteConfig) -> IdentityReport:
    """Equal arguments collapse the degenerate complete Bell polynomial to
    the one-variable degenerate Bell polynomial, by explicit Stirling sums
    and by the generating function."""
    rng = _rng_for(config, "E12")
    rec = _Recorder(config.lambda_value())
    for n in range(config.n_max + 1):
        for _ in range(2):
            x = _rand_rational(rng)
            collapsed = bell.complete_bell_degenerate(n, (x,) * n)
            stirling_sum = bell.degenerate_bell_poly(n, x)
            gf = bell.degenerate_bell_poly_gf(n, x)
            ok = _equal(collapsed, stirling_sum, rec.lam) and _equal(
                collapsed, gf, rec.lam
            )
            rec.stated(ok, n, None, (x,), collapsed, stirling_sum)
    return _report(
        config,
        "E12",
        "equal arguments collapse the degenerate complete Bell polynomial "
        "to the degenerate Bell polynomial",
        2,
        rec,
    )


def check_complete_partition(config: SuiteConfig) -> IdentityReport:
    """The central complete Bell polynomial equals its single partition sum
    over all profiles (stated for odd ``n``; even outcomes recorded)."""
    rng = _rng_for(config, "T4")
    rec = _Recorder(config.lambda_value())
    for n in range(config.n_max + 1):
        xs = _rand_vector(rng, n)
        lhs = bell.central_complete(n, xs)
        rhs = bell.central_complete_partition(n, xs)
        ok = _equal(lhs, rhs, rec.lam)
        if n % 2 == 1:
            rec.stated(ok, n, None, xs, lhs, rhs)
        else:
            rec.off(ok, n, None)
    return _report(
        config,
        "T4",
        "the central complete Bell polynomial equals its partition-profile "
        "expansion",
        1,
        rec,
        obs_label="even-n values",
    )


def check_power_weighted_sum(config: SuiteConfig) -> IdentityReport:
    """Power-weighted all-ones central incomplete values sum to the
    degenerate central Bell polynomial."""
    rng = _rng_for(config, "T5")
    rec = _Recorder(config.lambda_value())
    for n in range(config.n_max + 1):
        ones_values = [
            bell.central_incomplete(n, k, all_ones(n - k + 1))
            for k in range(n + 1)
        ]
        for _ in range(3):
            x = _rand_rational(rng)
            lhs = LambdaPoly.zero()
            for k, val in enumerate(ones_values):
                lhs = lhs + val * x**k
            rhs = bell.degenerate_central_bell(n, x)
            rec.stated(_equal(lhs, rhs, rec.lam), n, None, (x,), lhs, rhs)
    return _report(
        config,
        "T5",
        "power-weighted all-ones central incomplete Bell values sum to the "
        "degenerate central Bell polynomial",
        3,
        rec,
    )


def check_central_collapse(config: SuiteConfig) -> IdentityReport:
    """Equal arguments collapse the central complete Bell polynomial to the
    degenerate central Bell polynomial, through the exponential route and
    through the sum over the incomplete ones."""
    rng = _rng_for(config, "C6")
    rec = _Recorder(config.lambda_value())
    for n in range(config.n_max + 1):
        for _ in range(3):
            x = _rand_rational(rng)
            exp_route = bell.central_complete(n, (x,) * n)
            sum_route = bell.central_complete_sum(n, (x,) * n)
            central_bell = bell.degenerate_central_bell(n, x)
            ok = _equal(exp_route, central_bell, rec.lam) and _equal(
                sum_route, central_bell, rec.lam
            )
            rec.stated(ok, n, None, (x,), exp_route, central_bell)
    return _report(
        config,
        "C6",
        "equal arguments collapse the central complete Bell polynomial to "
        "the degenerate central Bell polynomial",
        3,
        rec,
    )


def check_dual_routes(config: SuiteConfig) -> IdentityReport:
    """Every family with two independent computation routes agrees across
    them on the whole grid."""
    rng = _rng_for(config, "D0")
    rec = _Recorder(config.lambda_value())
    for n in range(config.n_max + 1):
        for k in range(n + 1):
            s1_gf = LambdaPoly.const(numbers.stirling1(n, k))
            s1_rec = LambdaPoly.const(numbers.stirling1_recurrence(n, k))
            cf_kernel = numbers.central_factorial2(n, k)
            cf_stirling = numbers.central_factorial2_from_stirling1(n, k)
            xs = _rand_vector(rng, n - k + 1)
            deg_gf = bell.incomplete_bell_degenerate(n, k, xs)
            deg_part = bell.incomplete_bell_degenerate_partition(n, k, xs)
            cen_gf = bell.central_incomplete(n, k, xs)
            cen_part = bell.central_incomplete_partition(n, k, xs)
            ok = (
                _equal(s1_gf, s1_rec, rec.lam)
                and _equal(cf_kernel, cf_stirling, rec.lam)
                and _equal(deg_gf, deg_part, rec.lam)
                and _equal(cen_gf, cen_part, rec.lam)
            )
            rec.stated(ok, n, k, xs, cen_gf, cen_part)
    complete_ok = True
    for n in range(config.n_max + 1):
        xs = _rand_vector(rng, n)
        x = _rand_rational(rng)
        route_pairs = (
            (
                bell.complete_bell_degenerate(n, xs),
                bell.complete_bell_degenerate_sum(n, xs),
                xs,
            ),
            (
                bell.central_complete(n, xs),
                bell.central_complete_sum(n, xs),
                xs,
            ),
            (
                bell.central_complete(n, xs),
                bell.central_complete_partition(n, xs),
                xs,
            ),
            (
                bell.degenerate_bell_poly(n, x),
                bell.degenerate_bell_poly_gf(n, x),
                (x,),
            ),
            (
                bell.degenerate_central_bell(n, x),
                bell.degenerate_central_bell_gf(n, x),
                (x,),
            ),
        )
        for lhs, rhs, args in route_pairs:
            if not _equal(lhs, rhs, rec.lam):
                complete_ok = False
                rec.stated(False, n, None, tuple(args), lhs, rhs)
                break
        if not complete_ok:
            break
    extra = ("complete-family routes agree" if complete_ok else
             "complete-family routes disagree",)
    return _report(
        config,
        "D0",
        "all dual-route families agree across their independent "
        "computation routes",
        1,
        rec,
        extra_obs=extra,
    )


# ---------------------------------------------------------------------------
# Suite runner
# ---------------------------------------------------------------------------

CheckFn = Callable[[SuiteConfig], IdentityReport]

CHECKS: tuple[tuple[str, CheckFn], ...] = (
    ("L1", check_kernel_weighted_classical),
    ("T2", check_stirling_expansion),
    ("C3", check_all_ones_central),
    ("Z0", check_zero_tail),
    ("H1", check_homogeneity_linear),
    ("H2", check_homogeneity_graded),
    ("E9", check_degenerate_all_ones),
    ("E11", check_complete_sum),
    ("E12", check_bell_collapse),
    ("T4", check_complete_partition),
    ("T5", check_power_weighted_sum),
    ("C6", check_central_collapse),
    ("D0", check_dual_routes),
)


def run_suite(config: SuiteConfig | None = None) -> list[IdentityReport]:
    """Run every registered check and return their reports in registry
    order.  Identical configurations produce identical reports."""
    config = config or SuiteConfig()
    if config.n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if config.lambda_mode != "sym":
        parse_rational(config.lambda_mode)
    return [fn(config) for _, fn in CHECKS]
