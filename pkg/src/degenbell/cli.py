"""Command line interface.

Three subcommands: ``eval`` computes one family value, ``table`` emits a
triangle of values for the scalar-indexed families, and ``verify`` runs the
identity suite and writes its JSON report.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
Text output renders the deformation parameter as ``L``; JSON output carries
polynomial values as ascending coefficient-string arrays so consumers never
parse rendered polynomials.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import bell, numbers
from .identities import SuiteConfig, reports_to_json, run_suite
from .ring import (
    LambdaPoly,
    parse_rational,
    poly_to_coeff_strings,
    poly_to_plain,
)


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Family:
    name: str
    needs_k: bool
    xs_shape: str  # "none", "single", "incomplete", "complete"
    compute: Callable


def _eval_stirling1(n, k, xs):
    return LambdaPoly.const(numbers.stirling1(n, k))


def _eval_stirling2_deg(n, k, xs):
    return numbers.degen_stirling2(n, k)


def _eval_central_factorial2(n, k, xs):
    return numbers.central_factorial2(n, k)


def _eval_bell_deg(n, k, xs):
    return bell.degenerate_bell_poly(n, xs[0])


def _eval_bell_central_deg(n, k, xs):
    return bell.degenerate_central_bell(n, xs[0])


def _eval_incomplete(n, k, xs):
    return LambdaPoly.const(bell.incomplete_bell_classical(n, k, xs))


FAMILIES: dict[str, Family] = {
    f.name: f
    for f in (
        Family("stirling1", True, "none", _eval_stirling1),
        Family("stirling2-deg", True, "none", _eval_stirling2_deg),
        Family("central-factorial2", True, "none", _eval_central_factorial2),
        Family("bell-deg", False, "single", _eval_bell_deg),
        Family("bell-central-deg", False, "single", _eval_bell_central_deg),
        Family("incomplete", True, "incomplete", _eval_incomplete),
        Family(
            "incomplete-deg", True, "incomplete", bell.incomplete_bell_degenerate
        ),
        Family(
            "central-incomplete", True, "incomplete", bell.central_incomplete
        ),
        Family(
            "complete-deg",
            False,
            "complete",
            lambda n, k, xs: bell.complete_bell_degenerate(n, xs),
        ),
        Family(
            "central-complete",
            False,
            "complete",
            lambda n, k, xs: bell.central_complete(n, xs),
        ),
    )
}

TABLE_FAMILIES = ("stirling1", "stirling2-deg", "central-factorial2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degenbell",
        description="Exact degenerate and central Bell polynomial computations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one family value")
    ev.add_argument("family", choices=sorted(FAMILIES))
    ev.add_argument("--n", type=int, required=True)
    ev.add_argument("--k", type=int, default=None)
    ev.add_argument("--xs", default=None, help="comma-separated rationals")
    ev.add_argument("--lambda", dest="lam", default="sym")
    ev.add_argument(
        "--format", choices=("plain", "csv", "json"), default="plain"
    )
    ev.add_argument("--out", default=None)

    tb = sub.add_parser("table", help="emit a triangle of values")
    tb.add_argument("family", choices=sorted(TABLE_FAMILIES))
    tb.add_argument("--n-max", type=int, required=True)
    tb.add_argument("--lambda", dest="lam", default="sym")
    tb.add_argument(
        "--format", choices=("plain", "csv", "json"), default="plain"
    )
    tb.add_argument("--out", default=None)

    vf = sub.add_parser("verify", help="run the identity suite")
    vf.add_argument("--n-max", type=int, default=8)
    vf.add_argument("--seed", type=int, default=1)
    vf.add_argument("--lambda", dest="lam", default="sym")
    vf.add_argument("--out", default=None)

    return parser


def _parse_lambda(text: str) -> Fraction | None:
    if text == "sym":
        return None
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_xs(text: str | None) -> tuple[Fraction, ...] | None:
    if text is None:
        return None
    try:
        return tuple(parse_rational(part) for part in text.split(","))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _render_value(
    value: LambdaPoly, lam: Fraction | None, fmt: str
) -> str | list[str]:
    """Render one value: evaluated rational under a numeric parameter,
    otherwise the polynomial (JSON gets the coefficient array)."""
    if lam is not None:
        return str(value.eval(lam))
    if fmt == "json":
        return poly_to_coeff_strings(value)
    return poly_to_plain(value)


def run_eval(args: argparse.Namespace) -> str:
    family = FAMILIES[args.family]
    lam = _parse_lambda(args.lam)
    xs = _parse_xs(args.xs)
    n, k = args.n, args.k

    if n < 0:
        raise UsageError("--n must be nonnegative")
    if family.needs_k:
        if k is None:
            raise UsageError(f"family {family.name} requires --k")
    elif k is not None:
        raise UsageError(f"family {family.name} does not take --k")

    if family.xs_shape == "none":
        if xs is not None:
            raise UsageError(f"family {family.name} does not take --xs")
    else:
        if xs is None:
            raise UsageError(f"family {family.name} requires --xs")
        expected = {
            "single": 1,
            "incomplete": n - (k or 0) + 1,
            "complete": n,
        }[family.xs_shape]
        if len(xs) != expected:
            raise UsageError(
                f"family {family.name} expects {expected} --xs entries for "
                f"n={n}" + (f", k={k}" if family.needs_k else "") + f"; got {len(xs)}"
            )

    try:
        value = family.compute(n, k, xs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    rendered = _render_value(value, lam, args.format)
    if args.format == "json":
        payload: dict = {"family": family.name, "n": n}
        if k is not None:
            payload["k"] = k
        if xs is not None:
            payload["xs"] = [str(x) for x in xs]
        payload["lambda"] = args.lam
        payload["value"] = rendered
        return json.dumps(payload, indent=2) + "\n"
    if args.format == "csv":
        k_cell = "" if k is None else str(k)
        return f"n,k,value\n{n},{k_cell},{rendered}\n"
    return f"{rendered}\n"


def run_table(args: argparse.Namespace) -> str:
    family = FAMILIES[args.family]
    lam = _parse_lambda(args.lam)
    if args.n_max < 0:
        raise UsageError("--n-max must be nonnegative")

    rows = []
    for n in range(args.n_max + 1):
        for k in range(n + 1):
            value = family.compute(n, k, None)
            rows.append((n, k, _render_value(value, lam, args.format)))

    if args.format == "json":
        payload = {
            "family": family.name,
            "lambda": args.lam,
            "rows": [{"n": n, "k": k, "value": v} for n, k, v in rows],
        }
        return json.dumps(payload, indent=2) + "\n"
    if args.format == "csv":
        lines = ["n,k,value"] + [f"{n},{k},{v}" for n, k, v in rows]
        return "\n".join(lines) + "\n"
    return "".join(f"{n} {k} {v}\n" for n, k, v in rows)


def run_verify(args: argparse.Namespace) -> int:
    if args.n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    if not 0 <= args.seed < 2**64:
        raise UsageError("--seed must fit in 64 bits")
    if args.lam != "sym":
        try:
            parse_rational(args.lam)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    config = SuiteConfig(n_max=args.n_max, lambda_mode=args.lam, seed=args.seed)
    reports = run_suite(config)
    _write_output(reports_to_json(reports), args.out)
    all_pass = True
    for report in reports:
        print(f"{report.check_id}: {report.status}", file=sys.stderr)
        all_pass = all_pass and report.status == "pass"
    return 0 if all_pass else 1


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "eval":
            text = run_eval(args)
        elif args.command == "table":
            text = run_table(args)
        else:
            return run_verify(args)
        _write_output(text, args.out)
    except UsageError as exc:
        print(f"degenbell: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"degenbell: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
