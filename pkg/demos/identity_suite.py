"""Run the identity suite and summarize its report.

Shows the per-check status, how many grid points each check visited, and any
observations recorded for behavior outside the stated scope of an identity.
"""

from degenbell.identities import SuiteConfig, run_suite

N_MAX = 8


def main() -> None:
    config = SuiteConfig(n_max=N_MAX, lambda_mode="sym", seed=1)
    reports = run_suite(config)

    print(f"identity suite: n_max={config.n_max}, lambda={config.lambda_mode}, "
          f"seed={config.seed}\n")
    width = max(len(r.description) for r in reports)
    for r in reports:
        print(f"{r.check_id:>3}  {r.status:<4} {r.pairs_visited:>3} points  "
              f"{r.description:<{width}}")
        for line in r.observations:
            print(f"{'':>12}note: {line}")
        if r.counterexample is not None:
            ce = r.counterexample
            print(f"{'':>12}counterexample at n={ce.n}, k={ce.k}: "
                  f"{ce.lhs} != {ce.rhs}")

    failed = [r.check_id for r in reports if r.status != "pass"]
    print(f"\n{'all checks pass' if not failed else 'FAILED: ' + ', '.join(failed)}")


if __name__ == "__main__":
    main()
