"""Compute every dual-route family both ways and show the routes agree.

Each block picks a small grid and a fixed argument vector, evaluates the
family through its generating-function route and through its independent
partition or recurrence route, and prints both values side by side.
"""

from fractions import Fraction

from degenbell import (
    central_complete,
    central_complete_partition,
    central_factorial2,
    central_factorial2_from_stirling1,
    central_incomplete,
    central_incomplete_partition,
    degenerate_central_bell,
    degenerate_central_bell_gf,
    incomplete_bell_degenerate,
    incomplete_bell_degenerate_partition,
    stirling1,
    stirling1_recurrence,
)
from degenbell.ring import poly_to_plain

F = Fraction


def show(label: str, left, right) -> None:
    mark = "ok " if left == right else "DIFFER"
    if not isinstance(left, Fraction):
        left, right = poly_to_plain(left), poly_to_plain(right)
    print(f"  [{mark}] {label}: {left}  vs  {right}")


def main() -> None:
    print("Stirling numbers of the first kind: series route vs recurrence")
    for n in range(7):
        for k in range(n + 1):
            show(f"({n},{k})", stirling1(n, k), stirling1_recurrence(n, k))

    print("\nCentral factorial numbers: kernel power route vs Stirling expansion")
    for n in range(6):
        for k in range(n + 1):
            show(
                f"({n},{k})",
                central_factorial2(n, k),
                central_factorial2_from_stirling1(n, k),
            )

    xs = (F(1), F(-1, 2), F(2), F(1, 3), F(-3))
    print("\nIncomplete Bell polynomials at xs =", [str(x) for x in xs])
    for n in range(5):
        for k in range(n + 1):
            head = xs[: n - k + 1]
            show(
                f"degenerate ({n},{k})",
                incomplete_bell_degenerate(n, k, head),
                incomplete_bell_degenerate_partition(n, k, head),
            )
            show(
                f"central    ({n},{k})",
                central_incomplete(n, k, head),
                central_incomplete_partition(n, k, head),
            )

    print("\nCentral complete Bell polynomial: exponential vs partition sum")
    for n in range(5):
        show(
            f"n={n}",
            central_complete(n, xs[:n]),
            central_complete_partition(n, xs[:n]),
        )

    print("\nCentral Bell polynomial at x = 3/2: coefficient sum vs exp route")
    for n in range(6):
        show(
            f"n={n}",
            degenerate_central_bell(n, F(3, 2)),
            degenerate_central_bell_gf(n, F(3, 2)),
        )


if __name__ == "__main__":
    main()
