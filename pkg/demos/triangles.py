"""Print the three number triangles, symbolically and at parameter zero.

The symbolic column shows each entry as a polynomial in the deformation
parameter L; the last column evaluates it at L = 0, which recovers the
classical triangle entry.
"""

from degenbell import central_factorial2, degen_stirling2, stirling1
from degenbell.ring import LambdaPoly, poly_to_plain

N_MAX = 6

FAMILIES = [
    ("Stirling numbers of the first kind (signed)",
     lambda n, k: LambdaPoly.const(stirling1(n, k))),
    ("degenerate Stirling numbers of the second kind", degen_stirling2),
    ("degenerate central factorial numbers of the second kind",
     central_factorial2),
]


def main() -> None:
    for title, family in FAMILIES:
        print(title)
        print(f"{'n':>2} {'k':>2}  {'symbolic':<28} at L=0")
        for n in range(N_MAX + 1):
            for k in range(n + 1):
                value = family(n, k)
                print(f"{n:>2} {k:>2}  {poly_to_plain(value):<28} {value.eval(0)}")
        print()


if __name__ == "__main__":
    main()
