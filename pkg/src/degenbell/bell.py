"""Partition-indexed polynomial families: classical, degenerate, and central
incomplete/complete Bell polynomials.

Each family is computable by at least two independent routes: a truncated
generating-function route (series exponentials and powers) and a direct
partition-profile sum.  Both are public; the identity suite and the tests
require exact agreement.

A profile for the pair ``(n, k)`` is a tuple ``(i_1, .., i_{n-k+1})`` with
``sum(i_j) == k`` and ``sum(j * i_j) == n``: the multiplicities of the part
sizes in a partition of ``n`` into exactly ``k`` parts.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from . import numbers
from .caching import cached
from .numbers import factorial
from .ring import LambdaPoly, Scalar
from .series import Series, default_order

ArgVector = Sequence[Scalar]
Weight = Union[LambdaPoly, Fraction]


@cached
def partition_profiles(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All part-multiplicity profiles for ``(n, k)``, in ascending
    lexicographic order."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got (n={n}, k={k})")
    length = n - k + 1
    out: list[tuple[int, ...]] = []
    profile = [0] * length

    def rec(j: int, count: int, weight: int) -> None:
        if j == length:
            if j * count == weight:
                profile[j - 1] = count
                out.append(tuple(profile))
                profile[j - 1] = 0
            return
        for i in range(min(count, weight // j) + 1):
            c2 = count - i
            w2 = weight - j * i
            if w2 < (j + 1) * c2 or w2 > length * c2:
                continue
            profile[j - 1] = i
            rec(j + 1, c2, w2)
        profile[j - 1] = 0

    rec(1, k, n)
    return tuple(out)


@cached
def _unrestricted_profiles(n: int) -> tuple[tuple[int, ...], ...]:
    """Profiles ``(m_1, .., m_n)`` with ``sum(j * m_j) == n``; the part count
    is left free.  Used by the partition route of the complete families."""
    out: list[tuple[int, ...]] = []
    profile = [0] * n

    def rec(j: int, weight: int) -> None:
        if j == n + 1:
            if weight == 0:
                out.append(tuple(profile))
            return
        for i in range(weight // j + 1):
            profile[j - 1] = i
            rec(j + 1, weight - j * i)
        profile[j - 1] = 0

    rec(1, n)
    return tuple(out)


def _profile_term_scalar(n: int, profile: tuple[int, ...]) -> Fraction:
    """The multinomial factor ``n! / prod(i_j! * (j!)^i_j)`` of one profile."""
    denom = 1
    for j, i in enumerate(profile, start=1):
        if i:
            denom *= factorial(i) * factorial(j) ** i
    return Fraction(factorial(n), denom)


def _profile_sum(n: int, profiles, weights: Sequence[Weight], zero: Weight):
    total = zero
    for profile in profiles:
        term: Weight = _profile_term_scalar(n, profile)
        for j, i in enumerate(profile, start=1):
            if i:
                term = term * weights[j - 1] ** i
        total = total + term
    return total


def _check_shape(n: int, k: int, xs: ArgVector) -> None:
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got (n={n}, k={k})")
    expected = n - k + 1
    if len(xs) != expected:
        raise ValueError(
            f"argument vector must have {expected} entries for (n={n}, k={k}), "
            f"got {len(xs)}"
        )


def _weighted_egf(weights: tuple[LambdaPoly, ...], order: int) -> Series:
    return Series.from_egf((LambdaPoly.zero(),) + weights, order)


@cached
def _weighted_egf_pow(weights: tuple[LambdaPoly, ...], k: int, order: int) -> Series:
    if k == 0:
        return Series.one(order)
    return _weighted_egf_pow(weights, k - 1, order) * _weighted_egf(weights, order)


def _gf_incomplete(n: int, k: int, weights: tuple[LambdaPoly, ...]) -> LambdaPoly:
    order = default_order(n)
    coeff = _weighted_egf_pow(weights, k, order).egf_coeff(n)
    return coeff * Fraction(1, factorial(k))


def _gf_complete(n: int, weights: tuple[LambdaPoly, ...]) -> LambdaPoly:
    order = default_order(n)
    return _weighted_egf(weights, order).exp().egf_coeff(n)


def _degenerate_weights(xs: ArgVector) -> tuple[LambdaPoly, ...]:
    return tuple(
        numbers.degen_falling(Fraction(1), m) * Fraction(x)
        for m, x in enumerate(xs, start=1)
    )


def _central_weights(xs: ArgVector) -> tuple[LambdaPoly, ...]:
    return tuple(
        numbers.central_coeff(m) * Fraction(x) for m, x in enumerate(xs, start=1)
    )


# ---------------------------------------------------------------------------
# Classical incomplete Bell polynomials (partition route only)
# ---------------------------------------------------------------------------


def incomplete_bell_classical(n: int, k: int, xs: ArgVector) -> Fraction:
    """Classical incomplete Bell polynomial at rational arguments."""
    _check_shape(n, k, xs)
    weights = [Fraction(x) for x in xs]
    return _profile_sum(n, partition_profiles(n, k), weights, Fraction(0))


def incomplete_bell_classical_poly(
    n: int, k: int, ws: Sequence[LambdaPoly]
) -> LambdaPoly:
    """Classical incomplete Bell partition sum with polynomial arguments.

    The same multinomial sum as ``incomplete_bell_classical``; the argument
    slots simply hold ring elements instead of rationals.
    """
    _check_shape(n, k, ws)
    return _profile_sum(n, partition_profiles(n, k), list(ws), LambdaPoly.zero())


# ---------------------------------------------------------------------------
# Degenerate incomplete / complete Bell polynomials
# ---------------------------------------------------------------------------


def incomplete_bell_degenerate(n: int, k: int, xs: ArgVector) -> LambdaPoly:
    """Degenerate incomplete Bell polynomial (generating-function route).

    The m-th argument slot is weighted by the falling factorial of 1 of
    length m in the deformation parameter.
    """
    _check_shape(n, k, xs)
    return _gf_incomplete(n, k, _degenerate_weights(xs))


def incomplete_bell_degenerate_partition(n: int, k: int, xs: ArgVector) -> LambdaPoly:
    """Degenerate incomplete Bell polynomial (partition-profile route)."""
    _check_shape(n, k, xs)
    weights = _degenerate_weights(xs)
    return _profile_sum(n, partition_profiles(n, k), weights, LambdaPoly.zero())


def complete_bell_degenerate(n: int, xs: ArgVector) -> LambdaPoly:
    """Degenerate complete Bell polynomial (exponential route)."""
    _check_complete_shape(n, xs)
    return _gf_complete(n, _degenerate_weights(xs))


def complete_bell_degenerate_sum(n: int, xs: ArgVector) -> LambdaPoly:
    """Degenerate complete Bell polynomial as the sum of the incomplete ones."""
    _check_complete_shape(n, xs)
    if n == 0:
        return LambdaPoly.one()
    total = LambdaPoly.zero()
    for k in range(1, n + 1):
        total = total + incomplete_bell_degenerate(n, k, xs[: n - k + 1])
    return total


def degenerate_bell_poly(n: int, x: Scalar) -> LambdaPoly:
    """Degenerate Bell polynomial: powers of x against the degenerate
    Stirling numbers of the second kind."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    xf = Fraction(x)
    total = LambdaPoly.zero()
    for k in range(n + 1):
        total = total + numbers.degen_stirling2(n, k) * xf**k
    return total


def degenerate_bell_poly_gf(n: int, x: Scalar) -> LambdaPoly:
    """Degenerate Bell polynomial read off the exponential generating function."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    order = default_order(n)
    base = numbers.degen_exp_series(Fraction(1), order) - Series.one(order)
    return (base * Fraction(x)).exp().egf_coeff(n)


# ---------------------------------------------------------------------------
# Central incomplete / complete Bell polynomials
# ---------------------------------------------------------------------------


def central_incomplete(n: int, k: int, xs: ArgVector) -> LambdaPoly:
    """Degenerate central incomplete Bell polynomial (generating-function
    route).  The m-th argument slot carries the central kernel weight."""
    _check_shape(n, k, xs)
    return _gf_incomplete(n, k, _central_weights(xs))


def central_incomplete_partition(n: int, k: int, xs: ArgVector) -> LambdaPoly:
    """Degenerate central incomplete Bell polynomial (partition route)."""
    _check_shape(n, k, xs)
    weights = _central_weights(xs)
    return _profile_sum(n, partition_profiles(n, k), weights, LambdaPoly.zero())


def central_complete(n: int, xs: ArgVector) -> LambdaPoly:
    """Degenerate central complete Bell polynomial (exponential route)."""
    _check_complete_shape(n, xs)
    return _gf_complete(n, _central_weights(xs))


def central_complete_sum(n: int, xs: ArgVector) -> LambdaPoly:
    """Central complete Bell polynomial as the sum over the incomplete ones."""
    _check_complete_shape(n, xs)
    if n == 0:
        return LambdaPoly.one()
    total = LambdaPoly.zero()
    for k in range(1, n + 1):
        total = total + central_incomplete(n, k, xs[: n - k + 1])
    return total


def central_complete_partition(n: int, xs: ArgVector) -> LambdaPoly:
    """Central complete Bell polynomial as one sum over all partition
    profiles of ``n``, the part count unconstrained."""
    _check_complete_shape(n, xs)
    weights = _central_weights(xs)
    return _profile_sum(n, _unrestricted_profiles(n), weights, LambdaPoly.zero())


def degenerate_central_bell(n: int, x: Scalar) -> LambdaPoly:
    """Degenerate central Bell polynomial: powers of x against the central
    factorial numbers of the second kind."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    xf = Fraction(x)
    total = LambdaPoly.zero()
    for k in range(n + 1):
        total = total + numbers.central_factorial2(n, k) * xf**k
    return total


def degenerate_central_bell_gf(n: int, x: Scalar) -> LambdaPoly:
    """Degenerate central Bell polynomial read off its exponential
    generating function (exp of x times the central kernel)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    order = default_order(n)
    kernel = numbers.degen_exp_series(
        numbers.HALF, order
    ) - numbers.degen_exp_series(-numbers.HALF, order)
    return (kernel * Fraction(x)).exp().egf_coeff(n)


def _check_complete_shape(n: int, xs: ArgVector) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if len(xs) != n:
        raise ValueError(
            f"argument vector must have {n} entries for n={n}, got {len(xs)}"
        )


def all_ones(length: int) -> tuple[Fraction, ...]:
    """Convenience all-ones argument vector."""
    return (Fraction(1),) * length
