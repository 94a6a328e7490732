"""Scalar number families built on the deformation parameter.

Everything here is exact.  Results that depend on the deformation parameter
come back as ``LambdaPoly`` values; setting the parameter to zero recovers
the classical quantity.  Families with two independent computation routes
expose both, and the test suite insists the routes agree coefficient for
coefficient.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .caching import cached
from .ring import LambdaPoly, Scalar
from .series import Series, default_order

HALF = Fraction(1, 2)

factorial = math.factorial


@cached
def _pascal_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _pascal_row(n - 1)
    return (1,) + tuple(prev[i - 1] + prev[i] for i in range(1, n)) + (1,)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient by the Pascal recurrence; zero outside the row."""
    if n < 0:
        raise ValueError("binomial needs n >= 0")
    if k < 0 or k > n:
        return 0
    return _pascal_row(n)[k]


def degen_falling(x: Scalar, m: int) -> LambdaPoly:
    """Generalized falling factorial: the product of ``x - j*L`` for j < m.

    The empty product (m = 0) is 1.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    xf = Fraction(x)
    out = LambdaPoly.one()
    for j in range(m):
        out = out * LambdaPoly((xf, Fraction(-j)))
    return out


def degen_rising(x: Scalar, m: int) -> LambdaPoly:
    """Generalized rising factorial: the product of ``x + j*L`` for j < m."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    xf = Fraction(x)
    out = LambdaPoly.one()
    for j in range(m):
        out = out * LambdaPoly((xf, Fraction(j)))
    return out


def central_coeff(m: int) -> LambdaPoly:
    """Weight of the m-th central argument slot.

    Difference of the falling and signed rising half-point factorials; this
    is the coefficient of ``t^m / m!`` in the central kernel series.
    """
    return degen_falling(HALF, m) - degen_rising(HALF, m) * Fraction((-1) ** m)


@cached
def degen_exp_series(x: Scalar, order: int) -> Series:
    """Deformed exponential: coefficient of ``t^n`` is ``degen_falling(x, n)/n!``.

    Built coefficient-wise so the parameter stays polynomial; no logarithm or
    division by the parameter is involved, and setting it to zero is total.
    """
    return Series.from_egf(
        [degen_falling(x, n) for n in range(order + 1)], order
    )


# ---------------------------------------------------------------------------
# Stirling numbers of the first kind (signed)
# ---------------------------------------------------------------------------


@cached
def _log1p_t_pow(k: int, order: int) -> Series:
    if k == 0:
        return Series.one(order)
    return _log1p_t_pow(k - 1, order) * Series.t(order).log1p()


@cached
def stirling1(n: int, k: int) -> Fraction:
    """Signed Stirling number of the first kind, via the log generating function."""
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if k > n:
        return Fraction(0)
    order = default_order(n)
    coeff = _log1p_t_pow(k, order).egf_coeff(n)
    value = coeff.coeff(0) / factorial(k)
    return value


@cached
def stirling1_recurrence(n: int, k: int) -> Fraction:
    """Signed Stirling number of the first kind, by the triangle recurrence.

    Independent of the generating-function route; used as its cross-check.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if n == 0:
        return Fraction(1 if k == 0 else 0)
    if k == 0 or k > n:
        return Fraction(0)
    return stirling1_recurrence(n - 1, k - 1) - (n - 1) * stirling1_recurrence(n - 1, k)


# ---------------------------------------------------------------------------
# Degenerate Stirling numbers of the second kind
# ---------------------------------------------------------------------------


@cached
def _degen_exp_minus_one_pow(k: int, order: int) -> Series:
    if k == 0:
        return Series.one(order)
    base = degen_exp_series(Fraction(1), order) - Series.one(order)
    return _degen_exp_minus_one_pow(k - 1, order) * base


def degen_stirling2(n: int, k: int) -> LambdaPoly:
    """Degenerate Stirling number of the second kind, as a polynomial.

    Coefficient of ``t^n / n!`` in the k-th power of the deformed exponential
    minus one, divided by k!.  At parameter zero this is the classical
    Stirling number of the second kind.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if k > n:
        return LambdaPoly.zero()
    order = default_order(n)
    coeff = _degen_exp_minus_one_pow(k, order).egf_coeff(n)
    return coeff * Fraction(1, factorial(k))


@cached
def stirling2_classical(n: int, k: int) -> int:
    """Classical Stirling number of the second kind, by the triangle recurrence."""
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return k * stirling2_classical(n - 1, k) + stirling2_classical(n - 1, k - 1)


# ---------------------------------------------------------------------------
# Degenerate central factorial numbers of the second kind
# ---------------------------------------------------------------------------


@cached
def _central_kernel(order: int) -> Series:
    """Difference of the deformed exponentials at the half points.

    Deliberately built from ``degen_exp_series`` rather than from
    ``central_coeff`` so the two descriptions stay independent witnesses.
    """
    return degen_exp_series(HALF, order) - degen_exp_series(-HALF, order)


@cached
def _central_kernel_pow(k: int, order: int) -> Series:
    if k == 0:
        return Series.one(order)
    return _central_kernel_pow(k - 1, order) * _central_kernel(order)


def central_factorial2(n: int, k: int) -> LambdaPoly:
    """Degenerate central factorial number of the second kind (kernel route).

    Coefficient of ``t^n / n!`` in the k-th power of the central kernel
    series, divided by k!.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if k > n:
        return LambdaPoly.zero()
    order = default_order(n)
    coeff = _central_kernel_pow(k, order).egf_coeff(n)
    return coeff * Fraction(1, factorial(k))


def central_factorial2_from_stirling1(n: int, k: int) -> LambdaPoly:
    """Degenerate central factorial number (Stirling expansion route).

    Sum over m of the classical central factorial number of ``(m, k)`` times
    ``L^(n-m)`` times the signed Stirling number of the first kind of
    ``(n, m)``.  Fully independent of the kernel route; the suite requires
    exact agreement between the two.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    total = LambdaPoly.zero()
    kf = factorial(k)
    half_k = Fraction(k, 2)
    for m in range(n + 1):
        inner = Fraction(0)
        for l in range(k + 1):
            inner += binomial(k, l) * Fraction((-1) ** (k - l)) * (l - half_k) ** m
        coef = inner / kf * stirling1(n, m)
        if coef:
            total = total + LambdaPoly.monomial(coef, n - m)
    return total
