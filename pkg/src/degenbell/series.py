"""Truncated formal power series in ``t`` over the polynomial scalar ring.

A ``Series`` stores coefficients of ``t^0 .. t^order`` as ``LambdaPoly``
values.  Arithmetic truncates: the result of a binary operation carries the
smaller of the two operand orders, and every retained coefficient is exact.
Exponential generating function coefficients are read with ``egf_coeff``,
which multiplies by the factorial.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

from .ring import LambdaPoly, Scalar

SeriesScalar = Union[LambdaPoly, Fraction, int]


def default_order(n_max: int) -> int:
    """Truncation order used when coefficients up to ``n_max`` are needed.

    The margin above ``n_max`` guards against off-by-one slips in powering.
    """
    return 2 * n_max + 2


class Series:
    """Power series truncated at a fixed order, with exact coefficients."""

    __slots__ = ("order", "coeffs")

    order: int
    coeffs: tuple[LambdaPoly, ...]

    def __init__(self, coeffs: Iterable[SeriesScalar], order: int) -> None:
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = [_as_poly(c) for c in coeffs][: order + 1]
        cs.extend([LambdaPoly.zero()] * (order + 1 - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Series is immutable")

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> Series:
        return cls((LambdaPoly.one(),), order)

    @classmethod
    def t(cls, order: int) -> Series:
        return cls((LambdaPoly.zero(), LambdaPoly.one()), order)

    @classmethod
    def from_egf(cls, values: Iterable[SeriesScalar], order: int) -> Series:
        """Series whose coefficient of ``t^n / n!`` is ``values[n]``."""
        coeffs = [
            _as_poly(v) * Fraction(1, math.factorial(n))
            for n, v in enumerate(values)
        ]
        return cls(coeffs, order)

    def coeff(self, n: int) -> LambdaPoly:
        """Coefficient of ``t^n``."""
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient index {n} outside order {self.order}")
        return self.coeffs[n]

    def egf_coeff(self, n: int) -> LambdaPoly:
        """Coefficient of ``t^n / n!``, i.e. ``n!`` times the plain coefficient."""
        return self.coeff(n) * Fraction(math.factorial(n))

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[: order + 1], order)

    def __add__(self, other: Series) -> Series:
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        return Series(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), order
        )

    def __sub__(self, other: Series) -> Series:
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        return Series(
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), order
        )

    def __neg__(self) -> Series:
        return Series(tuple(-c for c in self.coeffs), self.order)

    def __mul__(self, other: Series | SeriesScalar) -> Series:
        if isinstance(other, (LambdaPoly, Fraction, int)):
            scale = _as_poly(other)
            return Series(tuple(c * scale for c in self.coeffs), self.order)
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        # Accumulate raw coefficient lists in place; this is the hot path.
        acc: list[list[Fraction]] = [[] for _ in range(order + 1)]
        for i in range(order + 1):
            a = self.coeffs[i]
            if a.is_zero():
                continue
            ac = a.coeffs
            for j in range(order - i + 1):
                b = other.coeffs[j]
                if b.is_zero():
                    continue
                bc = b.coeffs
                tgt = acc[i + j]
                need = len(ac) + len(bc) - 1
                if len(tgt) < need:
                    tgt.extend([Fraction(0)] * (need - len(tgt)))
                for da, ca in enumerate(ac):
                    if not ca:
                        continue
                    for db, cb in enumerate(bc):
                        if cb:
                            tgt[da + db] += ca * cb
        return Series(tuple(LambdaPoly(t) for t in acc), order)

    def __rmul__(self, other: SeriesScalar) -> Series:
        if isinstance(other, (LambdaPoly, Fraction, int)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> Series:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Series.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def exp(self) -> Series:
        """Exponential of a series with zero constant term (Taylor sum)."""
        if not self.coeffs[0].is_zero():
            raise ValueError("exp requires a zero constant term")
        result = Series.one(self.order)
        term = Series.one(self.order)
        for k in range(1, self.order + 1):
            term = term * self * Fraction(1, k)
            result = result + term
        return result

    def log1p(self) -> Series:
        """``log(1 + s)`` for a series ``s`` with zero constant term."""
        if not self.coeffs[0].is_zero():
            raise ValueError("log1p requires a zero constant term")
        result = Series.zero(self.order)
        power = Series.one(self.order)
        for m in range(1, self.order + 1):
            power = power * self
            result = result + power * Fraction((-1) ** (m + 1), m)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"Series({list(self.coeffs)!r}, order={self.order})"


def _as_poly(value: SeriesScalar) -> LambdaPoly:
    if isinstance(value, LambdaPoly):
        return value
    return LambdaPoly((Fraction(value),))
