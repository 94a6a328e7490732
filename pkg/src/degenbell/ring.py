"""Exact scalar ring: arbitrary-precision rationals and dense polynomials in
the deformation parameter.

Rationals are ``fractions.Fraction`` values, which are always stored reduced
with a positive denominator.  ``LambdaPoly`` is a dense univariate polynomial
in the deformation parameter (rendered ``L`` in text output) with rational
coefficients in ascending degree and no trailing zeros; the zero polynomial
is the empty coefficient tuple.  Instances are immutable and hashable, so
they can be shared between threads and used as cache keys.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction

Scalar = Union[Fraction, int]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9][0-9]*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer literal into an exact rational."""
    stripped = text.strip()
    if not _RATIONAL_RE.match(stripped):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(stripped)


def format_rational(value: Fraction) -> str:
    """Render a rational as ``p/q``, suppressing the denominator when it is 1."""
    return str(value)


class LambdaPoly:
    """Dense polynomial in the deformation parameter over the rationals.

    >>> p = LambdaPoly([Fraction(1, 4), 0, 2])
    >>> p.eval(Fraction(1))
    Fraction(9, 4)
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LambdaPoly is immutable")

    @classmethod
    def zero(cls) -> LambdaPoly:
        return _ZERO

    @classmethod
    def one(cls) -> LambdaPoly:
        return _ONE

    @classmethod
    def const(cls, value: Scalar) -> LambdaPoly:
        return cls((Fraction(value),))

    @classmethod
    def lam(cls) -> LambdaPoly:
        """The degree-one monomial: the deformation parameter itself."""
        return _LAM

    @classmethod
    def monomial(cls, coef: Scalar, degree: int) -> LambdaPoly:
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        c = Fraction(coef)
        if not c:
            return _ZERO
        return cls((Fraction(0),) * degree + (c,))

    @property
    def degree(self) -> int | None:
        """Degree of the polynomial, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, i: int) -> Fraction:
        """Coefficient of the degree-``i`` term (zero beyond the stored ones)."""
        if i < 0:
            raise ValueError("coefficient index must be nonnegative")
        return self.coeffs[i] if i < len(self.coeffs) else Fraction(0)

    def eval(self, value: Scalar) -> Fraction:
        """Evaluate at a rational point by Horner's rule."""
        v = Fraction(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def __add__(self, other: LambdaPoly | Scalar) -> LambdaPoly:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LambdaPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LambdaPoly:
        return LambdaPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: LambdaPoly | Scalar) -> LambdaPoly:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LambdaPoly:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: LambdaPoly | Scalar) -> LambdaPoly:
        if isinstance(other, (Fraction, int)):
            c = Fraction(other)
            if not c:
                return _ZERO
            return LambdaPoly(tuple(a * c for a in self.coeffs))
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
        return LambdaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LambdaPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = _ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LambdaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (Fraction, int)):
            return self.coeffs == _as_poly(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"LambdaPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return poly_to_plain(self)


def _as_poly(value: LambdaPoly | Scalar) -> LambdaPoly:
    if isinstance(value, LambdaPoly):
        return value
    if isinstance(value, (Fraction, int)):
        return LambdaPoly((Fraction(value),))
    return NotImplemented


_ZERO = LambdaPoly()
_ONE = LambdaPoly((Fraction(1),))
_LAM = LambdaPoly((Fraction(0), Fraction(1)))


def poly_to_plain(poly: LambdaPoly, symbol: str = "L") -> str:
    """Render a polynomial as plain text, e.g. ``1/4 + 2*L^2`` or ``-1*L``."""
    if poly.is_zero():
        return "0"
    parts: list[str] = []
    for deg, c in enumerate(poly.coeffs):
        if not c:
            continue
        if deg == 0:
            body = str(c)
        elif deg == 1:
            body = f"{c}*{symbol}"
        else:
            body = f"{c}*{symbol}^{deg}"
        parts.append(body)
    text = parts[0]
    for body in parts[1:]:
        if body.startswith("-"):
            text += " - " + body[1:]
        else:
            text += " + " + body
    return text


def poly_to_coeff_strings(poly: LambdaPoly) -> list[str]:
    """Ascending coefficient list as strings; the zero polynomial is empty."""
    return [str(c) for c in poly.coeffs]
