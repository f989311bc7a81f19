"""Truncated power series over Q with explicit precision tracking.

A series stores coefficients for powers 0 .. P-1 of the function-field
variable and represents an element known modulo O(y^P).  Arithmetic
propagates the precision: sums keep the smaller precision, and products
shift it by the known order of the other factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .basefield import YPoly
from .errors import BadConstantTermError
from .values import Value


@dataclass(frozen=True)
class InsufficientPrecision:
    """All stored coefficients vanish: the order is only known to be >= bound."""

    bound: int


class Series:
    __slots__ = ("coeffs", "precision")

    def __init__(self, coeffs, precision=None):
        coeffs = [Fraction(c) for c in coeffs]
        if precision is None:
            precision = len(coeffs)
        if len(coeffs) < precision:
            coeffs += [Fraction(0)] * (precision - len(coeffs))
        else:
            del coeffs[precision:]
        self.coeffs = tuple(coeffs)
        self.precision = precision

    @classmethod
    def zero(cls, precision):
        return cls((), precision)

    @classmethod
    def from_ypoly(cls, p: YPoly, precision):
        return cls(p.coeffs, precision)

    def known_order(self):
        """Index of the first nonzero stored coefficient, or the precision."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return self.precision

    def truncate(self, precision):
        return Series(self.coeffs[:precision], precision)

    def __add__(self, other):
        p = min(self.precision, other.precision)
        return Series(
            [a + b for a, b in zip(self.coeffs[:p], other.coeffs[:p])], p
        )

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.precision)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series([c * other for c in self.coeffs], self.precision)
        p = min(
            self.precision + other.known_order(),
            other.precision + self.known_order(),
        )
        out = [Fraction(0)] * p
        for i, a in enumerate(self.coeffs):
            if a == 0 or i >= p:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= p:
                    break
                if b != 0:
                    out[i + j] += a * b
        return Series(out, p)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by variable**k (k may be negative if the order allows)."""
        if k >= 0:
            return Series((Fraction(0),) * k + self.coeffs, self.precision + k)
        assert self.known_order() >= -k
        return Series(self.coeffs[-k:], self.precision + k)

    def __eq__(self, other):
        return (
            isinstance(other, Series)
            and self.coeffs == other.coeffs
            and self.precision == other.precision
        )

    def __repr__(self):
        return "Series(%r, precision=%d)" % (list(self.coeffs), self.precision)


def series_ord(s: Series):
    """Order of vanishing, or InsufficientPrecision when it is not visible."""
    o = s.known_order()
    if o >= s.precision:
        return InsufficientPrecision(s.precision)
    return Fraction(o)


def series_div_unit(num: Series, den: Series) -> Series:
    """num / den for a unit denominator (nonzero constant term)."""
    if den.coeffs[0] == 0:
        raise BadConstantTermError("denominator is not a unit")
    p = min(num.precision, den.precision)
    inv0 = 1 / den.coeffs[0]
    out = []
    for n in range(p):
        acc = num.coeffs[n]
        for i in range(1, n + 1):
            if i < len(den.coeffs) and den.coeffs[i] != 0:
                acc -= den.coeffs[i] * out[n - i]
        out.append(acc * inv0)
    return Series(out, p)


def series_sqrt(s: Series) -> Series:
    """Square root of a series with constant term 1, to the same precision."""
    if not s.coeffs or s.coeffs[0] != 1:
        raise BadConstantTermError("square root requires constant term 1")
    out = [Fraction(1)]
    for n in range(1, s.precision):
        acc = s.coeffs[n]
        for i in range(1, n):
            acc -= out[i] * out[n - i]
        out.append(acc / 2)
    return Series(out, s.precision)
