"""Exact numeric substrate: integers, rationals, and quadratic extensions.

Integers are plain Python ``int`` (already arbitrary precision, with a
canonical zero); rationals are ``fractions.Fraction`` (always in lowest
terms, positive denominator).  What this module adds on top is the
generalized binomial coefficient and exact arithmetic in a quadratic
extension of the rationals, ``a + b*W`` with ``W**2 = D``.
"""

from __future__ import annotations

import math
from fractions import Fraction


class FieldMismatchError(ValueError):
    """Combining quadratic-extension elements over different discriminants."""


class IdentityViolationError(ArithmeticError):
    """An arithmetic identity that must hold exactly failed to."""


def gen_binomial(m: int, k: int) -> int:
    """Generalized binomial coefficient C(m, k) for any integer m, k >= 0.

    Defined through the falling factorial, m(m-1)...(m-k+1)/k!, so the
    upper index may be negative; e.g. C(-1, k) = (-1)**k.  For
    0 <= m < k the product contains a zero factor and the result is 0.
    """
    if k < 0:
        raise ValueError(f"lower index must be nonnegative, got {k}")
    if m >= 0:
        return math.comb(m, k)
    num = 1
    for i in range(k):
        num *= m - i
    # k consecutive integers always carry a factor of k!, so this is exact
    return num // math.factorial(k)


class QuadExt:
    """Element ``a + b*W`` of a quadratic extension of Q, with ``W**2 = d``.

    The discriminant travels with the element, so values taken from
    different extensions can coexist in one program; mixing them in an
    arithmetic operation raises ``FieldMismatchError``.  Plain ints and
    Fractions mix freely (they are lifted to ``a + 0*W``).  Instances are
    never mutated after construction.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = Fraction(d)

    def _lift(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise FieldMismatchError(
                    f"cannot combine elements with W^2={self.d} and W^2={other.d}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.d)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExt(self.a + other.a, self.b + other.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExt(self.a - other.a, self.b - other.b, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExt(
            self.a * other.a + self.b * other.b * self.d,
            self.a * other.b + self.b * other.a,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        nrm = other.norm()
        if nrm == 0:
            raise ZeroDivisionError("division by a non-invertible element")
        num = self * other.conjugate()
        return QuadExt(num.a / nrm, num.b / nrm, self.d)

    def __rtruediv__(self, other):
        return QuadExt(other, 0, self.d) / self

    def __pow__(self, n: int) -> "QuadExt":
        if n < 0:
            raise ValueError(f"exponent must be nonnegative, got {n}")
        result = QuadExt(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """a**2 - d*b**2, the product with the conjugate (a rational)."""
        return self.a * self.a - self.d * self.b * self.b

    def is_rational(self) -> bool:
        return self.b == 0

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, d={self.d})"

    def __str__(self):
        return f"{self.a} + {self.b}*W"
