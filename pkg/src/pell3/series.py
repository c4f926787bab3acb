"""Truncated formal power series with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction


class NonUnitError(ZeroDivisionError):
    """Reciprocal of a series whose constant term is zero."""


class CompositionError(ValueError):
    """Composition with an inner series of nonzero constant term."""


class RatSeries:
    """A power series truncated at ``order``: coefficients of z^0..z^(order-1).

    Binary operations truncate the result to the smaller operand order, and
    equality compares coefficients up to the shared order only.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs=(), order=None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs)
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        del cs[order:]
        cs.extend([Fraction(0)] * (order - len(cs)))
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def identity(cls, order: int) -> "RatSeries":
        """The series z."""
        return cls((0, 1), order)

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k < self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (== order if all zero)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.order

    def _lift(self, other) -> "RatSeries":
        if isinstance(other, RatSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return RatSeries((other,), self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        order = min(self.order, other.order)
        return RatSeries(
            [a + b for a, b in zip(self.coeffs[:order], other.coeffs[:order])], order
        )

    __radd__ = __add__

    def __neg__(self):
        return RatSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatSeries([c * other for c in self.coeffs], self.order)
        if not isinstance(other, RatSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = [Fraction(0)] * order
        for i, a in enumerate(self.coeffs[:order]):
            if a:
                for j, b in enumerate(other.coeffs[: order - i]):
                    if b:
                        out[i + j] += a * b
        return RatSeries(out, order)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RatSeries":
        if k < 0:
            raise ValueError(f"exponent must be nonnegative, got {k}")
        result = RatSeries((1,), self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def reciprocal(self) -> "RatSeries":
        """Series b with self * b = 1 up to the truncation order."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise NonUnitError("series has zero constant term, no reciprocal")
        out = [Fraction(0)] * self.order
        out[0] = 1 / a0
        for k in range(1, self.order):
            out[k] = -sum(self.coeffs[i] * out[k - i] for i in range(1, k + 1)) / a0
        return RatSeries(out, self.order)

    def compose(self, inner: "RatSeries") -> "RatSeries":
        """outer(inner(z)) by Horner accumulation; inner must have valuation >= 1."""
        if inner.coeffs[0] != 0:
            raise CompositionError("inner series must have zero constant term")
        order = min(self.order, inner.order)
        acc = RatSeries((self.coeffs[order - 1],), order)
        for k in range(order - 2, -1, -1):
            acc = acc * inner + self.coeffs[k]
        return acc

    def coefficient_strings(self) -> list:
        """Coefficients as exact ``num/den`` strings."""
        return [str(c) for c in self.coeffs]

    def __eq__(self, other):
        if not isinstance(other, RatSeries):
            return NotImplemented
        shared = min(self.order, other.order)
        return self.coeffs[:shared] == other.coeffs[:shared]

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:6])
        more = ", ..." if self.order > 6 else ""
        return f"RatSeries([{shown}{more}], order={self.order})"
