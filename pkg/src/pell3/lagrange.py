"""Series inversion of z = u(u-2)^2 and what it says about the r family.

Near u = 0 the map z = u(u-2)^2 inverts to a power series

    u(z) = sum_{n>=1} (1/n) C(3n-2, n-1) 2^(1-3n) z^n,

convergent for |z| < 32/27.  Substituting u into -(2-u)^n / (3u-2), the
rational-in-u form of the leading Binet term -(1-t)^n/(1+3t), expands it as
sum_l 2^(n-3l-1) C(3l-n, l) z^l.  The first few of those coefficients,
after the sign map l -> (-1)^l, are exactly the compact coefficients of
r_n; everything past the polynomial's end is what the conjugate Binet
terms cancel.

All of these statements are certified here by exact series arithmetic:
composition is the oracle for the inversion coefficients, and the closed
formulas are compared term by term against the expanded series.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .exactnum import IdentityViolationError, gen_binomial
from .pell import R, recurrence_gen
from .series import RatSeries


def inversion_coefficient(n: int) -> Fraction:
    """Coefficient of z^n in u(z), from the closed formula; n >= 1."""
    if n < 1:
        raise ValueError(f"coefficient index must be >= 1, got {n}")
    return Fraction(comb(3 * n - 2, n - 1), n << (3 * n - 1))


def inversion_series(order: int) -> RatSeries:
    """u(z) carrying coefficients through z^order (all positive, u_0 = 0)."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    return RatSeries(
        [Fraction(0)] + [inversion_coefficient(n) for n in range(1, order + 1)],
        order + 1,
    )


def verify_inversion(order: int) -> None:
    """Certify the inversion coefficients by forward composition.

    Substitutes u(z) into u(u-2)^2 = 4u - 4u^2 + u^3 and demands the exact
    identity series z through z^order.  Raises IdentityViolationError with
    the first bad index on mismatch.
    """
    u = inversion_series(order)
    outer = RatSeries((0, 4, -4, 1), order + 1)
    composed = outer.compose(u)
    target = RatSeries.identity(order + 1)
    for k in range(order + 1):
        if composed.coefficient(k) != target.coefficient(k):
            raise IdentityViolationError(
                f"composition disagrees with z first at index {k}: "
                f"{composed.coefficient(k)}"
            )


def first_term_coefficient(n: int, l: int) -> Fraction:
    """Coefficient of z^l in the leading-term expansion: 2^(n-3l-1) C(3l-n, l)."""
    return Fraction(2) ** (n - 3 * l - 1) * gen_binomial(3 * l - n, l)


def first_term_series(n: int, order: int) -> RatSeries:
    """Expand -(2-u)^n / (3u-2) in z, checking every coefficient.

    Built from the inversion series with plain series arithmetic, then
    each coefficient l < order is compared against the closed formula;
    any mismatch raises IdentityViolationError.
    """
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    u = RatSeries(
        [Fraction(0)] + [inversion_coefficient(k) for k in range(1, order)],
        order,
    )
    ser = -((2 - u) ** n) * (3 * u - 2).reciprocal()
    for l in range(order):
        expect = first_term_coefficient(n, l)
        if ser.coefficient(l) != expect:
            raise IdentityViolationError(
                f"series coefficient {l} is {ser.coefficient(l)}, formula gives "
                f"{expect} (n={n})"
            )
    return ser


def truncation_bridge(n: int) -> None:
    """Check that the sign-mapped series prefix is exactly r_n.

    For 0 <= l <= (n-1)/3, (-1)^l times coefficient l of the leading-term
    expansion must equal compact coefficient l of r_n; past that point the
    series keeps going, and those are the terms the conjugate pair kills.
    """
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    lmax = (n - 1) // 3
    ser = first_term_series(n, lmax + 1)
    prefix = [(-1) ** l * ser.coefficient(l) for l in range(lmax + 1)]
    poly = recurrence_gen(R, n)
    if prefix != list(poly.coeffs):
        raise IdentityViolationError(
            f"sign-mapped prefix {prefix} differs from r_{n} coefficients {list(poly.coeffs)}"
        )


def radius_estimate(order: int) -> Fraction:
    """Successive coefficient ratio u_order / u_(order-1).

    Approaches 27/32 from below (the reciprocal of the convergence radius
    32/27); the sequence of ratios is increasing.
    """
    if order < 10:
        raise ValueError(f"order must be >= 10 for a meaningful ratio, got {order}")
    return inversion_coefficient(order) / inversion_coefficient(order - 1)
