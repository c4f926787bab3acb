"""The three families of third-order Pell polynomials.

Every family satisfies the same recursion, p_n = 2x*p_{n-1} + p_{n-3};
they differ only in their initial values:

    r:     0,  1,   2x
    s:     0,  2,   2x
    sigma: 3,  2x,  4x^2

Each polynomial is generated two independent ways: by iterating the
recursion, and from a closed-form binomial sum.  The two must agree
exactly, which is what the verification suites check.
"""

from __future__ import annotations

import io
import csv
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from math import comb
from typing import Iterator

from .exactnum import IdentityViolationError
from .poly import DELTA, CompactPell


class ClosedFormRangeError(ValueError):
    """Closed-form coefficients requested below the family's valid range."""


@dataclass(frozen=True)
class Family:
    """A family tag: initial values in compact coefficient form, the
    z-normalized initial values used to solve for Binet weights, and the
    smallest index served by the closed form.
    """

    name: str
    seeds: tuple
    binet_targets: tuple
    closed_form_min: int

    @property
    def delta(self) -> int:
        return DELTA[self.name]

    def __str__(self):
        return self.name


R = Family("r", ((), (1,), (2,)), (0, 1, 2), 0)
S = Family("s", ((), (2,), (2,)), (0, 2, 2), 2)
SIGMA = Family("sigma", ((3,), (2,), (4,)), (3, 2, 4), 1)

FAMILIES = {"r": R, "s": S, "sigma": SIGMA}


def by_name(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; expected r, s or sigma") from None


def _rows(family: Family) -> Iterator[list]:
    """Yield compact coefficient rows for n = 0, 1, 2, ... indefinitely.

    Multiplying by 2x doubles every compact coefficient in place; adding
    p_{n-3} lands one slot further down (its exponents sit 3 lower), so the
    window costs O(n) integers, never O(n^2).
    """
    p0, p1, p2 = (list(s) for s in family.seeds)
    yield p0
    yield p1
    yield p2
    prev3, prev2, prev1 = p0, p1, p2
    while True:
        row = [c + c for c in prev1]
        if len(prev3) + 1 > len(row):
            row.append(0)
        for i, c in enumerate(prev3):
            row[i + 1] += c
        yield row
        prev3, prev2, prev1 = prev2, prev1, row


def recurrence_gen(family: Family, n: int) -> CompactPell:
    """n-th family polynomial by iterating the recursion; exact."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    row = next(islice(_rows(family), n, None))
    return CompactPell(family.name, n, tuple(row))


def _closed_coefficient(family: Family, n: int, l: int) -> int:
    if family.name == "r":
        return comb(n - 1 - 2 * l, l) << (n - 1 - 3 * l)
    if family.name == "s":
        val = Fraction(n - l - 1, n - 2 * l - 1) * comb(n - 2 * l - 1, l) * (1 << (n - 1 - 3 * l))
    else:
        val = Fraction(n, n - 2 * l) * comb(n - 2 * l, l) * (1 << (n - 3 * l))
    if val.denominator != 1:
        raise IdentityViolationError(
            f"closed-form coefficient is not an integer (family {family.name}, n={n}, l={l})"
        )
    return val.numerator


def closed_form(family: Family, n: int) -> CompactPell:
    """n-th family polynomial from the closed-form binomial sum.

    The s and sigma sums carry rational prefactors which must always
    divide out; a surviving denominator raises IdentityViolationError.
    Below the family's valid range (s needs n >= 2, sigma n >= 1) the
    prefactor degenerates to 0/0 and ClosedFormRangeError is raised;
    callers fall back to recurrence_gen there.
    """
    if n < family.closed_form_min:
        raise ClosedFormRangeError(
            f"closed form for family {family.name} needs n >= {family.closed_form_min}, got {n}"
        )
    lmax = (n - family.delta) // 3
    return CompactPell(
        family.name, n, tuple(_closed_coefficient(family, n, l) for l in range(lmax + 1))
    )


def coefficient_triangle(family: Family, max_n: int) -> list:
    """Rows 0..max_n of compact coefficients, generated by recurrence."""
    if max_n < 0:
        raise ValueError(f"max_n must be nonnegative, got {max_n}")
    return [tuple(row) for row in islice(_rows(family), max_n + 1)]


def triangle_csv(family: Family, max_n: int) -> str:
    """Triangle as CSV with header ``n,l,coeff``; coefficients are decimal
    strings since they outgrow machine words quickly."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "l", "coeff"])
    for n, row in enumerate(coefficient_triangle(family, max_n)):
        for l, c in enumerate(row):
            writer.writerow([n, l, str(c)])
    return buf.getvalue()
