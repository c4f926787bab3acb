"""Integer polynomials in one variable: dense form and the lacunary compact form.

The family polynomials only carry exponents n - delta - 3*l (delta is 1 for
the r and s families, 0 for sigma), so the compact form stores one integer
coefficient per step of 3 in the exponent.  The dense form is a view used
for display and generic evaluation.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction

#: exponent offset of each family: polynomial n has degree n - delta
DELTA = {"r": 1, "s": 1, "sigma": 0}


class DensePoly:
    """Dense polynomial with integer coefficients, stored lowest degree first.

    Trailing zero coefficients are stripped; the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [operator.index(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, exp: int) -> int:
        if 0 <= exp < len(self.coeffs):
            return self.coeffs[exp]
        return 0

    def __call__(self, x0):
        """Evaluate by Horner's rule; exact for int or Fraction arguments."""
        acc = x0 * 0
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return DensePoly(out)

    def __neg__(self):
        return DensePoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return DensePoly([c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(other.coeffs):
                    out[i + j] += ci * cj
        return DensePoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, DensePoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def format_plain(self, var: str = "x") -> str:
        """Render in descending exponents, e.g. ``131072x^17+...+84x^2``."""
        if not self.coeffs:
            return "0"
        parts = []
        for exp in range(self.degree, -1, -1):
            c = self.coeffs[exp]
            if c == 0:
                continue
            mag = abs(c)
            if exp == 0:
                body = str(mag)
            else:
                xs = var if exp == 1 else f"{var}^{exp}"
                body = xs if mag == 1 else f"{mag}{xs}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = (sign if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __repr__(self):
        return f"DensePoly({self.format_plain()})"


@dataclass(frozen=True)
class CompactPell:
    """Family polynomial in compact form: coefficient l sits at exponent
    n - delta - 3*l.  The zero polynomial has an empty coefficient tuple.
    """

    family: str
    n: int
    coeffs: tuple

    def __post_init__(self):
        if self.family not in DELTA:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 0:
            raise ValueError(f"index must be nonnegative, got {self.n}")
        object.__setattr__(self, "coeffs", tuple(operator.index(c) for c in self.coeffs))
        if len(self.coeffs) > max(0, (self.n - self.delta) // 3 + 1):
            raise ValueError(
                f"{len(self.coeffs)} coefficients do not fit family {self.family}, n={self.n}"
            )

    @property
    def delta(self) -> int:
        return DELTA[self.family]

    def exponent(self, l: int) -> int:
        return self.n - self.delta - 3 * l

    def to_dense(self) -> DensePoly:
        if not self.coeffs:
            return DensePoly()
        out = [0] * (self.n - self.delta + 1)
        for l, c in enumerate(self.coeffs):
            out[self.exponent(l)] = c
        return DensePoly(out)

    @classmethod
    def from_dense(cls, dense: DensePoly, family: str, n: int) -> "CompactPell":
        """Inverse of ``to_dense``; rejects coefficients off the 3-step grid."""
        delta = DELTA[family]
        if not dense.coeffs:
            return cls(family, n, ())
        if dense.degree > n - delta:
            raise ValueError(f"degree {dense.degree} exceeds n - delta = {n - delta}")
        out = []
        seen = 0
        for l in range(0, (n - delta) // 3 + 1):
            c = dense.coefficient(n - delta - 3 * l)
            if c:
                seen += 1
            out.append(c)
        if seen != sum(1 for c in dense.coeffs if c):
            raise ValueError("polynomial has terms off the lacunary exponent grid")
        while out and out[-1] == 0:
            out.pop()
        return cls(family, n, tuple(out))

    def eval_in_z(self, z0) -> Fraction:
        """Value of p(x) / x**(n-delta) after substituting x**-3 = -z0.

        Each stored coefficient contributes c_l * (-z0)**l, so this needs
        no root extraction and stays rational for rational z0.
        """
        z0 = Fraction(z0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * (-z0) + c
        return acc

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "terms": [
                {"exp": self.exponent(l), "coeff": str(c)}
                for l, c in enumerate(self.coeffs)
                if c != 0
            ],
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "CompactPell":
        family, n = obj["family"], obj["n"]
        delta = DELTA[family]
        coeffs: dict[int, int] = {}
        for term in obj["terms"]:
            exp, c = term["exp"], int(term["coeff"])
            step = n - delta - exp
            if step < 0 or step % 3:
                raise ValueError(f"exponent {exp} is off the grid for n={n}")
            coeffs[step // 3] = c
        if not coeffs:
            return cls(family, n, ())
        out = [coeffs.get(l, 0) for l in range(max(coeffs) + 1)]
        return cls(family, n, tuple(out))
