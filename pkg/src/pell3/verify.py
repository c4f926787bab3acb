"""Machine verification suites over the exact identities.

Each suite sweeps an identity over a deterministic grid (index n, seeded
rational t samples, or both) and collects exact-equality failures into a
report.  A clean run means every checked identity held with no rounding
and no tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import binet, lagrange
from .exactnum import IdentityViolationError
from .pell import FAMILIES, Family, closed_form, coefficient_triangle, recurrence_gen

SUITES = ("closed-form", "binet", "xi", "lagrange", "roots")

#: default sweep depth per suite
DEFAULT_MAX_N = {
    "closed-form": 300,
    "binet": 80,
    "xi": 50,
    "lagrange": 64,
    "roots": 40,
}

DEFAULT_SEED = 42
DEFAULT_T_SAMPLES = 25


@dataclass
class SuiteReport:
    suite: str
    points_checked: int
    max_n: int
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, check: str, t=None, n=None):
        self.failures.append(
            {"suite": self.suite, "t": None if t is None else str(t), "n": n, "check": check}
        )

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "points_checked": self.points_checked,
            "max_n": self.max_n,
            "failures": self.failures,
            "notes": self.notes,
        }


def run_closed_form(max_n: int = DEFAULT_MAX_N["closed-form"]) -> SuiteReport:
    """Closed form == recurrence for every family over its valid range."""
    report = SuiteReport("closed-form", 0, max_n)
    for family in FAMILIES.values():
        rows = coefficient_triangle(family, max_n)
        for n in range(family.closed_form_min, max_n + 1):
            try:
                cf = closed_form(family, n)
            except IdentityViolationError:
                report.fail(f"{family.name}: non-integral closed-form coefficient", n=n)
                continue
            if cf.coeffs != rows[n]:
                report.fail(f"{family.name}: closed form differs from recurrence", n=n)
    return report


def _binet_sweep(family: Family, point, max_n: int, report: SuiteReport, polys):
    """Incremental Binet evaluation against the z-normalized polynomials."""
    co = binet.solve_coefficients(family, point)
    rt = binet.roots(point)
    w1n = Fraction(1)
    w2n = rt.w2**0
    w3n = rt.w3**0
    for n in range(max_n + 1):
        total = co.a * w1n + co.b * w2n + co.c * w3n
        if total.b != 0:
            report.fail(f"{family.name}: W-part nonzero", t=point.t, n=n)
        if total.a != polys[n].eval_in_z(point.z):
            report.fail(f"{family.name}: Binet value differs from recurrence", t=point.t, n=n)
        w1n *= rt.w1
        w2n = w2n * rt.w2
        w3n = w3n * rt.w3


def run_binet(
    max_n: int = DEFAULT_MAX_N["binet"],
    t_samples: int = DEFAULT_T_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> SuiteReport:
    """Binet combinations and weight cross-checks at seeded t samples."""
    report = SuiteReport("binet", t_samples, max_n)
    report.notes.append(
        "s-family closed-form weights corrected: second term of B and C "
        "multiplied by W, and the sign of A flipped to 2t/((1+3t)(1-t)); "
        "both forced by the initial-value solve"
    )
    points = binet.sample_points(t_samples, seed)
    polys = {
        family.name: [recurrence_gen(family, n) for n in range(max_n + 1)]
        for family in FAMILIES.values()
    }
    for point in points:
        for family in FAMILIES.values():
            solved = binet.solve_coefficients(family, point)
            printed = binet.closed_form_coefficients(family, point)
            for label, lhs, rhs in (
                ("A", solved.a, printed.a),
                ("B", solved.b, printed.b),
                ("C", solved.c, printed.c),
            ):
                if lhs != rhs:
                    report.fail(
                        f"{family.name}: solved weight {label} differs from closed form",
                        t=point.t,
                    )
            if not (solved.a.b == 0 and solved.b == solved.c.conjugate()):
                report.fail(f"{family.name}: weight structure broken", t=point.t)
            _binet_sweep(family, point, max_n, report, polys[family.name])
    return report


def run_xi(
    max_n: int = DEFAULT_MAX_N["xi"],
    t_samples: int = DEFAULT_T_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> SuiteReport:
    """Radical cancellation: extension arithmetic vs. binomial double sum."""
    report = SuiteReport("xi", t_samples, max_n)
    for point in binet.sample_points(t_samples, seed):
        for n in range(max_n + 1):
            scalar, wpart = binet.radical_cancellation(n, point)
            if wpart != 0:
                report.fail("W-part nonzero", t=point.t, n=n)
            if scalar != binet.radical_cancellation_binomial(n, point.t):
                report.fail("scalar differs from binomial sum", t=point.t, n=n)
    return report


def run_roots(
    max_n: int = DEFAULT_MAX_N["roots"],
    t_samples: int = DEFAULT_T_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> SuiteReport:
    """Root identities, reciprocity, and power-sum polynomials."""
    report = SuiteReport("roots", t_samples, max_n)
    p_polys, q_polys = binet.power_sums(max_n)
    for point in binet.sample_points(t_samples, seed):
        t = point.t
        for name, residual in binet.char_root_residuals(point).items():
            if residual != 0:
                report.fail(f"root {name} residual nonzero", t=t)
        rt = binet.roots(point)
        if rt.w2 + rt.w3 != 1 + t:
            report.fail("w2 + w3 != 1+t", t=t)
        if rt.w2 * rt.w3 != t * t - 1:
            report.fail("w2 * w3 != t^2-1", t=t)
        if rt.w1 * rt.w2 * rt.w3 != -point.z:
            report.fail("w1*w2*w3 != -z", t=t)
        if rt.v2 + rt.v3 != Fraction(1) / (t - 1):
            report.fail("v2 + v3 != 1/(t-1)", t=t)
        if rt.v2 * rt.v3 != Fraction(1) / (t * t - 1):
            report.fail("v2 * v3 != 1/(t^2-1)", t=t)
        for i, (v, w) in enumerate(
            ((rt.v1, rt.w1), (rt.v2, rt.w2), (rt.v3, rt.w3)), start=1
        ):
            if v * w != 1:
                report.fail(f"v{i} * w{i} != 1", t=t)
        w3n = rt.w3**0
        for n in range(max_n + 1):
            if p_polys[n](t) != 2 * w3n.a:
                report.fail("power-sum p_n differs from extension arithmetic", t=t, n=n)
            if q_polys[n](t) != 2 * w3n.b:
                report.fail("power-sum q_n differs from extension arithmetic", t=t, n=n)
            w3n = w3n * rt.w3
    return report


def run_lagrange(
    order: int = DEFAULT_MAX_N["lagrange"],
    first_term_max_n: int = 24,
    first_term_order: int = 33,
    bridge_max_n: int = 100,
    radius_order: int = 60,
) -> SuiteReport:
    """Inversion oracle, leading-term expansion, bridge, and radius ratio."""
    report = SuiteReport("lagrange", 0, max(order, bridge_max_n))
    try:
        lagrange.verify_inversion(order)
    except IdentityViolationError as exc:
        report.fail(f"inversion: {exc}", n=order)
    for n in range(first_term_max_n + 1):
        try:
            lagrange.first_term_series(n, first_term_order)
        except IdentityViolationError as exc:
            report.fail(f"first-term expansion: {exc}", n=n)
    for n in range(1, bridge_max_n + 1):
        try:
            lagrange.truncation_bridge(n)
        except IdentityViolationError as exc:
            report.fail(f"bridge: {exc}", n=n)
    ratio = lagrange.radius_estimate(radius_order)
    if abs(ratio - Fraction(27, 32)) > Fraction(5, 100):
        report.fail(f"radius ratio {ratio} too far from 27/32", n=radius_order)
    return report


def run_suite(
    name: str,
    max_n: int | None = None,
    t_samples: int = DEFAULT_T_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> list:
    """Run one named suite (or all) and return the list of reports."""
    if name == "all":
        return [run_suite(s, None, t_samples, seed)[0] for s in SUITES]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)} or all")
    n = DEFAULT_MAX_N[name] if max_n is None else max_n
    if name == "closed-form":
        return [run_closed_form(n)]
    if name == "binet":
        return [run_binet(n, t_samples, seed)]
    if name == "xi":
        return [run_xi(n, t_samples, seed)]
    if name == "roots":
        return [run_roots(n, t_samples, seed)]
    return [run_lagrange(order=n)]
