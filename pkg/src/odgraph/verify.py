"""Formula-vs-oracle verification harness.

Every group instance is checked along two independent routes: closed
formulas and order-profile arithmetic on one side, brute-force
computation on the explicit graph on the other. Mismatches are collected
rather than raised, so a sweep across a parameter range always runs to
completion and reports deterministically.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from . import formulas, numtheory
from .graph import (
    DEFAULT_CHROMATIC_BOUND,
    build_graph,
    class_degrees,
    degree_via_profile,
    oracle_is_cycle_graph,
    oracle_report,
    size_via_profile,
)
from .groups import (
    DEFAULT_ENUMERATION_BOUND,
    Cyclic,
    Dihedral,
    GroupSpec,
    Product,
    Units,
    format_spec,
    group_order,
    order_profile,
)
from .errors import DomainError

__all__ = [
    "CheckResult",
    "DEFAULT_SUITE",
    "FormulaSuite",
    "SWEEP_FAMILIES",
    "SweepReport",
    "VerificationResult",
    "sweep",
    "verify_group",
]


@dataclass(frozen=True)
class FormulaSuite:
    """Injected formula implementations.

    Swappable so tests can prove the harness actually fails when a
    formula is wrong.
    """

    deg_zn: Callable[[int, int], int] = formulas.deg_zn
    deg_dn: Callable[[int, int], int] = formulas.deg_dn
    size_zn: Callable[[int], int] = formulas.size_zn
    size_dn: Callable[[int], int] = formulas.size_dn


DEFAULT_SUITE = FormulaSuite()


def _jsonify(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonify(value[k]) for k in sorted(value)}
    if isinstance(value, (list, tuple)):
        return [_jsonify(item) for item in value]
    return value


@dataclass(frozen=True)
class CheckResult:
    """One formula-vs-oracle comparison."""

    name: str
    formula: Any
    oracle: Any
    passed: bool
    detail: Optional[str] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "formula": _jsonify(self.formula),
            "oracle": _jsonify(self.oracle),
            "pass": self.passed,
            "detail": self.detail,
        }


def _first_diff(name: str, formula: Any, oracle: Any) -> str:
    if isinstance(formula, dict) and isinstance(oracle, dict):
        for key in sorted(set(formula) | set(oracle)):
            left = formula.get(key)
            right = oracle.get(key)
            if left != right:
                return f"{name}: order {key}: formula {left!r} != oracle {right!r}"
    return f"{name}: formula {formula!r} != oracle {oracle!r}"


def _compare(
    name: str, formula: Any, oracle: Any, detail: Optional[str] = None
) -> CheckResult:
    passed = formula == oracle and detail is None
    if not passed and detail is None:
        detail = _first_diff(name, formula, oracle)
    return CheckResult(name, formula, oracle, passed, None if passed else detail)


@dataclass(frozen=True)
class VerificationResult:
    """All checks for one group instance."""

    spec: GroupSpec
    spec_text: str
    group_order: int
    checks: tuple[CheckResult, ...]
    info: dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(check.passed for check in self.checks)

    @property
    def first_mismatch(self) -> Optional[str]:
        if self.error is not None:
            return self.error
        for check in self.checks:
            if not check.passed:
                return check.detail or _first_diff(
                    check.name, check.formula, check.oracle
                )
        return None

    def to_dict(self) -> dict[str, Any]:
        return {
            "spec": self.spec_text,
            "order": self.group_order,
            "pass": self.passed,
            "error": self.error,
            "first_mismatch": self.first_mismatch,
            "checks": [check.to_dict() for check in self.checks],
            "info": _jsonify(self.info),
        }


def _family_degrees(
    spec: GroupSpec, profile, suite: FormulaSuite
) -> Optional[dict[int, int]]:
    if isinstance(spec, Cyclic):
        return {m: suite.deg_zn(spec.n, m) for m in profile}
    if isinstance(spec, Dihedral):
        return {m: suite.deg_dn(spec.n, m) for m in profile}
    return None


def _family_size(spec: GroupSpec, suite: FormulaSuite) -> Optional[int]:
    if isinstance(spec, Cyclic):
        return suite.size_zn(spec.n)
    if isinstance(spec, Dihedral):
        return suite.size_dn(spec.n)
    return None


def verify_group(
    spec: GroupSpec,
    *,
    suite: FormulaSuite = DEFAULT_SUITE,
    enum_bound: int = DEFAULT_ENUMERATION_BOUND,
    chromatic_bound: int = DEFAULT_CHROMATIC_BOUND,
) -> VerificationResult:
    """Check one group along both routes; never raises on mismatch."""
    text = format_spec(spec)
    order = group_order(spec)
    if order > enum_bound:
        return VerificationResult(
            spec,
            text,
            order,
            checks=(),
            error=f"group order {order} exceeds the enumeration bound {enum_bound}",
        )

    profile = order_profile(spec, enum_bound)
    graph = build_graph(spec, enum_bound)
    report = oracle_report(graph, chromatic_bound=chromatic_bound)
    checks: list[CheckResult] = []

    # order profile: closed form / fast path vs per-element recount
    recount = dict(Counter(graph.orders))
    checks.append(_compare("order_profile", dict(profile), recount))

    # degree per order class, profile route vs explicit graph
    profile_degrees = {m: degree_via_profile(profile, m) for m in profile}
    oracle_degrees, uniformity_problem = class_degrees(graph)
    checks.append(
        _compare(
            "degrees_profile", profile_degrees, oracle_degrees, uniformity_problem
        )
    )

    family_degrees = _family_degrees(spec, profile, suite)
    if family_degrees is not None:
        checks.append(_compare("degrees_formula", family_degrees, oracle_degrees))

    # edge counts
    checks.append(_compare("size_profile", size_via_profile(profile), report.size))
    family_size = _family_size(spec, suite)
    if family_size is not None:
        checks.append(_compare("size_formula", family_size, report.size))

    # girth, three ways: profile rule, raw composite-order criterion,
    # and (for two-factor products) the factor-wise criterion
    checks.append(
        _compare("girth", formulas.girth_from_profile(profile), report.girth)
    )
    checks.append(
        CheckResult(
            "girth_dichotomy",
            [0, 3],
            report.girth,
            passed=report.girth in (0, 3),
            detail=None
            if report.girth in (0, 3)
            else f"girth_dichotomy: oracle girth {report.girth} is neither 0 nor 3",
        )
    )
    composite_rule = 3 if any(numtheory.is_composite(m) for m in profile) else 0
    checks.append(_compare("girth_composite_rule", composite_rule, report.girth))
    if isinstance(spec, Product) and len(spec.factors) == 2:
        product_girth = formulas.girth_of_product(
            spec.factors[0], spec.factors[1], bound=enum_bound
        )
        checks.append(_compare("girth_product_rule", product_girth, report.girth))

    # star / bipartite / acyclic / all-orders-prime must agree as one block
    all_prime = all(m == 1 or numtheory.is_prime(m) for m in profile)
    star_formula = formulas.is_star_group(spec, enum_bound)
    flags = {
        all_prime,
        star_formula,
        report.is_star,
        report.is_bipartite,
        report.girth == 0,
    }
    formula_side = {"all_orders_prime": all_prime, "is_star_group": star_formula}
    oracle_side = {
        "star": report.is_star,
        "bipartite": report.is_bipartite,
        "acyclic": report.girth == 0,
    }
    checks.append(
        CheckResult(
            "star_equivalence",
            formula_side,
            oracle_side,
            passed=len(flags) == 1,
            detail=None
            if len(flags) == 1
            else f"star_equivalence: formula {formula_side!r} vs oracle {oracle_side!r}",
        )
    )

    checks.append(_compare("path_rule", order in (2, 3), report.is_path))

    degree_total = sum(report.degree_sequence.values())
    checks.append(_compare("handshake", degree_total, 2 * report.size))

    if order == 1:
        expected_radius, expected_diameter = 0, 0
    elif order == 2:
        expected_radius, expected_diameter = 1, 1
    else:
        expected_radius, expected_diameter = 1, 2
    checks.append(
        _compare(
            "radius_diameter",
            [expected_radius, expected_diameter],
            [report.radius, report.diameter],
        )
    )

    if order >= 3:
        is_complete = report.size == order * (order - 1) // 2
        checks.append(
            CheckResult(
                "not_complete",
                False,
                is_complete,
                passed=not is_complete,
                detail=None if not is_complete else "not_complete: graph is complete",
            )
        )
        is_cycle = oracle_is_cycle_graph(graph)
        checks.append(
            CheckResult(
                "not_a_cycle",
                False,
                is_cycle,
                passed=not is_cycle,
                detail=None if not is_cycle else "not_a_cycle: graph is a cycle",
            )
        )

    info: dict[str, Any] = {}
    if report.chromatic_number is not None:
        info["chromatic_number"] = report.chromatic_number
        if isinstance(spec, Cyclic):
            # informational only: record whether the measured value matches
            # the quoted order-plus-one claim, without asserting it
            info["chromatic_equals_order_plus_one"] = (
                report.chromatic_number == spec.n + 1
            )

    return VerificationResult(spec, text, order, tuple(checks), info)


SWEEP_FAMILIES = ("cyclic", "dihedral", "units", "product")

_FAMILY_MINIMUM = {"cyclic": 1, "dihedral": 3, "units": 2, "product": 1}


def _sweep_specs(family: str, lo: int, hi: int) -> list[GroupSpec]:
    if family not in SWEEP_FAMILIES:
        raise DomainError(
            f"unknown family {family!r}; expected one of {', '.join(SWEEP_FAMILIES)}"
        )
    if lo > hi:
        raise DomainError(f"empty range {lo}..{hi}")
    minimum = _FAMILY_MINIMUM[family]
    if lo < minimum:
        raise DomainError(f"family {family} requires parameters >= {minimum}, got {lo}")
    if family == "cyclic":
        return [Cyclic(n) for n in range(lo, hi + 1)]
    if family == "dihedral":
        return [Dihedral(n) for n in range(lo, hi + 1)]
    if family == "units":
        return [Units(n) for n in range(lo, hi + 1)]
    return [
        Product((Cyclic(a), Cyclic(b)))
        for a in range(lo, hi + 1)
        for b in range(lo, hi + 1)
    ]


@dataclass(frozen=True)
class SweepReport:
    """Verification results for every instance of a family over a range."""

    family: str
    lo: int
    hi: int
    results: tuple[VerificationResult, ...]
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def passed_count(self) -> int:
        return sum(1 for result in self.results if result.passed)

    @property
    def failed_count(self) -> int:
        return len(self.results) - self.passed_count

    @property
    def passed(self) -> bool:
        return self.failed_count == 0

    def summary(self) -> str:
        return (
            f"{self.family} {self.lo}..{self.hi}: "
            f"{self.passed_count}/{len(self.results)} pass"
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "range": [self.lo, self.hi],
            "pass": self.passed,
            "passed": self.passed_count,
            "failed": self.failed_count,
            "notes": _jsonify(self.notes),
            "instances": [result.to_dict() for result in self.results],
        }


def sweep(
    family: str,
    lo: int,
    hi: int,
    *,
    suite: FormulaSuite = DEFAULT_SUITE,
    enum_bound: int = DEFAULT_ENUMERATION_BOUND,
    chromatic_bound: int = DEFAULT_CHROMATIC_BOUND,
) -> SweepReport:
    """Verify every instance of a family over an inclusive parameter range.

    For ``product`` the range applies to both cyclic factors, covering all
    Z_a x Z_b with lo <= a, b <= hi. Instances whose order exceeds the
    enumeration bound are reported as failures, not raised.
    """
    specs = _sweep_specs(family, lo, hi)
    results = tuple(
        verify_group(
            spec,
            suite=suite,
            enum_bound=enum_bound,
            chromatic_bound=chromatic_bound,
        )
        for spec in specs
    )
    notes: dict[str, Any] = {}
    if family == "units":
        star_instances = [
            spec.n for spec in specs if formulas.is_star_group(spec, enum_bound)
        ]
        divisors_of_24 = [n for n in range(lo, hi + 1) if 24 % n == 0]
        notes = {
            "star_instances": star_instances,
            "divisors_of_24": divisors_of_24,
            "star_iff_divides_24": star_instances == divisors_of_24,
        }
    return SweepReport(family, lo, hi, results, notes)
