"""Both sides of the Macdonald type equations.

For a pair (V, φ) with its equivariant Hodge–Deligne class e = e(V, φ),

    1 + Σ e(SⁿV, φ⁽ⁿ⁾)Tⁿ = (1 − T)^(−e),

and for a triple (V, G, φ) of dimension d with order-k class e⁽ᵏ⁾,

    Σ e⁽ᵏ⁾(Vⁿ, G≀Sₙ, φ⁽ⁿ⁾)Tⁿ
        = Π_{r₁,…,r_k} (1 − {(0, s, s)}T^{r₁⋯r_k})^(−r₂r₃²⋯r_k^(k−1)·e⁽ᵏ⁾)

with the shift s depending on the normalization convention. Left-hand
sides come from independent enumerations, right-hand sides from the power
structure."""

import enum
import math
from fractions import Fraction
from itertools import count
from typing import Iterator, List, Optional, Sequence, Tuple

from orbispec import error, logger
from orbispec.algebra.power import (
    Mode,
    expand_neg_power,
    lambda_series,
    power_expand,
)
from orbispec.algebra.ring import (
    PAIR,
    TRIPLE,
    TRIVIAL,
    GradingGroup,
    GroupRingElement,
)
from orbispec.algebra.series import TruncatedSeries
from orbispec.group.finite import conjugacy_classes
from orbispec.group.wreath import wreath_class_type, wreath_product
from orbispec.spectrum.hodge import (
    MixedHodgeEigenDatum,
    ehd_from_data,
    ehd_to_pair,
)
from orbispec.spectrum.tower import SELF, e_k, hsp2_k, hsp3_k
from orbispec.verify.fixture import Theorem2Fixture
from orbispec.verify.report import AuditReport, ComparisonReport

log = logger.get_logger(__name__)


class Shift(str, enum.Enum):
    LITERAL = "literal"
    REDUCED = "reduced"
    AUDIT = "audit"


def _graded_symmetric_algebra(
    data: Sequence[MixedHodgeEigenDatum], order: int
) -> TruncatedSeries:
    """Σ e(SⁿV)Tⁿ as the graded symmetric algebra on the eigenbasis: an even
    degree basis element m contributes 1/(1 − mT), an odd one (1 − mT)."""
    result = TruncatedSeries.one(TRIPLE, order)
    one = GroupRingElement.one(TRIPLE)

    for datum in data:
        monomial = GroupRingElement.monomial(
            TRIPLE, (datum.alpha, datum.p, datum.q)
        )
        linear = TruncatedSeries(TRIPLE, order, [one, -monomial])
        factor = linear.inverse() if datum.degree % 2 == 0 else linear

        for _ in range(datum.dim):
            result = result * factor

    return result


def sym_power_pair_oracle(
    data: Sequence[MixedHodgeEigenDatum], n: int
) -> GroupRingElement:
    """e(SⁿV, φ⁽ⁿ⁾) from the graded symmetric algebra."""
    if n < 0:
        raise ValueError(f"sym_power_pair_oracle: negative power {n}")

    if n == 0:
        return GroupRingElement.one(TRIPLE)

    return _graded_symmetric_algebra(data, n)[n]


def _one_minus_t(group: GradingGroup, order: int) -> TruncatedSeries:
    one = GroupRingElement.one(group)
    return TruncatedSeries(group, order, [one, -one])


def verify_theorem1(
    data: Sequence[MixedHodgeEigenDatum], order: int, fixture: str = "-"
) -> ComparisonReport:
    e = ehd_from_data(data)
    lhs = _graded_symmetric_algebra(data, order)
    rhs = power_expand(_one_minus_t(TRIPLE, order), -e, Mode.SUBSTITUTION)

    return ComparisonReport.compare(
        "theorem-1", fixture, lhs.coefficients, rhs, [("mode", "substitution")]
    )


def verify_theorem1_pair(
    data: Sequence[MixedHodgeEigenDatum], order: int, fixture: str = "-"
) -> ComparisonReport:
    """The same equation after forgetting Q on both sides."""
    lhs = _graded_symmetric_algebra(data, order).map(ehd_to_pair)
    rhs = power_expand(
        _one_minus_t(PAIR, order),
        -ehd_to_pair(ehd_from_data(data)),
        Mode.SUBSTITUTION,
    )

    return ComparisonReport.compare(
        "theorem-1-pair", fixture, lhs.coefficients, rhs
    )


def verify_theorem1_euler(
    data: Sequence[MixedHodgeEigenDatum], order: int, fixture: str = "-"
) -> ComparisonReport:
    """The classical χ version after applying the augmentation."""
    lhs = _graded_symmetric_algebra(data, order).map(
        lambda element: element.project(())
    )
    rhs = power_expand(
        _one_minus_t(TRIVIAL, order),
        -ehd_from_data(data).project(()),
        Mode.SUBSTITUTION,
    )

    return ComparisonReport.compare(
        "theorem-1-euler", fixture, lhs.coefficients, rhs
    )


def _exponent_tuples(k: int, order: int) -> Iterator[Tuple[int, ...]]:
    """(r₁, …, r_k) of positive integers with r₁⋯r_k ≤ order."""

    def extend(
        prefix: Tuple[int, ...], product: int
    ) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == k:
            yield prefix
            return

        for r in count(1):
            if product * r > order:
                return
            yield from extend(prefix + (r,), product * r)

    yield from extend((), 1)


def _shift_marker(
    group: GradingGroup, value: Fraction
) -> Tuple[Fraction, ...]:
    """(0, value, …, value) sized to the grading group."""
    return (Fraction(0),) + tuple(value for _ in range(len(group) - 1))


def rhs_expand_theorem2(
    e: GroupRingElement,
    dimension: int,
    k: int,
    order: int,
    shift: Shift = Shift.REDUCED,
    mode: Mode = Mode.SUBSTITUTION,
) -> TruncatedSeries:
    """Π over (r₁, …, r_k) with rΠ = r₁⋯r_k ≤ N of
    (1 − {(0, s, s)}T^rΠ)^(−r₂r₃²⋯r_k^(k−1)·e), where s = rΠ·d/2 for the
    literal and s = (rΠ − 1)·d/2 for the reduced convention."""
    shift = Shift(shift)
    if shift is Shift.AUDIT:
        raise ValueError("rhs_expand_theorem2: resolve the audit shift first")

    group = e.group

    if k == 0:
        return expand_neg_power(group.zero(), 1, e, mode, order)

    result = TruncatedSeries.one(group, order)

    for tuple_ in _exponent_tuples(k, order):
        level = math.prod(tuple_)
        multiplicity = math.prod(r**j for j, r in enumerate(tuple_))
        if shift is Shift.LITERAL:
            value = Fraction(level * dimension, 2)
        else:
            value = Fraction((level - 1) * dimension, 2)

        result = result * expand_neg_power(
            _shift_marker(group, value), level, e * multiplicity, mode, order
        )

    return result


def wreath_lhs_explicit(
    fixture: Theorem2Fixture, degree: int, k: int, bound: Optional[int] = None
) -> GroupRingElement:
    """e⁽ᵏ⁾(Xⁿ, G≀Sₙ, φ⁽ⁿ⁾) by building the whole fixed-point tower."""
    if degree == 0:
        return GroupRingElement.one(TRIPLE)

    return e_k(fixture.power_node(degree, k, bound), k)


def wreath_lhs_k1_positive_d(
    fixture: Theorem2Fixture, degree: int, bound: Optional[int] = None
) -> GroupRingElement:
    """e⁽¹⁾(Vⁿ, G≀Sₙ, φ⁽ⁿ⁾) from the conjugacy classes of G≀Sₙ: a class of
    type {(h, r): m} contributes Π S^m(E_h·{(0, d(r−1)/2, d(r−1)/2)}) with
    E_h = Σ_β e(Vʰ_β/C(h))·{(0, β, β)}."""
    if degree == 0:
        return GroupRingElement.one(TRIPLE)

    node = fixture.base_node(1)
    if node.depth < 1:
        raise error.DepthError(
            f"{fixture.name}: the class rule needs a node of depth 1"
        )

    strata = {}
    for (index, beta), child in node.children.items():
        target = node if child is SELF else child
        contribution = e_k(target, 0) * GroupRingElement.monomial(
            TRIPLE, (0, beta, beta)
        )
        strata[index] = strata.get(index, GroupRingElement.zero(TRIPLE)) + (
            contribution
        )

    wreath = wreath_product(node.group, degree, bound)
    total = GroupRingElement.zero(TRIPLE)

    for representative in conjugacy_classes(wreath).representatives:
        term = GroupRingElement.one(TRIPLE)

        for (index, length), multiplicity in sorted(
            wreath_class_type(wreath, representative).items()
        ):
            value = Fraction(fixture.dimension * (length - 1), 2)
            base = strata.get(index, GroupRingElement.zero(TRIPLE))
            shifted = base.shift((0, value, value))
            term = term * lambda_series(shifted, multiplicity)[multiplicity]

        total = total + term

    return total


def _wreath_lhs(
    fixture: Theorem2Fixture, degree: int, k: int, bound: Optional[int]
) -> GroupRingElement:
    if fixture.explicit:
        return wreath_lhs_explicit(fixture, degree, k, bound)

    if k == 1:
        return wreath_lhs_k1_positive_d(fixture, degree, bound)

    raise error.UnsupportedError(
        f"{fixture.name}: the wreath left-hand side of a declared node is "
        f"only available at order 1, order {k} requested"
    )


def normalization_audit(fixture: Theorem2Fixture, k: int) -> AuditReport:
    """Check both shift conventions against the n = 1 term, which is
    e⁽ᵏ⁾(V, G, φ) itself since G≀S₁ = G."""
    e = fixture.invariant(k)

    def degree_one(shift: Shift) -> GroupRingElement:
        return rhs_expand_theorem2(e, fixture.dimension, k, 1, shift)[1]

    report = AuditReport(
        fixture.name,
        k,
        fixture.dimension,
        e,
        degree_one(Shift.LITERAL),
        degree_one(Shift.REDUCED),
    )

    log.info(
        "normalization_audit: %s k=%d winner %s", fixture.name, k, report.winner
    )

    return report


def resolve_shift(fixture: Theorem2Fixture, k: int, shift: Shift) -> Shift:
    """``audit`` becomes the convention the audit picks for this fixture."""
    shift = Shift(shift)
    if shift is not Shift.AUDIT:
        return shift

    if normalization_audit(fixture, k).winner == "reduced":
        return Shift.REDUCED

    return Shift.LITERAL


def verify_theorem2(
    fixture: Theorem2Fixture,
    k: int,
    order: int,
    shift: Shift = Shift.AUDIT,
    mode: Mode = Mode.SUBSTITUTION,
    n_max: int = 3,
    bound: Optional[int] = None,
) -> List[ComparisonReport]:
    """The wreath equation and its pair and triple spectrum versions,
    compared through T^min(N, n_max)."""
    shift = Shift(shift)
    order = min(order, n_max)
    flags = [("k", str(k)), ("d", str(fixture.dimension))]

    if not fixture.explicit and k != 1:
        reason = (
            f"d={fixture.dimension} left-hand side needs k=1"
            if fixture.dimension
            else "declared node left-hand side needs k=1"
        )
        return [
            ComparisonReport.unsupported(
                equation, fixture.name, order, reason, flags
            )
            for equation in ("theorem-2", "theorem-2-pair", "theorem-2-triple")
        ]

    resolved = resolve_shift(fixture, k, shift)
    flags += [("shift", resolved.value), ("mode", Mode(mode).value)]

    if shift is Shift.AUDIT:
        flags.append(("audit", "derived" if fixture.dimension else "trivial"))

    e = fixture.invariant(k)
    lhs: List[GroupRingElement] = []
    pair: List[GroupRingElement] = []
    triple: List[GroupRingElement] = []

    for degree in range(order + 1):
        if degree and fixture.explicit:
            node = fixture.power_node(degree, k, bound)
            lhs.append(e_k(node, k))
            pair.append(hsp2_k(node, k))
            triple.append(hsp3_k(node, k))
            continue

        value = _wreath_lhs(fixture, degree, k, bound)
        lhs.append(value)
        pair.append(ehd_to_pair(value))
        triple.append(value)

    base_node = fixture.base_node(k)
    reports = [
        ComparisonReport.compare(
            "theorem-2",
            fixture.name,
            lhs,
            rhs_expand_theorem2(e, fixture.dimension, k, order, resolved, mode),
            flags,
        ),
        ComparisonReport.compare(
            "theorem-2-pair",
            fixture.name,
            pair,
            rhs_expand_theorem2(
                hsp2_k(base_node, k),
                fixture.dimension,
                k,
                order,
                resolved,
                mode,
            ),
            flags,
        ),
        ComparisonReport.compare(
            "theorem-2-triple",
            fixture.name,
            triple,
            rhs_expand_theorem2(
                hsp3_k(base_node, k),
                fixture.dimension,
                k,
                order,
                resolved,
                mode,
            ),
            flags,
        ),
    ]

    for report in reports:
        log.info(
            "verify_theorem2: %s %s %s",
            report.equation,
            fixture.name,
            report.verdict.value,
        )

    return reports
