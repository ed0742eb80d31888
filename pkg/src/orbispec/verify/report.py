"""Degree-by-degree comparison reports and their text rendering."""

import enum
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from orbispec.algebra.ring import GroupRingElement
from orbispec.algebra.series import TruncatedSeries


class Verdict(str, enum.Enum):
    EQUAL = "equal"
    MISMATCH = "mismatch"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class DegreeRow:
    degree: int
    lhs: GroupRingElement
    rhs: GroupRingElement

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def __str__(self) -> str:
        status = "equal" if self.equal else "MISMATCH"
        return f"{self.degree}, {self.lhs}, {self.rhs}, {status}"


@dataclass(frozen=True)
class ComparisonReport:
    """One equation checked on one fixture."""

    equation: str
    fixture: str
    order: int
    flags: Tuple[Tuple[str, str], ...] = ()
    rows: Tuple[DegreeRow, ...] = ()
    reason: Optional[str] = None

    @classmethod
    def compare(
        cls,
        equation: str,
        fixture: str,
        lhs: Sequence[GroupRingElement],
        rhs: TruncatedSeries,
        flags: Sequence[Tuple[str, str]] = (),
    ) -> "ComparisonReport":
        """Compare the coefficients ``lhs[0..N]`` with the series ``rhs``."""
        rows = tuple(
            DegreeRow(degree, lhs[degree], rhs[degree])
            for degree in range(rhs.order + 1)
        )

        return cls(equation, fixture, rhs.order, tuple(flags), rows)

    @classmethod
    def unsupported(
        cls,
        equation: str,
        fixture: str,
        order: int,
        reason: str,
        flags: Sequence[Tuple[str, str]] = (),
    ) -> "ComparisonReport":
        return cls(equation, fixture, order, tuple(flags), (), reason)

    @property
    def verdict(self) -> Verdict:
        if self.reason is not None:
            return Verdict.UNSUPPORTED

        if all(row.equal for row in self.rows):
            return Verdict.EQUAL

        return Verdict.MISMATCH

    @property
    def first_mismatch(self) -> Optional[DegreeRow]:
        for row in self.rows:
            if not row.equal:
                return row

        return None

    def header(self) -> str:
        flags = "".join(f" {key}={value}" for key, value in self.flags)
        return f"# {self.equation} fixture={self.fixture} N={self.order}{flags}"

    def to_text(self) -> str:
        lines = [self.header()]
        lines.extend(str(row) for row in self.rows)

        if self.reason is not None:
            lines.append(f"verdict: unsupported ({self.reason})")
        else:
            lines.append(f"verdict: {self.verdict.value}")

        return "\n".join(lines)


@dataclass(frozen=True)
class AuditReport:
    """Which shift convention reproduces e⁽ᵏ⁾ in degree one."""

    fixture: str
    order: int
    dimension: int
    lhs: GroupRingElement
    literal: GroupRingElement
    reduced: GroupRingElement

    @property
    def literal_passes(self) -> bool:
        return self.literal == self.lhs

    @property
    def reduced_passes(self) -> bool:
        return self.reduced == self.lhs

    @property
    def winner(self) -> str:
        if self.literal_passes and self.reduced_passes:
            return "both"
        if self.literal_passes:
            return "literal"
        if self.reduced_passes:
            return "reduced"
        return "none"

    def to_text(self) -> str:
        def status(passes: bool) -> str:
            return "pass" if passes else "fail"

        return (
            f"audit fixture={self.fixture} k={self.order} d={self.dimension} "
            f"literal={status(self.literal_passes)} "
            f"reduced={status(self.reduced_passes)} winner={self.winner}"
        )


@dataclass
class JobResult:
    """The reports produced for one job, in the order they were made."""

    name: str
    reports: List[ComparisonReport] = field(default_factory=list)
    audits: List[AuditReport] = field(default_factory=list)

    @property
    def verdict(self) -> Verdict:
        verdicts = {report.verdict for report in self.reports}
        if any(audit.winner == "none" for audit in self.audits):
            verdicts.add(Verdict.MISMATCH)

        if Verdict.MISMATCH in verdicts:
            return Verdict.MISMATCH
        if Verdict.UNSUPPORTED in verdicts:
            return Verdict.UNSUPPORTED
        return Verdict.EQUAL

    def to_text(self) -> str:
        blocks = [f"## job {self.name}"]
        blocks.extend(report.to_text() for report in self.reports)
        blocks.extend(audit.to_text() for audit in self.audits)
        return "\n".join(blocks)
