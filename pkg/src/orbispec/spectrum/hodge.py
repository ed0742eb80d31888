"""Equivariant mixed Hodge data of a pair (V, φ) and the spectra derived
from it.

A datum (k, p, q, α, dim) says that the e[α]-eigenspace of φ on the (p, q)
part of Hᵏ_c(V) has the given dimension. The equivariant Hodge–Deligne class
collects them as Σ (−1)ᵏ·dim·{(α, p, q)} in ℤ[ℚ/ℤ×ℚ×ℚ]; the other views are
ring maps or plain linear maps out of that class."""

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Union

from orbispec import error, logger
from orbispec.algebra.rational import (
    as_rational,
    format_rational,
    rational_split,
)
from orbispec.algebra.ring import (
    CYCLIC_INTEGER,
    SPECTRUM,
    TRIPLE,
    GroupRingElement,
)

log = logger.get_logger(__name__)


@dataclass(frozen=True)
class MixedHodgeEigenDatum:
    degree: int
    p: int
    q: int
    alpha: Fraction
    dim: int

    def __post_init__(self) -> None:
        if self.degree < 0 or self.p < 0 or self.q < 0:
            raise ValueError(
                "degree, p and q of a Hodge datum must be non-negative"
            )

        if self.dim <= 0:
            raise ValueError(f"Hodge datum dim {self.dim} must be positive")

        alpha = as_rational(self.alpha)
        object.__setattr__(self, "alpha", alpha - math.floor(alpha))

    @classmethod
    def parse(cls, row: Union[str, Sequence[str]]) -> "MixedHodgeEigenDatum":
        """Read ``"k,p,q,alpha,dim"`` or an already split CSV row."""
        fields = row.split(",") if isinstance(row, str) else list(row)
        fields = [field.strip() for field in fields]

        if len(fields) != 5:
            raise ValueError(
                f"Hodge datum {row!r} needs the five fields k,p,q,alpha,dim"
            )

        try:
            return cls(
                int(fields[0]),
                int(fields[1]),
                int(fields[2]),
                as_rational(fields[3]),
                int(fields[4]),
            )
        except ZeroDivisionError:
            raise ValueError(f"Hodge datum {row!r} has a zero denominator")

    def __str__(self) -> str:
        return (
            f"{self.degree},{self.p},{self.q},"
            f"{format_rational(self.alpha)},{self.dim}"
        )


def read_hodge_csv(text: str) -> List[MixedHodgeEigenDatum]:
    """Rows ``k,p,q,alpha,dim``; blank lines and ``#`` comments are skipped."""
    data = []

    for row in csv.reader(io.StringIO(text)):
        if not "".join(row).strip() or row[0].lstrip().startswith("#"):
            continue
        data.append(MixedHodgeEigenDatum.parse(row))

    return data


def ehd_from_data(data: Iterable[MixedHodgeEigenDatum]) -> GroupRingElement:
    """e(V, φ) = Σ (−1)ᵏ·dim·{(α, p, q)}."""
    return GroupRingElement(
        TRIPLE,
        [
            ((datum.alpha, datum.p, datum.q), (-1) ** datum.degree * datum.dim)
            for datum in data
        ],
    )


def signed_dimension(data: Iterable[MixedHodgeEigenDatum]) -> int:
    """The Euler characteristic Σ (−1)ᵏ·dim."""
    return sum((-1) ** datum.degree * datum.dim for datum in data)


def check_equivariant_hd(element: GroupRingElement) -> GroupRingElement:
    """Validate a class in ℤ[ℚ/ℤ×ℚ×ℚ]: P and Q non-negative with P − Q
    integral."""
    if element.group != TRIPLE:
        raise error.SignatureError(
            f"an equivariant Hodge–Deligne class lives in {TRIPLE}, "
            f"not {element.group}"
        )

    for (_, p, q), _ in element.terms:
        if p < 0 or q < 0 or (p - q).denominator != 1:
            raise ValueError(
                f"exponent (P, Q) = ({p}, {q}) is not a valid Hodge bidegree"
            )

    return element


def ehd_to_poincare_bar(element: GroupRingElement) -> GroupRingElement:
    """ē(V, φ): forget Q."""
    return element.project((0, 1))


def ehd_to_pair(element: GroupRingElement) -> GroupRingElement:
    return ehd_to_poincare_bar(element)


def ehd_to_triple(element: GroupRingElement) -> GroupRingElement:
    return element


def ehd_to_hsp(element: GroupRingElement) -> GroupRingElement:
    """The Hodge spectrum: {(α, P, Q)} ↦ {P + α} with α read in [0, 1).

    Additive but not multiplicative."""
    return element.map_labels(SPECTRUM, lambda label: label[1] + label[0])


def hsp_to_poincare(spectrum: GroupRingElement) -> str:
    """Render Σ k_r{r} as the polynomial Σ k_r t^r in fractional powers."""
    if not spectrum:
        return "0"

    parts = []

    for (exponent,), value in spectrum.terms:
        if exponent == 0:
            monomial = ""
        elif exponent == 1:
            monomial = "t"
        elif exponent.denominator == 1:
            monomial = f"t^{exponent.numerator}"
        else:
            monomial = "t^{" + format_rational(exponent) + "}"

        magnitude = abs(value)
        if monomial:
            text = monomial if magnitude == 1 else f"{magnitude}{monomial}"
        else:
            text = str(magnitude)

        if not parts:
            parts.append(text if value > 0 else f"-{text}")
        else:
            parts.append(f"+ {text}" if value > 0 else f"- {text}")

    return " ".join(parts)


def hsp_split(spectrum: GroupRingElement) -> GroupRingElement:
    """Map a spectrum in ℤ[ℚ] to ℤ[ℚ/ℤ×ℤ] by r ↦ ({r}, [r])."""
    terms = []

    for (exponent,), value in spectrum.terms:
        fractional, whole = rational_split(exponent)
        terms.append(((fractional.representative, whole), value))

    return GroupRingElement(CYCLIC_INTEGER, terms)

