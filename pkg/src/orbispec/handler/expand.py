import enum
import re

from orbispec import error, logger
from orbispec.algebra.power import Mode, power_direct_formula, power_expand
from orbispec.algebra.ring import EffectiveMapClass, GradingGroup, parse_element
from orbispec.algebra.series import parse_series

log = logger.get_logger(__name__)

_EXPRESSION = re.compile(
    r"^\s*\((?P<series>.*)\)\s*\^\s*(?P<exponent>.+?)\s*$", re.DOTALL
)


class ExpandMode(str, enum.Enum):
    SUBSTITUTION = "substitution"
    GEOMETRIC = "geometric"
    FORMULA = "formula"


def expand_expression(
    expression: str, order: int, mode: ExpandMode, signature: str
) -> str:
    """Evaluate ``(<series>)^<element>`` to order ``order``."""
    match = _EXPRESSION.match(expression)
    if not match:
        raise error.ElementSyntaxError(
            f"expected an expression of the form (<series>)^<exponent>, "
            f"got {expression!r}"
        )

    group = GradingGroup.parse(signature)
    series = parse_series(match.group("series"), group, order)
    exponent = parse_element(match.group("exponent"), group)
    mode = ExpandMode(mode)

    log.debug("expand_expression: %s in %s mode", expression, mode.value)

    if mode is ExpandMode.FORMULA:
        result = power_direct_formula(
            series, EffectiveMapClass.from_element(exponent)
        )
    else:
        result = power_expand(series, exponent, Mode(mode.value))

    return str(result)
