import csv
import enum
import io
from typing import Callable, Dict

from orbispec import logger
from orbispec.algebra.ring import GroupRingElement, format_label
from orbispec.spectrum.hodge import hsp_to_poincare
from orbispec.spectrum.tower import TripleNode, e_k, hsp2_k, hsp3_k, hsp_k
from orbispec.workspace.manager import WorkspaceManager

log = logger.get_logger(__name__)


class Kind(str, enum.Enum):
    HSP = "hsp"
    PAIR = "pair"
    TRIPLE = "triple"
    EHD = "ehd"
    POINCARE = "poincare"


class Format(str, enum.Enum):
    CSV = "csv"
    TEXT = "text"


_VIEWS: Dict[Kind, Callable[[TripleNode, int], GroupRingElement]] = {
    Kind.HSP: hsp_k,
    Kind.PAIR: hsp2_k,
    Kind.TRIPLE: hsp3_k,
    Kind.EHD: e_k,
    Kind.POINCARE: hsp_k,
}


def render_element(element: GroupRingElement, output_format: Format) -> str:
    if Format(output_format) is Format.TEXT:
        return str(element)

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")

    for label, coefficient in element.terms:
        writer.writerow([format_label(label), coefficient])

    return buffer.getvalue().rstrip("\n")


def render_spectrum(
    manager: WorkspaceManager,
    target: str,
    order: int,
    kind: Kind,
    output_format: Format,
) -> str:
    """The order-k spectrum of ``target`` in the requested view."""
    kind = Kind(kind)
    node = manager.target_node(target, order)
    element = _VIEWS[kind](node, order)

    log.debug("render_spectrum: %s order %d as %s", target, order, kind.value)

    if kind is Kind.POINCARE:
        return hsp_to_poincare(element)

    return render_element(element, output_format)
