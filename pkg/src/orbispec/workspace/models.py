"""The declarations a workspace file is made of.

These are plain descriptions; ``WorkspaceManager`` turns them into groups,
explicit triples and nodes. ``to_document`` gives back the TOML shape."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from orbispec.algebra.rational import format_rational
from orbispec.spectrum.hodge import MixedHodgeEigenDatum

Document = Dict[str, Any]


@dataclass(frozen=True)
class GroupModel:
    name: str
    cyclic: Optional[int] = None
    order: Optional[int] = None
    table: Tuple[int, ...] = ()
    names: Tuple[str, ...] = ()
    wreath_base: Optional[str] = None
    wreath_degree: Optional[int] = None

    def to_document(self) -> Document:
        if self.cyclic is not None:
            return {"cyclic": self.cyclic}

        if self.wreath_base is not None:
            return {
                "wreath": {
                    "base": self.wreath_base,
                    "degree": self.wreath_degree,
                }
            }

        document: Document = {"order": self.order, "table": list(self.table)}
        if self.names:
            document["names"] = list(self.names)

        return document


@dataclass(frozen=True)
class HodgeModel:
    name: str
    rows: Tuple[MixedHodgeEigenDatum, ...]

    def to_document(self) -> Document:
        return {"rows": [str(row) for row in self.rows]}


@dataclass(frozen=True)
class GeneratorModel:
    element: int
    images: Tuple[int, ...]


@dataclass(frozen=True)
class ExplicitModel:
    name: str
    brieskorn: Optional[int] = None
    subgroup: Optional[int] = None
    group: Optional[str] = None
    points: Optional[int] = None
    generators: Tuple[GeneratorModel, ...] = ()
    phi: Tuple[int, ...] = ()

    def to_document(self) -> Document:
        if self.brieskorn is not None:
            return {"brieskorn": self.brieskorn, "subgroup": self.subgroup}

        return {
            "group": self.group,
            "points": self.points,
            "generators": [
                {"element": generator.element, "images": list(generator.images)}
                for generator in self.generators
            ],
            "phi": list(self.phi),
        }


SELF_KEYWORD = "self"


@dataclass(frozen=True)
class ChildModel:
    class_index: int
    beta: Fraction
    node: str


@dataclass(frozen=True)
class NodeModel:
    name: str
    dimension: Optional[int]
    group: str
    hodge: str
    depth: int
    children: Tuple[ChildModel, ...] = ()

    def to_document(self) -> Document:
        document: Document = {
            "dim": "mixed" if self.dimension is None else self.dimension,
            "group": self.group,
            "hodge": self.hodge,
            "depth": self.depth,
        }

        if self.children:
            document["children"] = [
                {
                    "class": child.class_index,
                    "beta": format_rational(child.beta),
                    "node": child.node,
                }
                for child in self.children
            ]

        return document


@dataclass(frozen=True)
class JobModel:
    name: str
    theorem: str
    fixture: str
    k: Optional[int] = None
    truncation: Optional[int] = None
    n_max: Optional[int] = None
    shift: Optional[str] = None
    mode: Optional[str] = None

    def to_document(self) -> Document:
        document: Document = {
            "name": self.name,
            "theorem": self.theorem,
            "fixture": self.fixture,
        }

        for key, value in (
            ("k", self.k),
            ("N", self.truncation),
            ("n_max", self.n_max),
            ("shift", self.shift),
            ("mode", self.mode),
        ):
            if value is not None:
                document[key] = value

        return document


@dataclass(frozen=True)
class Workspace:
    groups: Tuple[GroupModel, ...] = ()
    hodge: Tuple[HodgeModel, ...] = ()
    explicit: Tuple[ExplicitModel, ...] = ()
    nodes: Tuple[NodeModel, ...] = ()
    jobs: Tuple[JobModel, ...] = ()
    path: Optional[str] = field(default=None, compare=False)

    def to_document(self) -> Document:
        document: Document = {}

        for key, models in (
            ("groups", self.groups),
            ("hodge", self.hodge),
            ("explicit", self.explicit),
            ("nodes", self.nodes),
        ):
            if models:
                document[key] = {
                    model.name: model.to_document() for model in models
                }

        if self.jobs:
            document["jobs"] = [job.to_document() for job in self.jobs]

        return document

    def fixture_names(self) -> List[str]:
        return (
            [model.name for model in self.hodge]
            + [model.name for model in self.explicit]
            + [model.name for model in self.nodes]
        )
