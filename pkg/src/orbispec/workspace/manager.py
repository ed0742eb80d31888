from typing import Dict, List, Optional, Set

from orbispec import error, logger
from orbispec.algebra.ring import GroupRingElement
from orbispec.group.finite import FiniteGroup
from orbispec.group.wreath import wreath_product
from orbispec.spectrum.explicit import (
    ExplicitGSet,
    brieskorn_zero_dim,
    node_from_explicit,
)
from orbispec.spectrum.hodge import MixedHodgeEigenDatum, ehd_from_data
from orbispec.spectrum.tower import SELF, Child, TripleNode, trivial_node
from orbispec.verify.fixture import Theorem2Fixture
from orbispec.workspace.models import SELF_KEYWORD, Workspace
from orbispec.workspace.utils import PathLike, read_workspace

log = logger.get_logger(__name__)


class WorkspaceManager:
    """Builds, validates and caches everything a workspace declares."""

    def __init__(self, workspace: Workspace) -> None:
        self.workspace = workspace

        self._group_models = {model.name: model for model in workspace.groups}
        self._hodge_models = {model.name: model for model in workspace.hodge}
        self._explicit_models = {
            model.name: model for model in workspace.explicit
        }
        self._node_models = {model.name: model for model in workspace.nodes}

        self._groups: Dict[str, FiniteGroup] = {}
        self._explicit: Dict[str, ExplicitGSet] = {}
        self._nodes: Dict[str, TripleNode] = {}

    @classmethod
    def load(cls, path: PathLike) -> "WorkspaceManager":
        """Read a workspace file and build all of it, so that every error
        surfaces before any computation starts."""
        manager = cls(read_workspace(path))
        manager.build()
        return manager

    def build(self) -> None:
        for name in self._group_models:
            self.group(name)
        for name in self._explicit_models:
            self.explicit(name)
        for name in self._node_models:
            self.node(name)

        for position, job in enumerate(self.workspace.jobs):
            location = f"jobs[{position}]"
            if job.theorem == "1" and job.fixture not in self._hodge_models:
                raise error.WorkspaceError(
                    f"theorem 1 needs a hodge block, "
                    f"{job.fixture!r} is not one",
                    location,
                )
            if job.theorem != "1" and job.fixture not in (
                set(self._explicit_models) | set(self._node_models)
            ):
                raise error.WorkspaceError(
                    f"{job.fixture!r} is neither an explicit triple nor a node",
                    location,
                )

    def group(self, name: str, location: Optional[str] = None) -> FiniteGroup:
        if name in self._groups:
            return self._groups[name]

        model = self._group_models.get(name)
        if model is None:
            raise error.WorkspaceError(f"unknown group {name!r}", location)

        location = f"groups.{name}"

        try:
            if model.cyclic is not None:
                group = FiniteGroup.cyclic(model.cyclic)
            elif model.wreath_base is not None:
                if model.wreath_base == name:
                    raise error.WorkspaceError("wreath of itself", location)
                group = wreath_product(
                    self.group(model.wreath_base, location),
                    int(model.wreath_degree or 1),
                )
            else:
                order = int(model.order or 0)
                table = [
                    list(model.table[row * order : (row + 1) * order])
                    for row in range(order)
                ]
                group = FiniteGroup(table, model.names or None)
        except error.WorkspaceError:
            raise
        except ValueError as exc:
            raise error.WorkspaceError(str(exc), location)

        self._groups[name] = group
        return group

    def hodge(self, name: str) -> List[MixedHodgeEigenDatum]:
        model = self._hodge_models.get(name)
        if model is None:
            raise error.WorkspaceError(f"unknown hodge block {name!r}")

        return list(model.rows)

    def hodge_class(self, name: str) -> GroupRingElement:
        return ehd_from_data(self.hodge(name))

    def explicit(self, name: str) -> ExplicitGSet:
        if name in self._explicit:
            return self._explicit[name]

        model = self._explicit_models.get(name)
        if model is None:
            raise error.WorkspaceError(f"unknown explicit triple {name!r}")

        location = f"explicit.{name}"

        try:
            if model.brieskorn is not None:
                space = brieskorn_zero_dim(model.brieskorn, model.subgroup or 1)
                space.name = name
            else:
                group = self.group(str(model.group), location)
                space = ExplicitGSet.from_generators(
                    group,
                    int(model.points or 0),
                    {
                        generator.element: generator.images
                        for generator in model.generators
                    },
                    model.phi,
                    name=name,
                )
        except error.WorkspaceError:
            raise
        except ValueError as exc:
            raise error.WorkspaceError(str(exc), location)

        self._explicit[name] = space
        return space

    def node(
        self, name: str, _visiting: Optional[Set[str]] = None
    ) -> TripleNode:
        if name in self._nodes:
            return self._nodes[name]

        model = self._node_models.get(name)
        if model is None:
            raise error.WorkspaceError(f"unknown node {name!r}")

        location = f"nodes.{name}"
        visiting = set() if _visiting is None else _visiting

        if name in visiting:
            raise error.WorkspaceError(
                "children refer back to this node", location
            )
        visiting.add(name)

        group = self.group(model.group, location)
        if model.hodge not in self._hodge_models:
            raise error.WorkspaceError(
                f"unknown hodge block {model.hodge!r}", location
            )

        children: Dict[tuple, Child] = {}
        for position, child in enumerate(model.children):
            key = (child.class_index, child.beta)
            if key in children:
                raise error.WorkspaceError(
                    f"class {child.class_index} with age {child.beta} is "
                    "listed twice",
                    f"{location}.children[{position}]",
                )
            children[key] = (
                SELF
                if child.node == SELF_KEYWORD
                else self.node(child.node, visiting)
            )

        try:
            node = TripleNode(
                group,
                self.hodge_class(model.hodge),
                children,
                model.depth,
                model.dimension,
                name,
            )
        except ValueError as exc:
            raise error.WorkspaceError(str(exc), location)

        visiting.discard(name)
        self._nodes[name] = node
        return node

    def theorem2_fixture(self, name: str) -> Theorem2Fixture:
        if name in self._explicit_models:
            return Theorem2Fixture.from_explicit(name, self.explicit(name))

        if name in self._node_models:
            return Theorem2Fixture.from_node(name, self.node(name))

        raise error.WorkspaceError(
            f"{name!r} is neither an explicit triple nor a node"
        )

    def theorem2_fixtures(self) -> List[str]:
        return list(self._explicit_models) + list(self._node_models)

    def target_node(self, name: str, order: int) -> TripleNode:
        """The node a spectrum is computed on: explicit triples are expanded
        to the requested order, hodge blocks become trivial-group nodes."""
        if name in self._explicit_models:
            return node_from_explicit(self.explicit(name), order)

        if name in self._node_models:
            return self.node(name)

        if name in self._hodge_models:
            return trivial_node(self.hodge_class(name), order, name=name)

        raise error.WorkspaceError(f"unknown target {name!r}")
