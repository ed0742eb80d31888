"""Reading and writing workspace files."""

import pathlib
import re
from typing import TYPE_CHECKING, Any, Callable, List, Optional, Union

import toml as toml_writer

from orbispec import error, logger
from orbispec.algebra.rational import as_rational
from orbispec.spectrum.hodge import MixedHodgeEigenDatum, read_hodge_csv
from orbispec.workspace.models import (
    SELF_KEYWORD,
    ChildModel,
    Document,
    ExplicitModel,
    GeneratorModel,
    GroupModel,
    HodgeModel,
    JobModel,
    NodeModel,
    Workspace,
)

if TYPE_CHECKING:  # lie to mypy, see https://github.com/python/mypy/issues/1153
    import tomllib as toml
else:
    try:
        import tomllib as toml
    except ImportError:
        import tomli as toml

log = logger.get_logger(__name__)

PathLike = Union[str, pathlib.Path]

THEOREMS = ("1", "2", "audit")
SHIFTS = ("literal", "reduced", "audit")
MODES = ("substitution", "geometric")

_POSITION = re.compile(r"line (\d+), column (\d+)")


def load_toml(path: PathLike) -> Document:
    """Parse a TOML file; syntax errors carry the line and column."""
    try:
        with open(path, "rb") as file:
            return toml.load(file)
    except toml.TOMLDecodeError as exc:
        line = getattr(exc, "lineno", None)
        column = getattr(exc, "colno", None)

        if line is None:
            match = _POSITION.search(str(exc))
            if match:
                line, column = int(match.group(1)), int(match.group(2))

        location = f"{path}:{line}:{column}" if line else str(path)
        raise error.WorkspaceError(str(exc), location)
    except OSError as exc:
        raise error.WorkspaceError(exc.strerror or str(exc), str(path))


def _require(table: Document, key: str, kind: type, location: str) -> Any:
    if key not in table:
        raise error.WorkspaceError(f"missing key {key!r}", location)

    value = table[key]
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise error.WorkspaceError(f"{key!r} must be an integer", location)
    if kind is not int and not isinstance(value, kind):
        raise error.WorkspaceError(
            f"{key!r} must be a {kind.__name__}", location
        )

    return value


def _optional_int(table: Document, key: str, location: str) -> Optional[int]:
    if key not in table:
        return None
    return _require(table, key, int, location)


def _int_list(value: Any, key: str, location: str) -> List[int]:
    if not isinstance(value, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in value
    ):
        raise error.WorkspaceError(
            f"{key!r} must be a list of integers", location
        )
    return value


def _parse_group(name: str, table: Document) -> GroupModel:
    location = f"groups.{name}"

    if "cyclic" in table:
        return GroupModel(name, cyclic=_require(table, "cyclic", int, location))

    if "wreath" in table:
        wreath = _require(table, "wreath", dict, location)
        return GroupModel(
            name,
            wreath_base=_require(wreath, "base", str, f"{location}.wreath"),
            wreath_degree=_require(wreath, "degree", int, f"{location}.wreath"),
        )

    order = _require(table, "order", int, location)
    flat = _int_list(
        _require(table, "table", list, location), "table", location
    )

    if len(flat) != order * order:
        raise error.WorkspaceError(
            f"table has {len(flat)} entries, expected {order * order}", location
        )

    names = table.get("names", [])
    if not isinstance(names, list) or not all(
        isinstance(n, str) for n in names
    ):
        raise error.WorkspaceError(
            "'names' must be a list of strings", location
        )

    return GroupModel(
        name, order=order, table=tuple(flat), names=tuple(names)
    )


def _parse_hodge(name: str, table: Document, base: pathlib.Path) -> HodgeModel:
    location = f"hodge.{name}"

    try:
        if "csv" in table:
            path = base / _require(table, "csv", str, location)
            rows = read_hodge_csv(path.read_text())
        else:
            rows = [
                MixedHodgeEigenDatum.parse(row)
                for row in _require(table, "rows", list, location)
            ]
    except OSError as exc:
        raise error.WorkspaceError(exc.strerror or str(exc), location)
    except (ValueError, TypeError, AttributeError) as exc:
        raise error.WorkspaceError(str(exc), location)

    return HodgeModel(name, tuple(rows))


def _parse_explicit(name: str, table: Document) -> ExplicitModel:
    location = f"explicit.{name}"

    if "brieskorn" in table:
        return ExplicitModel(
            name,
            brieskorn=_require(table, "brieskorn", int, location),
            subgroup=_optional_int(table, "subgroup", location) or 1,
        )

    generators = []
    for position, entry in enumerate(
        _require(table, "generators", list, location)
    ):
        entry_location = f"{location}.generators[{position}]"
        if not isinstance(entry, dict):
            raise error.WorkspaceError(
                "generator must be a table", entry_location
            )
        generators.append(
            GeneratorModel(
                _require(entry, "element", int, entry_location),
                tuple(
                    _int_list(
                        _require(entry, "images", list, entry_location),
                        "images",
                        entry_location,
                    )
                ),
            )
        )

    return ExplicitModel(
        name,
        group=_require(table, "group", str, location),
        points=_require(table, "points", int, location),
        generators=tuple(generators),
        phi=tuple(
            _int_list(_require(table, "phi", list, location), "phi", location)
        ),
    )


def _parse_node(name: str, table: Document) -> NodeModel:
    location = f"nodes.{name}"

    dimension = table.get("dim", "mixed")
    if dimension == "mixed":
        dimension = None
    elif isinstance(dimension, bool) or not isinstance(dimension, int):
        raise error.WorkspaceError(
            "'dim' must be an integer or 'mixed'", location
        )

    children = []
    for position, entry in enumerate(table.get("children", [])):
        entry_location = f"{location}.children[{position}]"
        if not isinstance(entry, dict):
            raise error.WorkspaceError("child must be a table", entry_location)

        beta = entry.get("beta", "0")
        try:
            beta = as_rational(
                beta if isinstance(beta, (int, str)) else str(beta)
            )
        except (TypeError, ValueError, ZeroDivisionError):
            raise error.WorkspaceError(
                f"age {entry.get('beta')!r} is not an exact rational",
                entry_location,
            )

        children.append(
            ChildModel(
                _require(entry, "class", int, entry_location),
                beta,
                _require(entry, "node", str, entry_location),
            )
        )

    return NodeModel(
        name,
        dimension,
        _require(table, "group", str, location),
        _require(table, "hodge", str, location),
        _require(table, "depth", int, location),
        tuple(children),
    )


def _choice(
    table: Document, key: str, choices: tuple, location: str
) -> Optional[str]:
    if key not in table:
        return None

    value = str(table[key])
    if value not in choices:
        raise error.WorkspaceError(
            f"{key!r} must be one of {', '.join(choices)}, not {value!r}",
            location,
        )
    return value


def _parse_job(position: int, table: Document) -> JobModel:
    location = f"jobs[{position}]"
    if not isinstance(table, dict):
        raise error.WorkspaceError("job must be a table", location)

    theorem = _choice(table, "theorem", THEOREMS, location)
    if theorem is None:
        raise error.WorkspaceError("missing key 'theorem'", location)

    return JobModel(
        name=str(table.get("name", f"job-{position}")),
        theorem=theorem,
        fixture=_require(table, "fixture", str, location),
        k=_optional_int(table, "k", location),
        truncation=_optional_int(table, "N", location),
        n_max=_optional_int(table, "n_max", location),
        shift=_choice(table, "shift", SHIFTS, location),
        mode=_choice(table, "mode", MODES, location),
    )


def _section(
    document: Document, key: str, parse: Callable[[str, Document], Any]
) -> tuple:
    section = document.get(key, {})
    if not isinstance(section, dict):
        raise error.WorkspaceError("must be a table", key)

    models = []
    for name, table in section.items():
        if not isinstance(table, dict):
            raise error.WorkspaceError("must be a table", f"{key}.{name}")
        models.append(parse(name, table))

    return tuple(models)


def parse_workspace(
    document: Document, path: Optional[PathLike] = None
) -> Workspace:
    """Turn a parsed TOML document into workspace declarations."""
    base = pathlib.Path(path).parent if path else pathlib.Path(".")

    unknown = set(document) - {"groups", "hodge", "explicit", "nodes", "jobs"}
    if unknown:
        raise error.WorkspaceError(
            f"unknown sections {', '.join(sorted(unknown))}",
            str(path) if path else None,
        )

    jobs = document.get("jobs", [])
    if not isinstance(jobs, list):
        raise error.WorkspaceError("must be an array of tables", "jobs")

    workspace = Workspace(
        groups=_section(document, "groups", _parse_group),
        hodge=_section(
            document,
            "hodge",
            lambda name, table: _parse_hodge(name, table, base),
        ),
        explicit=_section(document, "explicit", _parse_explicit),
        nodes=_section(document, "nodes", _parse_node),
        jobs=tuple(
            _parse_job(position, job) for position, job in enumerate(jobs)
        ),
        path=str(path) if path else None,
    )

    names = workspace.fixture_names()
    duplicates = sorted({name for name in names if names.count(name) > 1})
    if duplicates:
        raise error.WorkspaceError(
            f"fixture names must be unique across hodge, explicit and nodes: "
            f"{', '.join(duplicates)}"
        )

    if SELF_KEYWORD in names:
        raise error.WorkspaceError(f"{SELF_KEYWORD!r} is a reserved name")

    return workspace


def read_workspace(path: PathLike) -> Workspace:
    workspace = parse_workspace(load_toml(path), path)

    log.debug(
        "read_workspace: %s with %d fixtures and %d jobs",
        path,
        len(workspace.fixture_names()),
        len(workspace.jobs),
    )

    return workspace


def loads_workspace(text: str, path: Optional[PathLike] = None) -> Workspace:
    try:
        document = toml.loads(text)
    except toml.TOMLDecodeError as exc:
        raise error.WorkspaceError(str(exc), str(path) if path else None)

    return parse_workspace(document, path)


def dump_workspace(workspace: Workspace) -> str:
    """Serialize declarations back to TOML; hodge blocks are written inline."""
    return toml_writer.dumps(workspace.to_document())
