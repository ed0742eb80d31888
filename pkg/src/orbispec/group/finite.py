"""Finite groups given by multiplication tables on the indices 0..n-1."""

from dataclasses import dataclass
from typing import Callable, Hashable, List, Optional, Sequence, Tuple

from orbispec import error, logger

log = logger.get_logger(__name__)


class FiniteGroup:
    """A finite group; ``table[a][b]`` is the index of the product a·b."""

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        names: Optional[Sequence[str]] = None,
        verify: bool = True,
    ) -> None:
        self._table = tuple(tuple(int(x) for x in row) for row in table)
        order = len(self._table)

        if not order:
            raise error.GroupTableError("multiplication table is empty")

        if any(len(row) != order for row in self._table):
            raise error.GroupTableError("multiplication table is not square")

        if any(x < 0 or x >= order for row in self._table for x in row):
            raise error.GroupTableError(
                f"multiplication table has entries outside 0..{order - 1}"
            )

        if names is not None and len(names) != order:
            raise error.GroupTableError(
                f"{len(names)} element names for a group of order {order}"
            )

        self._names = (
            tuple(names)
            if names is not None
            else tuple(str(index) for index in range(order))
        )
        self._identity = self._find_identity()
        self._inverses = self._find_inverses()
        self._conjugacy: Optional["ConjugacyData"] = None

        if verify:
            self._verify()

    @classmethod
    def cyclic(cls, order: int) -> "FiniteGroup":
        """ℤ/n with element i standing for the generator to the i-th."""
        if order < 1:
            raise error.GroupTableError(f"cyclic group of order {order}")

        return cls(
            [[(a + b) % order for b in range(order)] for a in range(order)],
            verify=False,
        )

    @classmethod
    def trivial(cls) -> "FiniteGroup":
        return cls.cyclic(1)

    @classmethod
    def from_function(
        cls,
        elements: Sequence[Hashable],
        multiply: Callable[[Hashable, Hashable], Hashable],
        verify: bool = True,
    ) -> "FiniteGroup":
        index = {element: position for position, element in enumerate(elements)}

        try:
            table = [
                [index[multiply(a, b)] for b in elements] for a in elements
            ]
        except KeyError as exc:
            raise error.GroupTableError(f"product {exc} is not an element")

        return cls(table, [str(element) for element in elements], verify)

    @property
    def order(self) -> int:
        return len(self._table)

    @property
    def identity(self) -> int:
        return self._identity

    @property
    def table(self) -> Tuple[Tuple[int, ...], ...]:
        return self._table

    @property
    def names(self) -> Tuple[str, ...]:
        return self._names

    def multiply(self, a: int, b: int) -> int:
        return self._table[a][b]

    def inverse(self, a: int) -> int:
        return self._inverses[a]

    def conjugate(self, h: int, x: int) -> int:
        """h·x·h⁻¹."""
        return self._table[self._table[h][x]][self._inverses[h]]

    def commutes(self, a: int, b: int) -> bool:
        return self._table[a][b] == self._table[b][a]

    def is_abelian(self) -> bool:
        return all(
            self.commutes(a, b)
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    def subgroup(
        self, members: Sequence[int]
    ) -> Tuple["FiniteGroup", Tuple[int, ...]]:
        """The subgroup on ``members`` with its own indices; position i of the
        returned tuple is the parent index of the subgroup's element i."""
        members = tuple(sorted(members))
        position = {element: index for index, element in enumerate(members)}

        try:
            table = [
                [position[self._table[a][b]] for b in members] for a in members
            ]
        except KeyError:
            raise error.GroupTableError(
                f"elements {members!r} are not closed under multiplication"
            )

        names = [self._names[element] for element in members]

        return FiniteGroup(table, names, verify=False), members

    def _find_identity(self) -> int:
        order = len(self._table)

        for candidate in range(order):
            if all(
                self._table[candidate][x] == x
                and self._table[x][candidate] == x
                for x in range(order)
            ):
                return candidate

        raise error.GroupTableError("multiplication table has no identity")

    def _find_inverses(self) -> Tuple[int, ...]:
        inverses = []

        for a, row in enumerate(self._table):
            try:
                b = row.index(self._identity)
            except ValueError:
                raise error.GroupTableError(f"element {a} has no inverse")

            if self._table[b][a] != self._identity:
                raise error.GroupTableError(
                    f"element {a} has no two-sided inverse"
                )

            inverses.append(b)

        return tuple(inverses)

    def _verify(self) -> None:
        order = len(self._table)
        everything = set(range(order))

        for a, row in enumerate(self._table):
            if set(row) != everything:
                raise error.GroupTableError(
                    f"row {a} of the multiplication table is not a permutation"
                )

        table = self._table

        for a in range(order):
            for b in range(order):
                ab = table[a][b]
                for c in range(order):
                    if table[ab][c] != table[a][table[b][c]]:
                        raise error.GroupTableError(
                            f"multiplication is not associative at "
                            f"({a}, {b}, {c})"
                        )

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


@dataclass(frozen=True)
class ConjugacyData:
    """Conjugacy classes ordered by their smallest element, with the smallest
    element as representative and the centralizer of each representative."""

    classes: Tuple[Tuple[int, ...], ...]
    representatives: Tuple[int, ...]
    centralizers: Tuple[Tuple[int, ...], ...]
    class_index: Tuple[int, ...]

    def class_of(self, element: int) -> int:
        return self.class_index[element]

    def __len__(self) -> int:
        return len(self.classes)


def conjugacy_classes(group: FiniteGroup) -> ConjugacyData:
    """Classes, representatives and centralizers; computed once per group."""
    if group._conjugacy is not None:
        return group._conjugacy

    order = group.order
    class_index: List[int] = [-1] * order
    classes: List[Tuple[int, ...]] = []

    for element in range(order):
        if class_index[element] >= 0:
            continue

        members = sorted({group.conjugate(h, element) for h in range(order)})
        for member in members:
            class_index[member] = len(classes)
        classes.append(tuple(members))

    representatives = tuple(members[0] for members in classes)
    centralizers = tuple(
        tuple(h for h in range(order) if group.commutes(h, representative))
        for representative in representatives
    )

    log.debug(
        "conjugacy_classes: %d classes in a group of order %d",
        len(classes),
        order,
    )

    group._conjugacy = ConjugacyData(
        tuple(classes), representatives, centralizers, tuple(class_index)
    )

    return group._conjugacy


def centralizer(group: FiniteGroup, element: int) -> Tuple[int, ...]:
    return tuple(h for h in range(group.order) if group.commutes(h, element))
