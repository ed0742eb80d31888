"""Zero dimensional triples given explicitly: a finite set X with a group G
acting by permutations and an automorphism φ commuting with G.

For such a triple every cohomology class sits in degree 0 with (p, q) =
(0, 0), so e(X/G, φ̂) is read off the cycles of φ̂ on the orbits and the
whole fixed-point tower can be built mechanically."""

from collections import deque
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from orbispec import error, logger
from orbispec.algebra.ring import TRIPLE, GroupRingElement
from orbispec.group.finite import FiniteGroup, conjugacy_classes
from orbispec.group.wreath import wreath_product
from orbispec.spectrum.tower import SELF, Child, ChildKey, TripleNode

log = logger.get_logger(__name__)

Permutation = Tuple[int, ...]


def _is_permutation(images: Sequence[int], size: int) -> bool:
    return sorted(images) == list(range(size))


class ExplicitGSet:
    """``action[g]`` is the permutation of the points 0..size-1 induced by
    the group element g; ``phi`` is the automorphism."""

    def __init__(
        self,
        group: FiniteGroup,
        action: Sequence[Sequence[int]],
        phi: Sequence[int],
        verify: bool = True,
        name: Optional[str] = None,
    ) -> None:
        self.group = group
        self.action: Tuple[Permutation, ...] = tuple(
            tuple(int(x) for x in images) for images in action
        )
        self.phi: Permutation = tuple(int(x) for x in phi)
        self.name = name

        if verify:
            self._verify()

    @classmethod
    def from_generators(
        cls,
        group: FiniteGroup,
        size: int,
        generators: Mapping[int, Sequence[int]],
        phi: Sequence[int],
        name: Optional[str] = None,
    ) -> "ExplicitGSet":
        """Extend the permutation images of generators to the whole group."""
        identity = tuple(range(size))

        for element, images in generators.items():
            if not 0 <= element < group.order:
                raise error.ActionError(
                    f"generator {element} is not an element of the group"
                )
            if not _is_permutation(images, size):
                raise error.ActionError(
                    f"images {list(images)!r} of generator {element} are not "
                    f"a permutation of 0..{size - 1}"
                )

        known: Dict[int, Permutation] = {group.identity: identity}
        queue = deque([group.identity])

        while queue:
            current = queue.popleft()
            for element, images in generators.items():
                product = group.multiply(current, element)
                composed = tuple(known[current][images[x]] for x in range(size))

                if product not in known:
                    known[product] = composed
                    queue.append(product)
                elif known[product] != composed:
                    raise error.ActionError(
                        f"generator images do not define a homomorphism at "
                        f"element {product}"
                    )

        if len(known) != group.order:
            raise error.GroupTableError(
                f"generators reach {len(known)} of {group.order} elements"
            )

        action = [known[element] for element in range(group.order)]

        return cls(group, action, phi, verify=True, name=name)

    @property
    def size(self) -> int:
        return len(self.phi)

    def _verify(self) -> None:
        size = self.size

        if len(self.action) != self.group.order:
            raise error.ActionError(
                f"{len(self.action)} permutations for a group of order "
                f"{self.group.order}"
            )

        if not _is_permutation(self.phi, size):
            raise error.ActionError(
                f"phi {list(self.phi)!r} is not a permutation of 0..{size - 1}"
            )

        for element, images in enumerate(self.action):
            if not _is_permutation(images, size):
                raise error.ActionError(
                    f"element {element} does not act by a permutation"
                )

        if self.action[self.group.identity] != tuple(range(size)):
            raise error.ActionError("the identity does not act trivially")

        table = self.group.table
        for a, left in enumerate(self.action):
            for b, right in enumerate(self.action):
                composed = self.action[table[a][b]]
                if any(composed[x] != left[right[x]] for x in range(size)):
                    raise error.ActionError(
                        f"the action is not a homomorphism at ({a}, {b})"
                    )

        for element, images in enumerate(self.action):
            if any(
                self.phi[images[x]] != images[self.phi[x]] for x in range(size)
            ):
                raise error.CommutationError(
                    f"phi does not commute with group element {element}"
                )

    def fixed_points(self, element: int) -> List[int]:
        images = self.action[element]
        return [x for x in range(self.size) if images[x] == x]

    def orbits(self) -> List[Tuple[int, ...]]:
        """The G-orbits, each sorted, ordered by their smallest point."""
        seen = [False] * self.size
        orbits = []

        for start in range(self.size):
            if seen[start]:
                continue
            orbit = sorted({images[start] for images in self.action})
            for x in orbit:
                seen[x] = True
            orbits.append(tuple(orbit))

        return orbits

    def quotient_hodge(self) -> GroupRingElement:
        """e(X/G, φ̂): a cycle of φ̂ of length ℓ on the orbits contributes
        Σⱼ {(j/ℓ, 0, 0)}."""
        orbits = self.orbits()
        orbit_of = {
            x: index for index, orbit in enumerate(orbits) for x in orbit
        }
        induced = [orbit_of[self.phi[orbit[0]]] for orbit in orbits]

        visited = [False] * len(orbits)
        terms: Dict[Tuple[Fraction, int, int], int] = {}

        for start in range(len(orbits)):
            if visited[start]:
                continue

            length = 0
            current = start
            while not visited[current]:
                visited[current] = True
                current = induced[current]
                length += 1

            for j in range(length):
                label = (Fraction(j, length), 0, 0)
                terms[label] = terms.get(label, 0) + 1

        return GroupRingElement(TRIPLE, terms)

    def restrict(
        self,
        subgroup: FiniteGroup,
        members: Sequence[int],
        points: Sequence[int],
    ) -> "ExplicitGSet":
        """The triple (points, subgroup, φ) for a subgroup preserving
        ``points``; ``members[i]`` is the parent element of subgroup element
        i."""
        position = {x: index for index, x in enumerate(points)}
        action = [
            [position[self.action[element][x]] for x in points]
            for element in members
        ]
        phi = [position[self.phi[x]] for x in points]

        return ExplicitGSet(subgroup, action, phi, verify=False)


def node_from_explicit(space: ExplicitGSet, depth: int) -> TripleNode:
    """The fixed-point tower of an explicit triple down to ``depth``.

    Classes with an empty fixed set are left out; every age is 0."""
    if depth < 0:
        raise error.DepthError(f"node depth {depth} is negative")

    group = space.group
    conjugacy = conjugacy_classes(group)
    children: Dict[ChildKey, Child] = {}

    if depth >= 1:
        for index, representative in enumerate(conjugacy.representatives):
            if representative == group.identity:
                children[(index, Fraction(0))] = SELF
                continue

            fixed = space.fixed_points(representative)
            if not fixed:
                continue

            centralizer, members = group.subgroup(conjugacy.centralizers[index])
            children[(index, Fraction(0))] = node_from_explicit(
                space.restrict(centralizer, members, fixed), depth - 1
            )

    return TripleNode(
        group,
        space.quotient_hodge(),
        children,
        depth,
        dimension=0,
        name=space.name,
    )


def brieskorn_zero_dim(a: int, order: int) -> ExplicitGSet:
    """The Milnor fibre {zᵃ = 1} of f = zᵃ with its monodromy z ↦ e[1/a]·z
    and the subgroup μ_order ⊂ μ_a acting by multiplication.

    Point x stands for e[x/a]; the monodromy is x ↦ x + 1 and the generator
    of μ_order is x ↦ x + a/order."""
    if a < 1:
        raise ValueError(f"brieskorn_zero_dim: exponent {a} is not positive")

    if order < 1 or a % order:
        raise error.GroupTableError(
            f"μ_{order} is not a subgroup of μ_{a}"
        )

    step = a // order
    group = FiniteGroup.cyclic(order)
    action = [
        [(x + element * step) % a for x in range(a)] for element in range(order)
    ]
    phi = [(x + 1) % a for x in range(a)]

    return ExplicitGSet(group, action, phi, name=f"z^{a}/mu_{order}")


def cartesian_power(
    space: ExplicitGSet, degree: int, bound: Optional[int] = None
) -> ExplicitGSet:
    """(Xⁿ, G≀Sₙ, φ⁽ⁿ⁾) with φ acting on every factor."""
    wreath = wreath_product(space.group, degree, bound)
    size = space.size
    points = [
        tuple((index // size**i) % size for i in reversed(range(degree)))
        for index in range(size**degree)
    ]
    position = {point: index for index, point in enumerate(points)}
    base_action = [list(images) for images in space.action]

    action = [
        [position[wreath.act(element, point, base_action)] for point in points]
        for element in range(wreath.order)
    ]
    phi = [
        position[tuple(space.phi[x] for x in point)] for point in points
    ]

    log.debug(
        "cartesian_power: %d points, group of order %d",
        len(points),
        wreath.order,
    )

    name = f"{space.name}^{degree}" if space.name else None
    return ExplicitGSet(wreath, action, phi, verify=False, name=name)
