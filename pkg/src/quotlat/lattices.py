"""The four quotient lattices and the duality maps between them.

Elements are atom-index sets: a union or intersection of quotients is
exactly determined by which atoms it contains, so lattice algebra reduces
to set algebra on indices.  Union lattices close the quotients under
union (the empty union giving the bottom element); intersection lattices
close them under intersection (the empty intersection giving the set of
all words as top element).
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import Nfa
from .decomposition import (
    LanguageDecomposition,
    left_atom_union_language,
    right_atom_union_language,
)

UNION = "union"
INTERSECTION = "intersection"
LEFT = "left"
RIGHT = "right"


class ElementNotInLattice(ValueError):
    """A join/meet operand does not belong to the lattice."""


@dataclass(frozen=True)
class LatticeKind:
    """One of the four lattices: {union, intersection} x {left, right}."""

    operation: str
    side: str

    def __post_init__(self):
        if self.operation not in (UNION, INTERSECTION):
            raise ValueError(f"unknown operation {self.operation!r}")
        if self.side not in (LEFT, RIGHT):
            raise ValueError(f"unknown side {self.side!r}")

    @property
    def name(self) -> str:
        return f"{self.operation}-{self.side}"

    @classmethod
    def from_name(cls, name: str) -> LatticeKind:
        try:
            operation, side = name.split("-")
        except ValueError:
            raise ValueError(f"bad lattice kind {name!r}") from None
        return cls(operation, side)


UNION_LEFT = LatticeKind(UNION, LEFT)
UNION_RIGHT = LatticeKind(UNION, RIGHT)
INTERSECTION_LEFT = LatticeKind(INTERSECTION, LEFT)
INTERSECTION_RIGHT = LatticeKind(INTERSECTION, RIGHT)
ALL_KINDS = (UNION_LEFT, UNION_RIGHT, INTERSECTION_LEFT, INTERSECTION_RIGHT)


@dataclass(frozen=True)
class LatticeElement:
    """A lattice element as the set of atom indices it contains."""

    atoms: frozenset[int]
    kind: LatticeKind


def _element_sort_key(atoms: frozenset[int]):
    return len(atoms), tuple(sorted(atoms))


@dataclass(frozen=True)
class QuotientLattice:
    """A closure of the quotients of one side under union or intersection,
    ordered by containment of atom sets."""

    kind: LatticeKind
    elements: tuple[LatticeElement, ...]
    generators: tuple[frozenset[int], ...]
    universe: frozenset[int]

    def __contains__(self, element: LatticeElement) -> bool:
        return element in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def element(self, atoms) -> LatticeElement:
        candidate = LatticeElement(frozenset(atoms), self.kind)
        if candidate not in self.elements:
            raise ElementNotInLattice(f"{sorted(atoms)} is not a lattice element")
        return candidate

    @property
    def bottom(self) -> LatticeElement:
        return self.elements[0]

    @property
    def top(self) -> LatticeElement:
        return self.elements[-1]

    def leq(self, a: LatticeElement, b: LatticeElement) -> bool:
        return a.atoms <= b.atoms


def build_lattice(d: LanguageDecomposition, kind: LatticeKind) -> QuotientLattice:
    """Close the quotients of the chosen side under the chosen operation.

    Fixed-point iteration from the identity element (empty set for union,
    full atom set for intersection), combining with each generator until
    nothing new appears; elements are deduplicated by atom set and sorted
    by (size, indices) for canonical output.
    """
    if kind.side == LEFT:
        generators = d.left_quotients
        universe = frozenset(range(d.atom_count))
    else:
        generators = d.right_quotients
        universe = frozenset(range(d.quotient_count))

    seed = frozenset() if kind.operation == UNION else universe
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for atoms in frontier:
            for g in generators:
                combined = atoms | g if kind.operation == UNION else atoms & g
                if combined not in seen:
                    seen.add(combined)
                    nxt.append(combined)
        frontier = nxt
    ordered = sorted(seen, key=_element_sort_key)
    return QuotientLattice(
        kind=kind,
        elements=tuple(LatticeElement(atoms, kind) for atoms in ordered),
        generators=tuple(generators),
        universe=universe,
    )


def _require_member(lattice: QuotientLattice, element: LatticeElement):
    if element not in lattice.elements:
        raise ElementNotInLattice(
            f"{sorted(element.atoms)} is not in the {lattice.kind.name} lattice"
        )


def join(
    lattice: QuotientLattice, a: LatticeElement, b: LatticeElement
) -> LatticeElement:
    """Least upper bound: plain union in union lattices; in intersection
    lattices, the intersection of every generator containing both (the
    empty family giving the full atom set)."""
    _require_member(lattice, a)
    _require_member(lattice, b)
    if lattice.kind.operation == UNION:
        return LatticeElement(a.atoms | b.atoms, lattice.kind)
    combined = a.atoms | b.atoms
    result = lattice.universe
    for g in lattice.generators:
        if combined <= g:
            result &= g
    return LatticeElement(result, lattice.kind)


def meet(
    lattice: QuotientLattice, a: LatticeElement, b: LatticeElement
) -> LatticeElement:
    """Greatest lower bound: plain intersection in intersection lattices;
    in union lattices, the union of every generator contained in both."""
    _require_member(lattice, a)
    _require_member(lattice, b)
    if lattice.kind.operation == INTERSECTION:
        return LatticeElement(a.atoms & b.atoms, lattice.kind)
    combined = a.atoms & b.atoms
    result: frozenset[int] = frozenset()
    for g in lattice.generators:
        if g <= combined:
            result |= g
    return LatticeElement(result, lattice.kind)


def _require_kind(element: LatticeElement, kind: LatticeKind):
    if element.kind != kind:
        raise ValueError(
            f"expected a {kind.name} element, got {element.kind.name}"
        )


def psi(d: LanguageDecomposition, x: LatticeElement) -> LatticeElement:
    """Union-lattice duality map, left to right: the union of the right
    quotients indexed by the left atoms lying outside the argument."""
    _require_kind(x, UNION_LEFT)
    atoms = frozenset().union(
        *(d.right_quotients[i] for i in range(d.atom_count) if i not in x.atoms)
    )
    return LatticeElement(atoms, UNION_RIGHT)


def psi_prime(d: LanguageDecomposition, y: LatticeElement) -> LatticeElement:
    """Inverse of :func:`psi`: the union of the left quotients indexed by
    the right atoms lying outside the argument."""
    _require_kind(y, UNION_RIGHT)
    atoms = frozenset().union(
        *(d.left_quotients[i] for i in range(d.quotient_count) if i not in y.atoms)
    )
    return LatticeElement(atoms, UNION_LEFT)


def phi(d: LanguageDecomposition, x: LatticeElement) -> LatticeElement:
    """Intersection-lattice duality map, left to right: the intersection of
    the right quotients indexed by the left atoms inside the argument (the
    empty family giving all words)."""
    _require_kind(x, INTERSECTION_LEFT)
    parts = [d.right_quotients[j] for j in x.atoms]
    atoms = frozenset.intersection(*parts) if parts else frozenset(range(d.quotient_count))
    return LatticeElement(atoms, INTERSECTION_RIGHT)


def phi_prime(d: LanguageDecomposition, y: LatticeElement) -> LatticeElement:
    """Inverse of :func:`phi`."""
    _require_kind(y, INTERSECTION_RIGHT)
    parts = [d.left_quotients[j] for j in y.atoms]
    atoms = frozenset.intersection(*parts) if parts else frozenset(range(d.atom_count))
    return LatticeElement(atoms, INTERSECTION_LEFT)


@dataclass(frozen=True)
class DualityReport:
    """Verification record for one half of the duality theorem."""

    which: str
    size: int
    bijective: bool
    order_reversing: bool
    exchanges_meet_join: bool
    witnesses: tuple[str, ...]

    @property
    def success(self) -> bool:
        return (
            self.bijective
            and self.order_reversing
            and self.exchanges_meet_join
            and not self.witnesses
        )


def verify_duality(d: LanguageDecomposition, which: str) -> DualityReport:
    """Machine-check one duality: 'a' for the union lattices under the
    psi maps, 'b' for the intersection lattices under the phi maps.

    Checks that the map is a bijection with the stated inverse, reverses
    containment on every element pair, and sends joins to meets and meets
    to joins.  Witnesses list every violated instance.
    """
    if which == "a":
        left = build_lattice(d, UNION_LEFT)
        right = build_lattice(d, UNION_RIGHT)
        forward = lambda x: psi(d, x)  # noqa: E731
        backward = lambda y: psi_prime(d, y)  # noqa: E731
    elif which == "b":
        left = build_lattice(d, INTERSECTION_LEFT)
        right = build_lattice(d, INTERSECTION_RIGHT)
        forward = lambda x: phi(d, x)  # noqa: E731
        backward = lambda y: phi_prime(d, y)  # noqa: E731
    else:
        raise ValueError(f"which must be 'a' or 'b', got {which!r}")

    witnesses: list[str] = []
    images = {}
    for x in left.elements:
        images[x] = forward(x)
        if images[x] not in right.elements:
            witnesses.append(f"image of {sorted(x.atoms)} not in codomain")
    bijective = (
        len(set(images.values())) == len(left.elements)
        and set(images.values()) == set(right.elements)
    )
    if not bijective:
        witnesses.append("map is not a bijection onto the codomain")
    for x in left.elements:
        back = backward(images[x])
        if back != x:
            witnesses.append(f"inverse round trip fails at {sorted(x.atoms)}")
            bijective = False
    for y in right.elements:
        forth = forward(backward(y))
        if forth != y:
            witnesses.append(f"inverse round trip fails at {sorted(y.atoms)}")
            bijective = False

    order_reversing = True
    exchanges = True
    for x1 in left.elements:
        for x2 in left.elements:
            if (x1.atoms <= x2.atoms) != (images[x2].atoms <= images[x1].atoms):
                order_reversing = False
                witnesses.append(
                    f"order reversal fails at {sorted(x1.atoms)}, {sorted(x2.atoms)}"
                )
            if images[join(left, x1, x2)] != meet(right, images[x1], images[x2]):
                exchanges = False
                witnesses.append(
                    f"join/meet exchange fails at {sorted(x1.atoms)}, {sorted(x2.atoms)}"
                )
            if images[meet(left, x1, x2)] != join(right, images[x1], images[x2]):
                exchanges = False
                witnesses.append(
                    f"meet/join exchange fails at {sorted(x1.atoms)}, {sorted(x2.atoms)}"
                )
    return DualityReport(
        which=which,
        size=len(left.elements),
        bijective=bijective,
        order_reversing=order_reversing,
        exchanges_meet_join=exchanges,
        witnesses=tuple(witnesses),
    )


def hasse_edges(lattice: QuotientLattice) -> list[tuple[int, int]]:
    """Cover relation as (lower, upper) element-index pairs: the transitive
    reduction of containment."""
    elements = lattice.elements
    edges = []
    for i, low in enumerate(elements):
        for j, high in enumerate(elements):
            if i == j or not low.atoms < high.atoms:
                continue
            if any(
                low.atoms < mid.atoms < high.atoms
                for k, mid in enumerate(elements)
                if k not in (i, j)
            ):
                continue
            edges.append((i, j))
    return edges


def is_distributive(lattice: QuotientLattice) -> bool:
    """Exhaustive distributivity check over all element triples."""
    els = lattice.elements
    for a in els:
        for b in els:
            for c in els:
                lhs = meet(lattice, a, join(lattice, b, c))
                rhs = join(lattice, meet(lattice, a, b), meet(lattice, a, c))
                if lhs != rhs:
                    return False
    return True


def element_language(d: LanguageDecomposition, element: LatticeElement) -> Nfa:
    """Machine accepting the language an element denotes (a union of atoms
    on its side)."""
    if element.kind.side == LEFT:
        return left_atom_union_language(d, element.atoms)
    return right_atom_union_language(d, element.atoms)
