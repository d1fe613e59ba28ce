"""The Boolean concatenation pairing on atom unions.

Two sets of words pair to 1 when some word of the first followed by some
word of the second lands in the language.  On atom unions the pairing is
constant per atom pair and coincides with the quotient-atom containment
matrix, which lets the duality maps be recast as orthogonality
statements.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import (
    LanguageDecomposition,
    QuotientAtomMatrix,
    quotient_atom_matrix,
)
from .lattices import (
    INTERSECTION_LEFT,
    INTERSECTION_RIGHT,
    LEFT,
    RIGHT,
    UNION_LEFT,
    UNION_RIGHT,
    LatticeElement,
)


@dataclass(frozen=True)
class Bool2:
    """Element of the two-value semiring: addition is OR (1 + 1 = 1),
    multiplication is AND."""

    value: int

    def __post_init__(self):
        if self.value not in (0, 1):
            raise ValueError(f"value must be 0 or 1, got {self.value!r}")

    def __add__(self, other: Bool2) -> Bool2:
        return Bool2(self.value | other.value)

    def __mul__(self, other: Bool2) -> Bool2:
        return Bool2(self.value & other.value)

    def __bool__(self) -> bool:
        return bool(self.value)

    def __int__(self) -> int:
        return self.value


ZERO = Bool2(0)
ONE = Bool2(1)


@dataclass(frozen=True)
class PairingContext:
    """A decomposition together with its quotient-atom matrix."""

    decomposition: LanguageDecomposition
    matrix: QuotientAtomMatrix

    @classmethod
    def from_decomposition(cls, d: LanguageDecomposition) -> PairingContext:
        return cls(d, quotient_atom_matrix(d))

    @property
    def right_atom_count(self) -> int:
        return self.matrix.rows

    @property
    def left_atom_count(self) -> int:
        return self.matrix.cols


def pair_atoms(ctx: PairingContext, i: int, j: int) -> Bool2:
    """Pairing of the i-th right atom with the j-th left atom.

    Equals the matrix entry (i, j): the pairing is 1 exactly when the left
    atom sits inside the i-th left quotient, equivalently when the right
    atom sits inside the j-th right quotient.
    """
    if not 0 <= i < ctx.matrix.rows:
        raise IndexError(f"right-atom index {i} out of range")
    if not 0 <= j < ctx.matrix.cols:
        raise IndexError(f"left-atom index {j} out of range")
    return Bool2(ctx.matrix.entries[i][j])


def pair_sets(ctx: PairingContext, a, b) -> Bool2:
    """Bilinear extension to atom unions: OR of the atom pairings over the
    product of the two index sets."""
    return Bool2(
        1
        if any(int(pair_atoms(ctx, i, j)) for i in a for j in b)
        else 0
    )


def orthogonal_complement(ctx: PairingContext, y) -> frozenset[int]:
    """Left-atom indices pairing to 0 with every right atom in ``y``.

    As a language this is exactly the orthogonal complement of the union
    of the chosen right atoms, since the pairing is constant on atoms.
    """
    y = frozenset(y)
    for i in y:
        if not 0 <= i < ctx.matrix.rows:
            raise IndexError(f"right-atom index {i} out of range")
    return frozenset(
        j
        for j in range(ctx.matrix.cols)
        if all(ctx.matrix.entries[i][j] == 0 for i in y)
    )


def pair_elements(
    ctx: PairingContext, right: LatticeElement, left: LatticeElement
) -> Bool2:
    """The pairing restricted to lattice elements: a right-side element
    against a left-side element of the same operation kind."""
    if right.kind.side != RIGHT or left.kind.side != LEFT:
        raise ValueError("expected a (right, left) element pair")
    if right.kind.operation != left.kind.operation:
        raise ValueError("elements come from lattices of different operations")
    return pair_sets(ctx, right.atoms, left.atoms)


def psi_via_pairing(ctx: PairingContext, x: LatticeElement) -> LatticeElement:
    """The union duality map recomputed through the pairing: keep the right
    atoms that pair to 1 with the complement of the argument."""
    if x.kind != UNION_LEFT:
        raise ValueError(f"expected a union-left element, got {x.kind.name}")
    complement = frozenset(range(ctx.left_atom_count)) - x.atoms
    atoms = frozenset(
        k
        for k in range(ctx.right_atom_count)
        if int(pair_sets(ctx, {k}, complement))
    )
    return LatticeElement(atoms, UNION_RIGHT)


def phi_via_pairing(ctx: PairingContext, z: LatticeElement) -> LatticeElement:
    """The intersection duality map recomputed through the pairing: keep the
    right atoms whose orthogonal complement misses the argument."""
    if z.kind != INTERSECTION_LEFT:
        raise ValueError(f"expected an intersection-left element, got {z.kind.name}")
    atoms = frozenset(
        k
        for k in range(ctx.right_atom_count)
        if not z.atoms & orthogonal_complement(ctx, {k})
    )
    return LatticeElement(atoms, INTERSECTION_RIGHT)


def matrix_via_pairing(ctx: PairingContext) -> QuotientAtomMatrix:
    """The quotient-atom matrix rebuilt entry by entry from the pairing."""
    entries = tuple(
        tuple(int(pair_atoms(ctx, i, j)) for j in range(ctx.matrix.cols))
        for i in range(ctx.matrix.rows)
    )
    return QuotientAtomMatrix(ctx.matrix.rows, ctx.matrix.cols, entries)
