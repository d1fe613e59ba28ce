"""Maximal-complexity tests for the quotient lattices.

A language with n left quotients has at most 2**n quotient unions, and
exactly that many iff every one-plain, rest-complemented atomic
intersection is non-empty; dually for intersections with the
one-complemented, rest-plain ones.  Presence of those atoms is read off
the decomposition's atom sets, so the verdict needs no lattice
enumeration; the counts are enumerated anyway when small enough and the
biconditionals asserted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import LanguageDecomposition
from .lattices import INTERSECTION_LEFT, UNION_LEFT, build_lattice


@dataclass(frozen=True)
class ComplexityReport:
    """Complexity verdicts for one language.

    ``union_count``/``intersection_count`` are the left-lattice sizes, or
    None when the closure was skipped (``counts_enumerated`` False) because
    the quotient count exceeds the enumeration limit.  ``corollary_applies``
    marks whether the combined necessary-and-sufficient reading (both kinds
    maximal iff all 2n designated atoms present) is asserted, which needs
    more than two quotients.
    """

    quotient_count: int
    union_count: int | None
    intersection_count: int | None
    union_maximal: bool
    intersection_maximal: bool
    singleton_atoms_present: tuple[bool, ...]
    cosingleton_atoms_present: tuple[bool, ...]
    counts_enumerated: bool
    corollary_applies: bool


def complexity_report(
    d: LanguageDecomposition, enumerate_limit: int = 20
) -> ComplexityReport:
    """Evaluate the maximal-complexity criteria on a decomposition.

    Raises AssertionError if an enumerated count contradicts its atom
    condition: the equivalence is a theorem, so disagreement means a bug.
    """
    n = d.quotient_count
    atom_sets = set(d.left_atom_sets)
    everything = frozenset(range(n))
    singletons = tuple(frozenset({i}) in atom_sets for i in range(n))
    cosingletons = tuple(everything - {k} in atom_sets for k in range(n))
    union_maximal = all(singletons)
    intersection_maximal = all(cosingletons)

    union_count = intersection_count = None
    enumerated = n <= enumerate_limit
    if enumerated:
        union_count = len(build_lattice(d, UNION_LEFT))
        intersection_count = len(build_lattice(d, INTERSECTION_LEFT))
        assert (union_count == 2**n) == union_maximal, (
            "union-lattice count contradicts the singleton-atom condition"
        )
        assert (intersection_count == 2**n) == intersection_maximal, (
            "intersection-lattice count contradicts the cosingleton-atom condition"
        )
    else:
        if union_maximal:
            union_count = 2**n
        if intersection_maximal:
            intersection_count = 2**n

    return ComplexityReport(
        quotient_count=n,
        union_count=union_count,
        intersection_count=intersection_count,
        union_maximal=union_maximal,
        intersection_maximal=intersection_maximal,
        singleton_atoms_present=singletons,
        cosingleton_atoms_present=cosingletons,
        counts_enumerated=enumerated,
        corollary_applies=n > 2,
    )
