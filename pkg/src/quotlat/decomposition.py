"""Quotients and atoms of a regular language.

The decomposition of a non-empty regular language L indexes:

* left quotients by the states of the minimal complete DFA (state j has
  right language equal to the j-th left quotient and left language equal
  to the j-th right atom);
* left atoms and right quotients by the states of the atomaton (state i
  has right language the i-th left atom and left language the i-th right
  quotient).

Everything downstream works on atom-index sets, which is exact because
atoms partition all words; explicit word sets are produced only for
display and tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .automata import (
    Dfa,
    EmptyLanguage,
    Nfa,
    determinize,
    minimize,
    reverse,
)


@dataclass(frozen=True)
class LanguageDecomposition:
    """Indexed quotients and atoms of one regular language.

    ``left_atom_sets[i]`` is the subset S of quotient indices whose atomic
    intersection (quotients in S plain, the rest complemented) is the i-th
    left atom.  ``right_atom_sets[j]`` is the mirrored subset over right
    quotients.  ``left_quotients[j]`` / ``right_quotients[i]`` express each
    quotient as the set of atoms it contains, on its own side.
    """

    dfa: Dfa
    atomaton: Nfa
    left_quotients: tuple[frozenset[int], ...]
    right_quotients: tuple[frozenset[int], ...]
    left_atom_sets: tuple[frozenset[int], ...]
    right_atom_sets: tuple[frozenset[int], ...]
    final_left_atom: int
    initial_left_atoms: frozenset[int]
    negative_left_atom: int | None

    @property
    def quotient_count(self) -> int:
        return len(self.left_quotients)

    @property
    def atom_count(self) -> int:
        return len(self.right_quotients)


def decompose(language: Nfa | Dfa) -> LanguageDecomposition:
    """Compute the full decomposition of a non-empty regular language.

    The minimal DFA D gives the left quotients.  Determinizing the
    reverse of D yields the minimal DFA of the reversed language, whose
    states are exactly the subsets S with non-empty atomic intersection,
    in breadth-first discovery order; its reverse is the atomaton.
    Applying the same determinization to the atomaton lands back on D and
    its subset provenance gives the right atoms, so the two sides come
    from two runs of one audited construction.
    """
    dfa = minimize(language)
    if not dfa.final:
        raise EmptyLanguage("decomposition requires a non-empty language")

    rev_det = determinize(reverse(dfa.to_nfa()))
    assert rev_det.source_sets is not None
    left_atom_sets = rev_det.source_sets
    atomaton = reverse(rev_det.to_nfa())

    mirrored = determinize(atomaton)
    assert mirrored.source_sets is not None
    right_atom_sets = mirrored.source_sets
    # Reversing three times must lead back to the minimal DFA, state for
    # state; if it does not, the construction itself is broken.
    assert (
        Dfa(mirrored.alphabet, mirrored.transitions, mirrored.initial, mirrored.final)
        == dfa
    ), "determinized atomaton does not match the minimal DFA"

    n = dfa.state_count
    m = rev_det.state_count
    left_quotients = tuple(
        frozenset(i for i in range(m) if j in left_atom_sets[i]) for j in range(n)
    )
    right_quotients = tuple(
        frozenset(j for j in range(n) if i in right_atom_sets[j]) for i in range(m)
    )

    final_candidates = [
        i for i in range(m) if left_atom_sets[i] == frozenset(dfa.final)
    ]
    assert len(final_candidates) == 1, "exactly one atom contains the empty word"
    negative = next(
        (i for i in range(m) if not left_atom_sets[i]),
        None,
    )
    return LanguageDecomposition(
        dfa=dfa,
        atomaton=atomaton,
        left_quotients=left_quotients,
        right_quotients=right_quotients,
        left_atom_sets=left_atom_sets,
        right_atom_sets=right_atom_sets,
        final_left_atom=final_candidates[0],
        initial_left_atoms=frozenset(
            i for i in range(m) if dfa.initial in left_atom_sets[i]
        ),
        negative_left_atom=negative,
    )


def atomaton(d: LanguageDecomposition) -> Nfa:
    """The atomaton: one state per left atom, initial states the atoms
    contained in the language, the unique final state the atom holding the
    empty word."""
    return d.atomaton


def left_quotient_language(d: LanguageDecomposition, j: int) -> Nfa:
    """Machine for the j-th left quotient (right language of DFA state j)."""
    n = d.dfa.to_nfa()
    return Nfa(n.alphabet, n.transitions, frozenset({j}), n.final)


def right_quotient_language(d: LanguageDecomposition, i: int) -> Nfa:
    """Machine for the i-th right quotient (left language of atomaton state i)."""
    a = d.atomaton
    return Nfa(a.alphabet, a.transitions, a.initial, frozenset({i}))


def left_atom_language(d: LanguageDecomposition, i: int) -> Nfa:
    """Machine for the i-th left atom (right language of atomaton state i)."""
    a = d.atomaton
    return Nfa(a.alphabet, a.transitions, frozenset({i}), a.final)


def right_atom_language(d: LanguageDecomposition, j: int) -> Nfa:
    """Machine for the j-th right atom (left language of DFA state j)."""
    n = d.dfa.to_nfa()
    return Nfa(n.alphabet, n.transitions, n.initial, frozenset({j}))


def left_atom_union_language(d: LanguageDecomposition, atoms) -> Nfa:
    """Machine for a union of left atoms."""
    a = d.atomaton
    return Nfa(a.alphabet, a.transitions, frozenset(atoms), a.final)


def right_atom_union_language(d: LanguageDecomposition, atoms) -> Nfa:
    """Machine for a union of right atoms."""
    n = d.dfa.to_nfa()
    return Nfa(n.alphabet, n.transitions, n.initial, frozenset(atoms))


@dataclass(frozen=True)
class QuotientAtomMatrix:
    """Boolean matrix with entry (i, j) = 1 exactly when the j-th left atom
    is contained in the i-th left quotient."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(
            len(row) != self.cols for row in self.entries
        ):
            raise ValueError("matrix shape does not match entries")
        for row in self.entries:
            for cell in row:
                if cell not in (0, 1):
                    raise ValueError("entries must be 0 or 1")

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transposed(self) -> QuotientAtomMatrix:
        return QuotientAtomMatrix(
            self.cols,
            self.rows,
            tuple(self.column(j) for j in range(self.cols)),
        )


def quotient_atom_matrix(d: LanguageDecomposition) -> QuotientAtomMatrix:
    """Containment matrix of left atoms inside left quotients."""
    n, m = d.quotient_count, d.atom_count
    entries = tuple(
        tuple(1 if i in d.left_atom_sets[j] else 0 for j in range(m))
        for i in range(n)
    )
    return QuotientAtomMatrix(n, m, entries)


def right_quotient_atom_matrix(d: LanguageDecomposition) -> QuotientAtomMatrix:
    """Containment matrix of right atoms inside right quotients; equals the
    transpose of :func:`quotient_atom_matrix` when the cross identities hold."""
    n, m = d.quotient_count, d.atom_count
    entries = tuple(
        tuple(1 if i in d.right_atom_sets[j] else 0 for j in range(n))
        for i in range(m)
    )
    return QuotientAtomMatrix(m, n, entries)


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking the quotient-atom cross identities.

    ``violations`` lists human-readable witnesses; the identities are
    theorems, so any entry indicates an implementation (or theory) defect.
    ``checked_all_subsets`` tells whether the union/intersection identities
    ran over every subset or over a random sample.
    """

    violations: tuple[str, ...]
    checked_all_subsets: bool
    subsets_checked: int

    @property
    def ok(self) -> bool:
        return not self.violations


def _subset_pool(universe: int, exhaustive_limit: int, samples: int, rng):
    if universe <= exhaustive_limit:
        return [
            frozenset(i for i in range(universe) if mask >> i & 1)
            for mask in range(1 << universe)
        ], True
    pool = [
        frozenset(i for i in range(universe) if rng.random() < 0.5)
        for _ in range(samples)
    ]
    return pool, False


def verify_quotient_atom_identities(
    d: LanguageDecomposition,
    exhaustive_limit: int = 12,
    samples: int = 64,
    rng: random.Random | None = None,
) -> IdentityReport:
    """Check the index-level identities tying the two sides together.

    Per index: each right quotient is the union of right atoms whose
    quotient contains the matching left atom, and symmetrically; plus the
    containment biconditional between the two matrices.  Per subset: the
    four union/intersection exchange identities over unions of atoms,
    exhaustively when both sides have at most ``exhaustive_limit``
    quotients/atoms, sampled otherwise.
    """
    rng = rng or random.Random(0)
    n, m = d.quotient_count, d.atom_count
    all_left = frozenset(range(m))
    all_right = frozenset(range(n))
    violations: list[str] = []

    for i in range(m):
        if d.right_quotients[i] != d.left_atom_sets[i]:
            violations.append(
                f"right quotient {i} != union of right atoms over its atom set"
            )
    for j in range(n):
        if d.left_quotients[j] != d.right_atom_sets[j]:
            violations.append(
                f"left quotient {j} != union of left atoms over its atom set"
            )
    for i in range(m):
        for j in range(n):
            if (j in d.left_atom_sets[i]) != (i in d.right_atom_sets[j]):
                violations.append(
                    f"containment biconditional fails at atom {i}, quotient {j}"
                )

    left_pool, left_all = _subset_pool(m, exhaustive_limit, samples, rng)
    right_pool, right_all = _subset_pool(n, exhaustive_limit, samples, rng)

    for x in left_pool:
        lhs1 = frozenset().union(
            *(d.right_quotients[i] for i in range(m) if i not in x)
        )
        rhs1 = frozenset(j for j in range(n) if not d.left_quotients[j] <= x)
        if lhs1 != rhs1:
            violations.append(f"union exchange fails for left-atom set {sorted(x)}")
        parts = [d.right_quotients[j] for j in x]
        lhs2 = frozenset.intersection(*parts) if parts else all_right
        rhs2 = frozenset(i for i in range(n) if x <= d.left_quotients[i])
        if lhs2 != rhs2:
            violations.append(
                f"intersection exchange fails for left-atom set {sorted(x)}"
            )

    for y in right_pool:
        lhs3 = frozenset().union(
            *(d.left_quotients[i] for i in range(n) if i not in y)
        )
        rhs3 = frozenset(j for j in range(m) if not d.right_quotients[j] <= y)
        if lhs3 != rhs3:
            violations.append(f"union exchange fails for right-atom set {sorted(y)}")
        parts = [d.left_quotients[j] for j in y]
        lhs4 = frozenset.intersection(*parts) if parts else all_left
        rhs4 = frozenset(i for i in range(m) if y <= d.right_quotients[i])
        if lhs4 != rhs4:
            violations.append(
                f"intersection exchange fails for right-atom set {sorted(y)}"
            )

    return IdentityReport(
        violations=tuple(violations),
        checked_all_subsets=left_all and right_all,
        subsets_checked=len(left_pool) + len(right_pool),
    )
