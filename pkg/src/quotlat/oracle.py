"""Definition-level reference implementations for testing.

Everything here is deliberately naive and shares no code with the
automaton pipeline: quotients and atoms of finite languages are computed
straight from their definitions with explicit finite/cofinite set
algebra, and DFA minimization is redone by partition refinement.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .automata import Alphabet, Dfa, canonical_form


@dataclass(frozen=True)
class FiniteLanguage:
    """An explicit finite set of words over a fixed alphabet."""

    alphabet: Alphabet
    words: frozenset[str]

    def __post_init__(self):
        for word in self.words:
            for sym in word:
                if sym not in self.alphabet:
                    raise ValueError(f"word {word!r} uses symbol outside alphabet")


def _shortlex(alphabet: Alphabet):
    length = 0
    while True:
        for letters in product(alphabet.symbols, repeat=length):
            yield "".join(letters)
        length += 1


def left_quotients_bruteforce(language: FiniteLanguage) -> frozenset[frozenset[str]]:
    """All distinct left quotients, straight from the definition.

    Only prefixes of members can give a non-empty quotient, so it suffices
    to quotient by every prefix plus one non-prefix witness for the empty
    quotient.
    """
    prefixes = {w[:i] for w in language.words for i in range(len(w) + 1)}
    for candidate in _shortlex(language.alphabet):
        if candidate not in prefixes:
            witness = candidate
            break
    quotients = set()
    for w in sorted(prefixes) + [witness]:
        quotients.add(
            frozenset(v[len(w):] for v in language.words if v.startswith(w))
        )
    return frozenset(quotients)


def right_quotients_bruteforce(language: FiniteLanguage) -> frozenset[frozenset[str]]:
    """All distinct right quotients; the mirror of the left case over
    suffixes."""
    suffixes = {w[i:] for w in language.words for i in range(len(w) + 1)}
    for candidate in _shortlex(language.alphabet):
        if candidate not in suffixes:
            witness = candidate
            break
    quotients = set()
    for v in sorted(suffixes) + [witness]:
        quotients.add(
            frozenset(u[: len(u) - len(v)] for u in language.words if u.endswith(v))
        )
    return frozenset(quotients)


@dataclass(frozen=True)
class FiniteOrCofinite:
    """A finite word set, or the complement of one when ``cofinite``.

    Closed under complement and intersection, which is all the atomic
    intersections need; representations are canonical, so equality of
    values is equality of languages.
    """

    words: frozenset[str]
    cofinite: bool = False

    def complement(self) -> FiniteOrCofinite:
        return FiniteOrCofinite(self.words, not self.cofinite)

    def intersect(self, other: FiniteOrCofinite) -> FiniteOrCofinite:
        if not self.cofinite and not other.cofinite:
            return FiniteOrCofinite(self.words & other.words)
        if not self.cofinite:
            return FiniteOrCofinite(self.words - other.words)
        if not other.cofinite:
            return FiniteOrCofinite(other.words - self.words)
        return FiniteOrCofinite(self.words | other.words, True)

    @property
    def is_empty(self) -> bool:
        return not self.cofinite and not self.words


def atoms_bruteforce(
    language: FiniteLanguage, side: str
) -> frozenset[FiniteOrCofinite]:
    """All atoms of one side: every non-empty intersection taking each
    brute-force quotient either plain or complemented."""
    if side == "left":
        quotients = sorted(left_quotients_bruteforce(language), key=sorted)
    elif side == "right":
        quotients = sorted(right_quotients_bruteforce(language), key=sorted)
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    atoms = set()
    for mask in range(1 << len(quotients)):
        current = FiniteOrCofinite(frozenset(), True)  # all words
        for i, quotient in enumerate(quotients):
            part = FiniteOrCofinite(quotient)
            if not mask >> i & 1:
                part = part.complement()
            current = current.intersect(part)
        if not current.is_empty:
            atoms.add(current)
    return frozenset(atoms)


def minimize_refinement(d: Dfa) -> Dfa:
    """Minimal complete DFA by iterated partition refinement, renumbered
    with the same breadth-first convention as the main pipeline."""
    reachable = {d.initial}
    queue = [d.initial]
    while queue:
        q = queue.pop()
        for k in range(len(d.alphabet)):
            t = d.transitions[q][k]
            if t not in reachable:
                reachable.add(t)
                queue.append(t)
    states = sorted(reachable)

    block = {q: (q in d.final) for q in states}
    while True:
        signature = {
            q: (
                block[q],
                tuple(block[d.transitions[q][k]] for k in range(len(d.alphabet))),
            )
            for q in states
        }
        labels = {sig: i for i, sig in enumerate(sorted(set(signature.values()), key=repr))}
        refined = {q: labels[signature[q]] for q in states}
        if len(set(refined.values())) == len(set(block.values())):
            block = refined
            break
        block = refined

    representatives = sorted(set(block.values()))
    index = {b: i for i, b in enumerate(representatives)}
    member = {}
    for q in states:
        member.setdefault(block[q], q)
    rows = tuple(
        tuple(
            index[block[d.transitions[member[b]][k]]]
            for k in range(len(d.alphabet))
        )
        for b in representatives
    )
    merged = Dfa(
        d.alphabet,
        rows,
        index[block[d.initial]],
        frozenset(index[block[q]] for q in states if q in d.final),
    )
    return canonical_form(merged)
