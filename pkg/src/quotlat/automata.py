"""Finite automata over small printable alphabets.

NFAs and DFAs use integer states 0..n-1 and store transitions as nested
tuples indexed by state and alphabet position, so machines are immutable,
hashable values: two machines compare equal exactly when they are the same
labelled graph.  Determinization numbers its output states in breadth-first
discovery order with symbols explored in alphabet order, which makes every
construction that ends in a subset construction canonically numbered for
free.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field


class AlphabetMismatch(ValueError):
    """Two machines over different alphabets were combined."""


class EmptyLanguage(ValueError):
    """An operation that needs a non-empty language got an empty one."""


@dataclass(frozen=True)
class Alphabet:
    """Ordered tuple of distinct single printable characters.

    The symbol order fixes every canonical order downstream: transition
    exploration, state numbering, word enumeration.
    """

    symbols: tuple[str, ...]

    def __post_init__(self):
        if not self.symbols:
            raise ValueError("alphabet must not be empty")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("duplicate symbols in alphabet")
        for sym in self.symbols:
            if len(sym) != 1 or not sym.isprintable():
                raise ValueError(f"not a single printable character: {sym!r}")

    @classmethod
    def of(cls, symbols: str) -> Alphabet:
        return cls(tuple(symbols))

    def index(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise ValueError(
                f"symbol {symbol!r} not in alphabet {''.join(self.symbols)!r}"
            ) from None

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, symbol):
        return symbol in self.symbols

    def __str__(self):
        return "".join(self.symbols)


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic finite automaton.

    ``transitions[q][k]`` is the frozenset of successors of state ``q`` on
    the ``k``-th alphabet symbol.  There are no epsilon transitions; a set
    of initial states takes their place.
    """

    alphabet: Alphabet
    transitions: tuple[tuple[frozenset[int], ...], ...]
    initial: frozenset[int]
    final: frozenset[int]

    def __post_init__(self):
        n = len(self.transitions)
        for row in self.transitions:
            if len(row) != len(self.alphabet):
                raise ValueError("transition row does not match alphabet size")
            for targets in row:
                for t in targets:
                    if not 0 <= t < n:
                        raise ValueError(f"transition target {t} out of range")
        for q in self.initial | self.final:
            if not 0 <= q < n:
                raise ValueError(f"state {q} out of range")

    @classmethod
    def build(cls, state_count, alphabet, edges, initial, final) -> Nfa:
        """Construct from an iterable of (source, symbol, target) triples."""
        rows = [[set() for _ in alphabet.symbols] for _ in range(state_count)]
        for p, sym, q in edges:
            if not 0 <= p < state_count or not 0 <= q < state_count:
                raise ValueError(f"edge ({p}, {sym!r}, {q}) out of range")
            rows[p][alphabet.index(sym)].add(q)
        transitions = tuple(tuple(frozenset(t) for t in row) for row in rows)
        return cls(alphabet, transitions, frozenset(initial), frozenset(final))

    @property
    def state_count(self) -> int:
        return len(self.transitions)

    @property
    def states(self) -> range:
        return range(len(self.transitions))

    def edges(self):
        """Yield (source, symbol, target) triples sorted canonically."""
        for p in self.states:
            for k, sym in enumerate(self.alphabet.symbols):
                for q in sorted(self.transitions[p][k]):
                    yield p, sym, q

    def step(self, subset, k: int) -> frozenset[int]:
        out: set[int] = set()
        for q in subset:
            out |= self.transitions[q][k]
        return frozenset(out)

    def accepts(self, word: str) -> bool:
        current = self.initial
        for sym in word:
            current = self.step(current, self.alphabet.index(sym))
            if not current:
                return False
        return bool(current & self.final)


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic finite automaton.

    ``transitions[q][k]`` is the single successor of ``q`` on the ``k``-th
    symbol; the transition function is total by construction.

    ``source_sets`` records, for machines produced by :func:`determinize`,
    the subset of input states each output state stands for.  It is
    excluded from equality so provenance never distinguishes otherwise
    identical machines.
    """

    alphabet: Alphabet
    transitions: tuple[tuple[int, ...], ...]
    initial: int
    final: frozenset[int]
    source_sets: tuple[frozenset[int], ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.transitions)
        for row in self.transitions:
            if len(row) != len(self.alphabet):
                raise ValueError("transition row does not match alphabet size")
            for t in row:
                if not 0 <= t < n:
                    raise ValueError(f"transition target {t} out of range")
        if not 0 <= self.initial < n:
            raise ValueError(f"initial state {self.initial} out of range")
        for q in self.final:
            if not 0 <= q < n:
                raise ValueError(f"final state {q} out of range")
        if self.source_sets is not None and len(self.source_sets) != n:
            raise ValueError("source_sets length does not match state count")

    @property
    def state_count(self) -> int:
        return len(self.transitions)

    @property
    def states(self) -> range:
        return range(len(self.transitions))

    def run(self, word: str, start: int | None = None) -> int:
        state = self.initial if start is None else start
        for sym in word:
            state = self.transitions[state][self.alphabet.index(sym)]
        return state

    def accepts(self, word: str) -> bool:
        return self.run(word) in self.final

    def to_nfa(self) -> Nfa:
        rows = tuple(
            tuple(frozenset({t}) for t in row) for row in self.transitions
        )
        return Nfa(self.alphabet, rows, frozenset({self.initial}), self.final)


def as_nfa(machine: Nfa | Dfa) -> Nfa:
    return machine.to_nfa() if isinstance(machine, Dfa) else machine


def reverse(machine: Nfa | Dfa) -> Nfa:
    """Flip every transition and swap initial with final states.

    The result accepts exactly the reversed words of the input language.
    """
    n = as_nfa(machine)
    rows = [[set() for _ in n.alphabet.symbols] for _ in n.states]
    for p in n.states:
        for k in range(len(n.alphabet)):
            for q in n.transitions[p][k]:
                rows[q][k].add(p)
    transitions = tuple(tuple(frozenset(t) for t in row) for row in rows)
    return Nfa(n.alphabet, transitions, n.final, n.initial)


def determinize(machine: Nfa | Dfa) -> Dfa:
    """Subset construction.

    Output states are exactly the reachable subsets of the input's states,
    numbered in breadth-first discovery order; ``source_sets`` keeps the
    subset behind each output state.  The result is always complete (the
    empty subset acts as the dead state whenever it is reachable).
    """
    n = as_nfa(machine)
    start = frozenset(n.initial)
    index: dict[frozenset[int], int] = {start: 0}
    order: list[frozenset[int]] = [start]
    rows: list[tuple[int, ...]] = []
    queue: deque[frozenset[int]] = deque([start])
    while queue:
        subset = queue.popleft()
        row = []
        for k in range(len(n.alphabet)):
            target = n.step(subset, k)
            if target not in index:
                index[target] = len(order)
                order.append(target)
                queue.append(target)
            row.append(index[target])
        rows.append(tuple(row))
    final = frozenset(i for i, subset in enumerate(order) if subset & n.final)
    return Dfa(n.alphabet, tuple(rows), 0, final, source_sets=tuple(order))


def _forward_reachable(n: Nfa) -> set[int]:
    seen = set(n.initial)
    queue = deque(seen)
    while queue:
        q = queue.popleft()
        for k in range(len(n.alphabet)):
            for t in n.transitions[q][k]:
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
    return seen


def _backward_reachable(n: Nfa) -> set[int]:
    preds: dict[int, set[int]] = {q: set() for q in n.states}
    for p in n.states:
        for k in range(len(n.alphabet)):
            for q in n.transitions[p][k]:
                preds[q].add(p)
    seen = set(n.final)
    queue = deque(seen)
    while queue:
        q = queue.popleft()
        for p in preds[q]:
            if p not in seen:
                seen.add(p)
                queue.append(p)
    return seen


def trim(machine: Nfa | Dfa) -> Nfa:
    """Drop states that are unreachable or have an empty right language.

    Remaining states are renumbered in increasing old-index order; the
    accepted language is unchanged.  The result may have no states at all
    when the language is empty.
    """
    n = as_nfa(machine)
    keep = sorted(_forward_reachable(n) & _backward_reachable(n))
    remap = {q: i for i, q in enumerate(keep)}
    rows = tuple(
        tuple(
            frozenset(remap[t] for t in n.transitions[q][k] if t in remap)
            for k in range(len(n.alphabet))
        )
        for q in keep
    )
    return Nfa(
        n.alphabet,
        rows,
        frozenset(remap[q] for q in n.initial if q in remap),
        frozenset(remap[q] for q in n.final if q in remap),
    )


def minimize(n: Nfa | Dfa) -> Dfa:
    """Minimal complete DFA by the double-reversal method.

    Reverse, trim and determinize twice; the second subset construction is
    guaranteed minimal because its input has no empty states and a
    deterministic reverse.  The dead state is present whenever the language
    misses some word, so the state count equals the number of left
    quotients, the empty quotient included.  States come out numbered in
    breadth-first order from the initial state following alphabet order.
    """
    first = determinize(reverse(trim(as_nfa(n))))
    second = determinize(reverse(trim(first.to_nfa())))
    return Dfa(second.alphabet, second.transitions, second.initial, second.final)


def canonical_form(d: Dfa) -> Dfa:
    """Renumber states in breadth-first order from the initial state,
    exploring symbols in alphabet order and dropping unreachable states.

    Isomorphic complete DFAs have equal canonical forms, so this doubles
    as an isomorphism test.
    """
    remap = {d.initial: 0}
    order = [d.initial]
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for k in range(len(d.alphabet)):
            t = d.transitions[q][k]
            if t not in remap:
                remap[t] = len(order)
                order.append(t)
                queue.append(t)
    rows = tuple(
        tuple(remap[d.transitions[q][k]] for k in range(len(d.alphabet)))
        for q in order
    )
    return Dfa(
        d.alphabet,
        rows,
        0,
        frozenset(remap[q] for q in d.final if q in remap),
    )


def _check_same_alphabet(a: Nfa | Dfa, b: Nfa | Dfa):
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(
            f"alphabets differ: {a.alphabet} vs {b.alphabet}"
        )


def equivalent(a: Nfa | Dfa, b: Nfa | Dfa) -> bool:
    """Exact language equality via the product of the determinized machines:
    the symmetric difference is empty iff no reachable state pair disagrees
    on acceptance."""
    _check_same_alphabet(a, b)
    da = a if isinstance(a, Dfa) else determinize(a)
    db = b if isinstance(b, Dfa) else determinize(b)
    seen = {(da.initial, db.initial)}
    queue = deque(seen)
    while queue:
        p, q = queue.popleft()
        if (p in da.final) != (q in db.final):
            return False
        for k in range(len(da.alphabet)):
            pair = (da.transitions[p][k], db.transitions[q][k])
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return True


def language_subset(a: Nfa | Dfa, b: Nfa | Dfa) -> bool:
    """True iff the language of ``a`` is contained in the language of ``b``."""
    _check_same_alphabet(a, b)
    da = a if isinstance(a, Dfa) else determinize(a)
    db = b if isinstance(b, Dfa) else determinize(b)
    seen = {(da.initial, db.initial)}
    queue = deque(seen)
    while queue:
        p, q = queue.popleft()
        if p in da.final and q not in db.final:
            return False
        for k in range(len(da.alphabet)):
            pair = (da.transitions[p][k], db.transitions[q][k])
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return True


def languages_disjoint(a: Nfa | Dfa, b: Nfa | Dfa) -> bool:
    """True iff the two languages have empty intersection."""
    _check_same_alphabet(a, b)
    da = a if isinstance(a, Dfa) else determinize(a)
    db = b if isinstance(b, Dfa) else determinize(b)
    seen = {(da.initial, db.initial)}
    queue = deque(seen)
    while queue:
        p, q = queue.popleft()
        if p in da.final and q in db.final:
            return False
        for k in range(len(da.alphabet)):
            pair = (da.transitions[p][k], db.transitions[q][k])
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return True


def language_is_empty(machine: Nfa | Dfa) -> bool:
    n = as_nfa(machine)
    return not (_forward_reachable(n) & set(n.final))


def complement(d: Dfa) -> Dfa:
    """Complement of a complete DFA: flip the final-state set."""
    return Dfa(
        d.alphabet,
        d.transitions,
        d.initial,
        frozenset(d.states) - d.final,
    )


def bounded_words(machine: Nfa | Dfa, max_len: int) -> set[str]:
    """All accepted words of length at most ``max_len``, exhaustively.

    Exponential in ``max_len``; meant for small display and test bounds.
    """
    if max_len < 0:
        raise ValueError("length bound must be non-negative")
    n = as_nfa(machine)
    words: set[str] = set()
    if n.initial & n.final:
        words.add("")
    frontier: list[tuple[str, frozenset[int]]] = [("", n.initial)]
    for _ in range(max_len):
        nxt: list[tuple[str, frozenset[int]]] = []
        for word, subset in frontier:
            for k, sym in enumerate(n.alphabet.symbols):
                target = n.step(subset, k)
                if not target:
                    continue
                extended = word + sym
                if target & n.final:
                    words.add(extended)
                nxt.append((extended, target))
        frontier = nxt
        if not frontier:
            break
    return words


def state_language(
    machine: Nfa | Dfa, state: int, direction: str, bound: int
) -> set[str]:
    """Words of length ≤ ``bound`` in the left language (words that can
    reach ``state`` from an initial state) or the right language (words
    accepted starting from ``state``) of one state."""
    n = as_nfa(machine)
    if not 0 <= state < n.state_count:
        raise ValueError(f"state {state} out of range")
    if direction == "left":
        probe = Nfa(n.alphabet, n.transitions, n.initial, frozenset({state}))
    elif direction == "right":
        probe = Nfa(n.alphabet, n.transitions, frozenset({state}), n.final)
    else:
        raise ValueError(f"direction must be 'left' or 'right', got {direction!r}")
    return bounded_words(probe, bound)


def _live_states(d: Dfa) -> set[int]:
    preds: dict[int, set[int]] = {q: set() for q in d.states}
    for p in d.states:
        for k in range(len(d.alphabet)):
            preds[d.transitions[p][k]].add(p)
    live = set(d.final)
    queue = deque(live)
    while queue:
        q = queue.popleft()
        for p in preds[q]:
            if p not in live:
                live.add(p)
                queue.append(p)
    return live


def language_words(machine: Nfa | Dfa) -> frozenset[str] | None:
    """The exact word set of a finite language, or None when infinite.

    The language is finite iff the live part of its DFA (states that can
    still reach acceptance) is acyclic from the initial state.
    """
    d = machine if isinstance(machine, Dfa) else determinize(machine)
    live = _live_states(d)
    if d.initial not in live:
        return frozenset()
    # cycle detection restricted to live states reachable from the start
    WHITE, GREY, BLACK = 0, 1, 2
    colour = {q: WHITE for q in live}
    stack = [(d.initial, 0)]
    colour[d.initial] = GREY
    while stack:
        q, k = stack[-1]
        if k == len(d.alphabet):
            colour[q] = BLACK
            stack.pop()
            continue
        stack[-1] = (q, k + 1)
        t = d.transitions[q][k]
        if t not in live:
            continue
        if colour[t] == GREY:
            return None
        if colour[t] == WHITE:
            colour[t] = GREY
            stack.append((t, 0))
    words: list[str] = []

    def walk(q: int, prefix: str):
        if q in d.final:
            words.append(prefix)
        for k, sym in enumerate(d.alphabet.symbols):
            t = d.transitions[q][k]
            if t in live:
                walk(t, prefix + sym)

    walk(d.initial, "")
    return frozenset(words)


def sample_words(
    machine: Nfa | Dfa, max_words: int, max_len: int
) -> tuple[list[str], bool]:
    """Up to ``max_words`` shortest accepted words in shortlex order.

    Returns the sample and a flag that is True when the language holds
    more words than the sample shows (either truncated or explored past
    ``max_len`` while live continuations remained).
    """
    d = machine if isinstance(machine, Dfa) else determinize(machine)
    live = _live_states(d)
    if d.initial not in live:
        return [], False
    words: list[str] = []
    if d.initial in d.final:
        words.append("")
    frontier: list[tuple[str, int]] = [("", d.initial)]
    level = 0
    while frontier and len(words) < max_words and level < max_len:
        nxt: list[tuple[str, int]] = []
        for word, q in frontier:
            for k, sym in enumerate(d.alphabet.symbols):
                t = d.transitions[q][k]
                if t not in live:
                    continue
                extended = word + sym
                if t in d.final:
                    words.append(extended)
                nxt.append((extended, t))
        frontier = nxt
        level += 1
    more = any(
        d.transitions[q][k] in live
        for _, q in frontier
        for k in range(len(d.alphabet))
    )
    truncated = more or len(words) > max_words
    return words[:max_words], truncated
