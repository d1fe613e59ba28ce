"""Shared test utilities: machine builders, independent oracles, and
random-input generators."""

from __future__ import annotations

import random
from itertools import permutations, product

from quotlat import (
    Alphabet,
    Dfa,
    Nfa,
    bounded_words,
    complement,
    determinize,
    language_words,
    minimize,
    parse_regex,
)
from quotlat.decomposition import (
    left_atom_union_language,
    right_atom_union_language,
)

AB = Alphabet.of("ab")
ABC = Alphabet.of("abc")

GOLDEN_REGEX = "_|a|aa|ba"


def all_words(alphabet: Alphabet, max_len: int):
    for length in range(max_len + 1):
        for letters in product(alphabet.symbols, repeat=length):
            yield "".join(letters)


def nfa_from_words(words, alphabet: Alphabet) -> Nfa:
    """Trie-shaped NFA accepting exactly the given finite word set."""
    states = {"": 0}
    edges = []
    for word in sorted(words):
        for i in range(len(word)):
            prefix, extended = word[:i], word[: i + 1]
            if extended not in states:
                states[extended] = len(states)
                edges.append((states[prefix], word[i], states[extended]))
    final = [states[w] for w in words]
    return Nfa.build(len(states), alphabet, edges, [0], final)


def nfa_isomorphic(a: Nfa, b: Nfa) -> bool:
    """Brute-force isomorphism over state permutations; small machines only."""
    if a.state_count != b.state_count or a.alphabet != b.alphabet:
        return False
    for perm in permutations(range(a.state_count)):
        if {perm[q] for q in a.initial} != set(b.initial):
            continue
        if {perm[q] for q in a.final} != set(b.final):
            continue
        if all(
            {perm[t] for t in a.transitions[p][k]} == set(b.transitions[perm[p]][k])
            for p in range(a.state_count)
            for k in range(len(a.alphabet))
        ):
            return True
    return False


def reachable_signatures(d: Dfa) -> set[frozenset[int]]:
    """Ground truth for atom existence: run every state of the DFA
    simultaneously and record which membership signatures {i : the word
    belongs to the i-th quotient} actually occur."""
    start = tuple(range(d.state_count))
    seen = {start}
    queue = [start]
    signatures = set()
    while queue:
        config = queue.pop()
        signatures.add(
            frozenset(i for i, q in enumerate(config) if q in d.final)
        )
        for k in range(len(d.alphabet)):
            nxt = tuple(d.transitions[q][k] for q in config)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return signatures


def word_pairing_oracle(d, right_atoms, left_atoms) -> int:
    """Word-level pairing by bounded search: look for a word reaching one
    of the chosen DFA states followed by a word of one of the chosen atoms
    whose concatenation the language accepts.

    Sound and complete with length bounds equal to the machine state
    counts: any non-zero pairing has a witness that short.  Prefix words
    are deduplicated by the DFA state they reach, which cannot change the
    outcome since acceptance of the concatenation depends on the prefix
    only through that state.
    """
    n = d.dfa.state_count
    m = d.atomaton.state_count
    prefixes = sorted(
        bounded_words(right_atom_union_language(d, right_atoms), n),
        key=lambda w: (len(w), w),
    )
    suffixes = sorted(
        bounded_words(left_atom_union_language(d, left_atoms), m),
        key=lambda w: (len(w), w),
    )
    tried = set()
    for w in prefixes:
        state = d.dfa.run(w)
        if state in tried:
            continue
        tried.add(state)
        for v in suffixes:
            if d.dfa.run(v, start=state) in d.dfa.final:
                return 1
    return 0


def machine_matches(machine, reference, alphabet: Alphabet) -> bool:
    """Compare a machine's language with an oracle finite/cofinite value."""
    if not reference.cofinite:
        return language_words(machine) == reference.words
    comp = complement(determinize(machine))
    return language_words(comp) == reference.words


def random_regex(rng: random.Random, symbols: str, depth: int) -> str:
    roll = rng.random()
    if depth == 0 or roll < 0.4:
        return rng.choice(symbols)
    if roll < 0.5:
        return "_"
    op = rng.choice(("union", "concat", "star"))
    if op == "union":
        return f"({random_regex(rng, symbols, depth - 1)}|{random_regex(rng, symbols, depth - 1)})"
    if op == "concat":
        return f"({random_regex(rng, symbols, depth - 1)}{random_regex(rng, symbols, depth - 1)})"
    return f"({random_regex(rng, symbols, depth - 1)})*"


def random_nfa(rng: random.Random, alphabet: Alphabet, max_states: int = 5) -> Nfa:
    n = rng.randint(1, max_states)
    edges = [
        (p, sym, q)
        for p in range(n)
        for sym in alphabet.symbols
        for q in range(n)
        if rng.random() < 0.25
    ]
    initial = [q for q in range(n) if rng.random() < 0.4] or [rng.randrange(n)]
    final = [q for q in range(n) if rng.random() < 0.4]
    return Nfa.build(n, alphabet, edges, initial, final)


def random_dfa(rng: random.Random, alphabet: Alphabet, max_states: int = 6) -> Dfa:
    n = rng.randint(1, max_states)
    rows = tuple(
        tuple(rng.randrange(n) for _ in alphabet.symbols) for _ in range(n)
    )
    final = frozenset(q for q in range(n) if rng.random() < 0.45)
    return Dfa(alphabet, rows, 0, final)


def random_finite_language(rng: random.Random, max_words: int = 8, max_len: int = 4):
    count = rng.randint(0, max_words)
    words = set()
    for _ in range(count):
        length = rng.randint(0, max_len)
        words.add("".join(rng.choice("ab") for _ in range(length)))
    return frozenset(words)


def build_language_corpus(seed: int, regex_count: int, nfa_count: int, max_states: int = 6):
    """Random non-empty languages over 2- and 3-symbol alphabets whose
    minimal DFA stays small: (description, machine) pairs."""
    rng = random.Random(seed)
    items = []
    while sum(1 for tag, _ in items if tag.startswith("regex")) < regex_count:
        symbols = "ab" if rng.random() < 0.7 else "abc"
        pattern = random_regex(rng, symbols, rng.randint(1, 4))
        machine = parse_regex(pattern, Alphabet.of(symbols))
        small = minimize(machine)
        if small.final and small.state_count <= max_states:
            items.append((f"regex {pattern} over {symbols}", machine))
    while len(items) < regex_count + nfa_count:
        alphabet = AB if rng.random() < 0.7 else ABC
        machine = random_nfa(rng, alphabet)
        small = minimize(machine)
        if small.final and small.state_count <= max_states:
            items.append((f"nfa #{len(items)} over {alphabet}", machine))
    return items
