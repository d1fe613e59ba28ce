"""Regular-expression parsing.

Grammar: alphabet symbols stand for themselves, ``_`` is the empty word,
``@`` the empty language, ``|`` union, juxtaposition concatenation, ``*``
Kleene star, with parentheses for grouping.  Precedence is star, then
concatenation, then union.
"""

from __future__ import annotations

from .automata import Alphabet, Nfa


class ParseError(ValueError):
    """Regex syntax error, carrying the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_EPSILON = "_"
_EMPTY = "@"
_RESERVED = "_@|*()"


class _Builder:
    """Thompson-style fragment builder on an epsilon-NFA scratch graph."""

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self.eps: list[set[int]] = []
        self.sym: list[list[set[int]]] = []

    def fresh(self) -> int:
        self.eps.append(set())
        self.sym.append([set() for _ in self.alphabet.symbols])
        return len(self.eps) - 1

    def symbol(self, sym: str) -> tuple[int, int]:
        s, t = self.fresh(), self.fresh()
        self.sym[s][self.alphabet.index(sym)].add(t)
        return s, t

    def epsilon(self) -> tuple[int, int]:
        s, t = self.fresh(), self.fresh()
        self.eps[s].add(t)
        return s, t

    def empty(self) -> tuple[int, int]:
        return self.fresh(), self.fresh()

    def concat(self, a, b) -> tuple[int, int]:
        self.eps[a[1]].add(b[0])
        return a[0], b[1]

    def union(self, a, b) -> tuple[int, int]:
        s, t = self.fresh(), self.fresh()
        self.eps[s] |= {a[0], b[0]}
        self.eps[a[1]].add(t)
        self.eps[b[1]].add(t)
        return s, t

    def star(self, a) -> tuple[int, int]:
        s, t = self.fresh(), self.fresh()
        self.eps[s] |= {a[0], t}
        self.eps[a[1]] |= {a[0], t}
        return s, t

    def _closure(self, state: int) -> frozenset[int]:
        seen = {state}
        stack = [state]
        while stack:
            q = stack.pop()
            for t in self.eps[q]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return frozenset(seen)

    def to_nfa(self, fragment: tuple[int, int]) -> Nfa:
        """Eliminate epsilon edges, producing an equivalent plain NFA."""
        start, accept = fragment
        closures = [self._closure(q) for q in range(len(self.eps))]
        rows = []
        for q in range(len(self.eps)):
            row = []
            for k in range(len(self.alphabet)):
                targets: set[int] = set()
                for r in closures[q]:
                    for t in self.sym[r][k]:
                        targets |= closures[t]
                row.append(frozenset(targets))
            rows.append(tuple(row))
        final = frozenset(q for q in range(len(self.eps)) if accept in closures[q])
        return Nfa(self.alphabet, tuple(rows), frozenset({start}), final)


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.pos = 0
        self.alphabet = alphabet
        self.builder = _Builder(alphabet)

    def peek(self) -> str | None:
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self) -> tuple[int, int]:
        fragment = self.union()
        if self.pos != len(self.text):
            raise ParseError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return fragment

    def union(self) -> tuple[int, int]:
        fragment = self.concat()
        while self.peek() == "|":
            self.pos += 1
            fragment = self.builder.union(fragment, self.concat())
        return fragment

    def concat(self) -> tuple[int, int]:
        fragment = self.starred()
        while self.peek() not in (None, "|", ")"):
            fragment = self.builder.concat(fragment, self.starred())
        return fragment

    def starred(self) -> tuple[int, int]:
        fragment = self.atom()
        while self.peek() == "*":
            self.pos += 1
            fragment = self.builder.star(fragment)
        return fragment

    def atom(self) -> tuple[int, int]:
        c = self.peek()
        if c is None:
            raise ParseError("unexpected end of pattern", self.pos)
        if c == "(":
            self.pos += 1
            fragment = self.union()
            if self.peek() != ")":
                raise ParseError("missing ')'", self.pos)
            self.pos += 1
            return fragment
        if c == _EPSILON:
            self.pos += 1
            return self.builder.epsilon()
        if c == _EMPTY:
            self.pos += 1
            return self.builder.empty()
        if c in "|*)":
            raise ParseError(f"unexpected {c!r}", self.pos)
        if c not in self.alphabet:
            raise ParseError(f"symbol {c!r} not in alphabet", self.pos)
        self.pos += 1
        return self.builder.symbol(c)


def parse_regex(text: str, alphabet: Alphabet) -> Nfa:
    """Parse ``text`` into an NFA accepting exactly the denoted language."""
    parser = _Parser(text, alphabet)
    return parser.builder.to_nfa(parser.parse())


def regex_symbols(text: str) -> str:
    """The alphabet symbols mentioned in a pattern, in order of appearance."""
    seen: list[str] = []
    for c in text:
        if c not in _RESERVED and c not in seen:
            seen.append(c)
    return "".join(seen)
