"""Wire formats: automaton JSON, Graphviz DOT, and display labels.

All exports are deterministic: identical inputs give byte-identical
output.
"""

from __future__ import annotations

import json

from .automata import Alphabet, Dfa, Nfa, as_nfa, language_words, sample_words
from .decomposition import QuotientAtomMatrix
from .lattices import QuotientLattice, hasse_edges

EPSILON_DISPLAY = "ε"


def automaton_to_dict(machine: Nfa | Dfa) -> dict:
    """JSON-ready dict: alphabet string, state count, initial/final arrays,
    and transitions sorted by (from, symbol, to)."""
    n = as_nfa(machine)
    return {
        "alphabet": str(n.alphabet),
        "states": n.state_count,
        "initial": sorted(n.initial),
        "final": sorted(n.final),
        "transitions": [
            {"from": p, "symbol": sym, "to": q} for p, sym, q in n.edges()
        ],
    }


def automaton_from_dict(data: dict) -> Nfa:
    try:
        alphabet = Alphabet.of(data["alphabet"])
        return Nfa.build(
            int(data["states"]),
            alphabet,
            [(t["from"], t["symbol"], t["to"]) for t in data["transitions"]],
            data["initial"],
            data["final"],
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed automaton data: {exc}") from exc


def save_automaton(machine: Nfa | Dfa, path):
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(automaton_to_dict(machine), handle, indent=2, sort_keys=True)
        handle.write("\n")


def load_automaton(path) -> Nfa:
    with open(path, encoding="utf-8") as handle:
        return automaton_from_dict(json.load(handle))


def automaton_dot(machine: Nfa | Dfa, name: str = "automaton") -> str:
    """DOT digraph: one node per state, doubled circles on final states,
    parallel edges folded with comma-joined labels."""
    n = as_nfa(machine)
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for q in n.states:
        shape = "doublecircle" if q in n.final else "circle"
        lines.append(f'  q{q} [shape={shape} label="{q}"];')
    for q in sorted(n.initial):
        lines.append(f"  start{q} [shape=point style=invis];")
        lines.append(f"  start{q} -> q{q};")
    folded: dict[tuple[int, int], list[str]] = {}
    for p, sym, q in n.edges():
        folded.setdefault((p, q), []).append(sym)
    for (p, q), symbols in sorted(folded.items()):
        label = ",".join(symbols)
        lines.append(f'  q{p} -> q{q} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_word(word: str) -> str:
    return word if word else EPSILON_DISPLAY


def language_label(machine: Nfa | Dfa, word_bound: int) -> str:
    """Finite languages printed exactly; infinite ones as the shortest
    words up to the bound with an ellipsis marker."""
    exact = language_words(machine)
    if exact is not None:
        inner = ", ".join(format_word(w) for w in sorted(exact, key=lambda w: (len(w), w)))
        return "{" + inner + "}"
    sample, _ = sample_words(machine, word_bound, max_len=4 * word_bound + 4)
    inner = ", ".join(format_word(w) for w in sample)
    return "{" + inner + ", …}"


def element_label(atoms, language_machine, word_bound: int) -> str:
    """Atom-index set plus a word sample, the display name of a lattice
    element."""
    indices = "{" + ",".join(str(i) for i in sorted(atoms)) + "}"
    return f"{indices} {language_label(language_machine, word_bound)}"


def lattice_to_dict(lattice: QuotientLattice, labels=None) -> dict:
    data = {
        "kind": lattice.kind.name,
        "elements": [sorted(e.atoms) for e in lattice.elements],
        "cover_edges": [list(edge) for edge in hasse_edges(lattice)],
    }
    if labels is not None:
        data["labels"] = list(labels)
    return data


def lattice_dot(lattice: QuotientLattice, labels) -> str:
    """DOT Hasse diagram of the cover relation, drawn bottom to top."""
    lines = [
        f'digraph "{lattice.kind.name}" {{',
        "  rankdir=BT;",
        "  node [shape=box];",
    ]
    for i, label in enumerate(labels):
        lines.append(f'  e{i} [label="{label}"];')
    for low, high in hasse_edges(lattice):
        lines.append(f"  e{low} -> e{high};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def matrix_to_rows(matrix: QuotientAtomMatrix) -> list[list[int]]:
    return [list(row) for row in matrix.entries]


def matrix_text(matrix: QuotientAtomMatrix) -> str:
    return "\n".join(" ".join(str(cell) for cell in row) for row in matrix.entries)


def to_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
