"""Quotients, atoms, atomata, and the four quotient lattices of a regular
language, with machine-checked duality."""

from .automata import (
    Alphabet,
    AlphabetMismatch,
    Dfa,
    EmptyLanguage,
    Nfa,
    bounded_words,
    canonical_form,
    complement,
    determinize,
    equivalent,
    language_is_empty,
    language_subset,
    language_words,
    languages_disjoint,
    minimize,
    reverse,
    sample_words,
    state_language,
    trim,
)
from .complexity import ComplexityReport, complexity_report
from .decomposition import (
    IdentityReport,
    LanguageDecomposition,
    QuotientAtomMatrix,
    atomaton,
    decompose,
    left_atom_language,
    left_quotient_language,
    quotient_atom_matrix,
    right_atom_language,
    right_quotient_atom_matrix,
    right_quotient_language,
    verify_quotient_atom_identities,
)
from .lattices import (
    ALL_KINDS,
    INTERSECTION_LEFT,
    INTERSECTION_RIGHT,
    UNION_LEFT,
    UNION_RIGHT,
    DualityReport,
    ElementNotInLattice,
    LatticeElement,
    LatticeKind,
    QuotientLattice,
    build_lattice,
    element_language,
    hasse_edges,
    is_distributive,
    join,
    meet,
    phi,
    phi_prime,
    psi,
    psi_prime,
    verify_duality,
)
from .pairing import (
    ONE,
    ZERO,
    Bool2,
    PairingContext,
    matrix_via_pairing,
    orthogonal_complement,
    pair_atoms,
    pair_sets,
    phi_via_pairing,
    psi_via_pairing,
)
from .regex import ParseError, parse_regex

__version__ = "0.1.0"

__all__ = [
    "ALL_KINDS",
    "Alphabet",
    "AlphabetMismatch",
    "Bool2",
    "ComplexityReport",
    "Dfa",
    "DualityReport",
    "ElementNotInLattice",
    "EmptyLanguage",
    "IdentityReport",
    "INTERSECTION_LEFT",
    "INTERSECTION_RIGHT",
    "LanguageDecomposition",
    "LatticeElement",
    "LatticeKind",
    "Nfa",
    "ONE",
    "ParseError",
    "PairingContext",
    "QuotientAtomMatrix",
    "QuotientLattice",
    "UNION_LEFT",
    "UNION_RIGHT",
    "ZERO",
    "atomaton",
    "bounded_words",
    "build_lattice",
    "canonical_form",
    "complement",
    "complexity_report",
    "decompose",
    "determinize",
    "element_language",
    "equivalent",
    "hasse_edges",
    "is_distributive",
    "join",
    "language_is_empty",
    "language_subset",
    "language_words",
    "languages_disjoint",
    "left_atom_language",
    "left_quotient_language",
    "matrix_via_pairing",
    "meet",
    "minimize",
    "orthogonal_complement",
    "pair_atoms",
    "pair_sets",
    "parse_regex",
    "phi",
    "phi_prime",
    "phi_via_pairing",
    "psi",
    "psi_prime",
    "psi_via_pairing",
    "quotient_atom_matrix",
    "reverse",
    "right_atom_language",
    "right_quotient_atom_matrix",
    "right_quotient_language",
    "sample_words",
    "state_language",
    "trim",
    "verify_duality",
    "verify_quotient_atom_identities",
]
