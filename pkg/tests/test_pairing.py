"""The concatenation pairing, its matrix form, and the pairing versions of
the duality maps, cross-checked against a word-level search oracle."""

import random

import pytest
from helpers import word_pairing_oracle

from quotlat import (
    INTERSECTION_LEFT,
    UNION_LEFT,
    Bool2,
    ONE,
    ZERO,
    PairingContext,
    build_lattice,
    language_words,
    left_atom_language,
    matrix_via_pairing,
    orthogonal_complement,
    pair_atoms,
    pair_sets,
    phi,
    phi_via_pairing,
    psi,
    psi_via_pairing,
    quotient_atom_matrix,
    right_atom_language,
)


def fs(*items):
    return frozenset(items)


def atom_index_by_words(d, side, words):
    """Locate an atom by its exact (finite) language."""
    count = d.atom_count if side == "left" else d.quotient_count
    probe = left_atom_language if side == "left" else right_atom_language
    for i in range(count):
        if language_words(probe(d, i)) == words:
            return i
    raise AssertionError(f"no {side} atom with words {sorted(words)}")


class TestBool2:
    def test_addition_table(self):
        assert ZERO + ZERO == ZERO
        assert ZERO + ONE == ONE
        assert ONE + ZERO == ONE
        assert ONE + ONE == ONE  # idempotent addition

    def test_multiplication_table(self):
        assert ZERO * ZERO == ZERO
        assert ZERO * ONE == ZERO
        assert ONE * ZERO == ZERO
        assert ONE * ONE == ONE

    def test_value_domain(self):
        with pytest.raises(ValueError):
            Bool2(2)
        assert int(ONE) == 1 and bool(ZERO) is False


class TestPairAtoms:
    def test_b_of_b_pairs_with_a(self, golden):
        # <{b}, {a}> = 1 because b concatenated with a lies in the language
        ctx = PairingContext.from_decomposition(golden)
        i = atom_index_by_words(golden, "right", fs("b"))
        j = atom_index_by_words(golden, "left", fs("a"))
        assert pair_atoms(ctx, i, j) == ONE

    def test_eps_pairs_with_eps(self, golden):
        ctx = PairingContext.from_decomposition(golden)
        i = atom_index_by_words(golden, "right", fs(""))
        j = atom_index_by_words(golden, "left", fs(""))
        assert pair_atoms(ctx, i, j) == ONE

    def test_negative_atom_pairs_with_nothing(self, golden):
        ctx = PairingContext.from_decomposition(golden)
        j = golden.negative_left_atom
        for i in range(ctx.right_atom_count):
            assert pair_atoms(ctx, i, j) == ZERO

    def test_index_bounds(self, golden):
        ctx = PairingContext.from_decomposition(golden)
        with pytest.raises(IndexError):
            pair_atoms(ctx, 99, 0)
        with pytest.raises(IndexError):
            pair_atoms(ctx, 0, -1)


class TestPairSets:
    def test_empty_operand_gives_zero(self, golden):
        ctx = PairingContext.from_decomposition(golden)
        assert pair_sets(ctx, fs(), fs(0, 1, 2, 3)) == ZERO
        assert pair_sets(ctx, fs(0, 1), fs()) == ZERO

    def test_everything_pairs_with_everything(self, corpus_decompositions):
        for name, d in corpus_decompositions[:40]:
            ctx = PairingContext.from_decomposition(d)
            assert pair_sets(
                ctx,
                fs(*range(ctx.right_atom_count)),
                fs(*range(ctx.left_atom_count)),
            ) == ONE, name

    def test_bilinearity_exhaustive_on_golden(self, golden):
        ctx = PairingContext.from_decomposition(golden)
        rights = range(ctx.right_atom_count)
        lefts = range(ctx.left_atom_count)
        subsets_r = [frozenset(i for i in rights if mask >> i & 1) for mask in range(2 ** len(rights))]
        subsets_l = [frozenset(j for j in lefts if mask >> j & 1) for mask in range(2 ** len(lefts))]
        for a in subsets_r[:16]:
            for a2 in subsets_r[:16]:
                for b in subsets_l:
                    assert pair_sets(ctx, a | a2, b) == pair_sets(ctx, a, b) + pair_sets(ctx, a2, b)
        for a in subsets_r[:16]:
            for b in subsets_l:
                for b2 in subsets_l:
                    assert pair_sets(ctx, a, b | b2) == pair_sets(ctx, a, b) + pair_sets(ctx, a, b2)

    def test_agrees_with_word_oracle_on_random_sets(self, corpus_decompositions):
        rng = random.Random(107)
        small = [
            (name, d)
            for name, d in corpus_decompositions
            if d.quotient_count <= 6 and d.atom_count <= 7
        ]
        checked = 0
        while checked < 50:
            name, d = small[rng.randrange(len(small))]
            ctx = PairingContext.from_decomposition(d)
            a = frozenset(
                i for i in range(ctx.right_atom_count) if rng.random() < 0.4
            )
            b = frozenset(
                j for j in range(ctx.left_atom_count) if rng.random() < 0.4
            )
            assert int(pair_sets(ctx, a, b)) == word_pairing_oracle(d, a, b), name
            checked += 1


class TestOrthogonalComplement:
    def test_of_empty_set_is_everything(self, golden):
        ctx = PairingContext.from_decomposition(golden)
        assert orthogonal_complement(ctx, fs()) == fs(0, 1, 2, 3)

    def test_of_b_atom(self, golden):
        # everything except the atom {a} is orthogonal to {b}
        ctx = PairingContext.from_decomposition(golden)
        i = atom_index_by_words(golden, "right", fs("b"))
        j = atom_index_by_words(golden, "left", fs("a"))
        assert orthogonal_complement(ctx, fs(i)) == fs(0, 1, 2, 3) - fs(j)

    def test_of_all_right_atoms(self, golden):
        # only the negative atom pairs with nothing at all
        ctx = PairingContext.from_decomposition(golden)
        everything = fs(*range(ctx.right_atom_count))
        assert orthogonal_complement(ctx, everything) == fs(golden.negative_left_atom)

    def test_matches_zero_rows(self, corpus_decompositions):
        for name, d in corpus_decompositions[:30]:
            ctx = PairingContext.from_decomposition(d)
            everything = fs(*range(ctx.right_atom_count))
            expected = frozenset(
                j
                for j in range(ctx.left_atom_count)
                if not d.left_atom_sets[j]
            )
            assert orthogonal_complement(ctx, everything) == expected, name


class TestMapsViaPairing:
    def test_psi_via_pairing_on_golden(self, golden):
        ctx = PairingContext.from_decomposition(golden)
        lattice = build_lattice(golden, UNION_LEFT)
        for element in lattice.elements:
            assert psi_via_pairing(ctx, element) == psi(golden, element)

    def test_psi_of_top_is_bottom(self, golden):
        ctx = PairingContext.from_decomposition(golden)
        top = build_lattice(golden, UNION_LEFT).top
        assert psi_via_pairing(ctx, top).atoms == fs()

    def test_phi_via_pairing_on_golden(self, golden):
        ctx = PairingContext.from_decomposition(golden)
        lattice = build_lattice(golden, INTERSECTION_LEFT)
        for element in lattice.elements:
            assert phi_via_pairing(ctx, element) == phi(golden, element)

    def test_agreement_on_corpus(self, corpus_decompositions):
        for name, d in corpus_decompositions[:100]:
            ctx = PairingContext.from_decomposition(d)
            for element in build_lattice(d, UNION_LEFT).elements:
                assert psi_via_pairing(ctx, element) == psi(d, element), name
            for element in build_lattice(d, INTERSECTION_LEFT).elements:
                assert phi_via_pairing(ctx, element) == phi(d, element), name

    def test_kind_mismatch_rejected(self, golden):
        ctx = PairingContext.from_decomposition(golden)
        lattice = build_lattice(golden, INTERSECTION_LEFT)
        with pytest.raises(ValueError):
            psi_via_pairing(ctx, lattice.top)
        with pytest.raises(ValueError):
            phi_via_pairing(ctx, build_lattice(golden, UNION_LEFT).top)


class TestPairElements:
    def test_restricted_pairing_on_union_lattices(self, golden):
        from quotlat.pairing import pair_elements

        ctx = PairingContext.from_decomposition(golden)
        left = build_lattice(golden, UNION_LEFT)
        right = build_lattice(golden, psi(golden, left.top).kind)
        for x in left.elements:
            for y in right.elements:
                assert pair_elements(ctx, y, x) == pair_sets(ctx, y.atoms, x.atoms)

    def test_operand_kind_validation(self, golden):
        from quotlat.pairing import pair_elements

        ctx = PairingContext.from_decomposition(golden)
        left = build_lattice(golden, UNION_LEFT)
        inter_left = build_lattice(golden, INTERSECTION_LEFT)
        with pytest.raises(ValueError):
            pair_elements(ctx, left.top, left.top)  # both from the left side
        right = build_lattice(golden, psi(golden, left.top).kind)
        with pytest.raises(ValueError):
            pair_elements(ctx, right.top, inter_left.top)  # mixed operations


class TestMatrixViaPairing:
    def test_equals_quotient_atom_matrix_on_golden(self, golden):
        ctx = PairingContext.from_decomposition(golden)
        assert matrix_via_pairing(ctx) == quotient_atom_matrix(golden)

    def test_universal_language(self, corpus_decompositions):
        for name, d in corpus_decompositions[:100]:
            ctx = PairingContext.from_decomposition(d)
            assert matrix_via_pairing(ctx) == quotient_atom_matrix(d), name

    def test_matrix_entries_match_word_oracle_on_golden(self, golden):
        # every entry of the matrix agrees with the word-level pairing
        ctx = PairingContext.from_decomposition(golden)
        for i in range(ctx.right_atom_count):
            for j in range(ctx.left_atom_count):
                assert int(pair_atoms(ctx, i, j)) == word_pairing_oracle(
                    golden, fs(i), fs(j)
                )


class TestWordLevelSoundness:
    def test_concatenations_witness_the_pairing(self, corpus_decompositions):
        # picking actual member words of paired atoms always lands in the
        # language, and a positive pairing always has a bounded witness
        rng = random.Random(109)
        small = [
            (name, d)
            for name, d in corpus_decompositions
            if d.quotient_count <= 6 and d.atom_count <= 7
        ]
        for name, d in rng.sample(small, 25):
            ctx = PairingContext.from_decomposition(d)
            i = rng.randrange(ctx.right_atom_count)
            j = rng.randrange(ctx.left_atom_count)
            value = int(pair_atoms(ctx, i, j))
            assert value == word_pairing_oracle(d, fs(i), fs(j)), name
