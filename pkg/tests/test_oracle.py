"""The brute-force reference implementations, pinned on worked examples
and cross-checked against the main pipeline."""

import random

import pytest
from helpers import AB, machine_matches, nfa_from_words, random_dfa, random_nfa

from quotlat import (
    Dfa,
    decompose,
    determinize,
    language_words,
    left_atom_language,
    left_quotient_language,
    minimize,
    right_quotient_language,
)
from quotlat.oracle import (
    FiniteLanguage,
    FiniteOrCofinite,
    atoms_bruteforce,
    left_quotients_bruteforce,
    minimize_refinement,
    right_quotients_bruteforce,
)

GOLDEN = FiniteLanguage(AB, frozenset({"", "a", "aa", "ba"}))


def fs(*words):
    return frozenset(words)


class TestQuotientsBruteforce:
    def test_golden_left_quotients(self):
        assert left_quotients_bruteforce(GOLDEN) == {
            fs("", "a", "aa", "ba"),
            fs("", "a"),
            fs("a"),
            fs(""),
            fs(),
        }

    def test_golden_right_quotients(self):
        assert right_quotients_bruteforce(GOLDEN) == {
            fs(),
            fs(""),
            fs("", "a", "b"),
            fs("", "a", "aa", "ba"),
        }

    def test_empty_language(self):
        empty = FiniteLanguage(AB, frozenset())
        assert left_quotients_bruteforce(empty) == {fs()}
        assert right_quotients_bruteforce(empty) == {fs()}

    def test_single_word_left(self):
        lang = FiniteLanguage(AB, fs("ab"))
        assert left_quotients_bruteforce(lang) == {fs("ab"), fs("b"), fs(""), fs()}

    def test_single_word_right(self):
        lang = FiniteLanguage(AB, fs("ab"))
        assert right_quotients_bruteforce(lang) == {fs("ab"), fs("a"), fs(""), fs()}


class TestAtomsBruteforce:
    def test_golden_left_atoms(self):
        atoms = atoms_bruteforce(GOLDEN, "left")
        assert atoms == {
            FiniteOrCofinite(fs("", "a", "aa", "ba"), cofinite=True),
            FiniteOrCofinite(fs("aa", "ba")),
            FiniteOrCofinite(fs("a")),
            FiniteOrCofinite(fs("")),
        }

    def test_golden_right_atoms(self):
        atoms = atoms_bruteforce(GOLDEN, "right")
        assert atoms == {
            FiniteOrCofinite(fs("")),
            FiniteOrCofinite(fs("b")),
            FiniteOrCofinite(fs("a")),
            FiniteOrCofinite(fs("ba", "aa")),
            FiniteOrCofinite(fs("", "a", "b", "aa", "ba"), cofinite=True),
        }

    def test_epsilon_language_atoms(self):
        lang = FiniteLanguage(AB, fs(""))
        assert atoms_bruteforce(lang, "left") == {
            FiniteOrCofinite(fs("")),
            FiniteOrCofinite(fs(""), cofinite=True),
        }

    def test_bad_side_rejected(self):
        with pytest.raises(ValueError):
            atoms_bruteforce(GOLDEN, "middle")


class TestFiniteOrCofinite:
    def test_complement_round_trip(self):
        value = FiniteOrCofinite(fs("a", "bb"))
        assert value.complement().complement() == value
        assert value.complement().cofinite

    def test_intersections(self):
        fin_a = FiniteOrCofinite(fs("a", "b"))
        fin_b = FiniteOrCofinite(fs("b", "ab"))
        cof_a = FiniteOrCofinite(fs("a"), cofinite=True)
        cof_b = FiniteOrCofinite(fs("b"), cofinite=True)
        assert fin_a.intersect(fin_b) == FiniteOrCofinite(fs("b"))
        assert fin_a.intersect(cof_a) == FiniteOrCofinite(fs("b"))
        assert cof_a.intersect(cof_b) == FiniteOrCofinite(fs("a", "b"), cofinite=True)

    def test_emptiness(self):
        assert FiniteOrCofinite(fs()).is_empty
        assert not FiniteOrCofinite(fs(), cofinite=True).is_empty


class TestMinimizeRefinement:
    def test_figure_dfa_already_minimal(self):
        canonical = minimize(nfa_from_words({"", "a", "aa", "ba"}, AB))
        assert minimize_refinement(canonical) == canonical

    def test_merges_bisimilar_sinks(self):
        d = Dfa(AB, ((1, 2), (1, 1), (2, 2)), 0, frozenset({1, 2}))
        merged = minimize_refinement(d)
        assert merged.state_count == 2

    def test_agrees_with_double_reversal_on_random_dfas(self):
        rng = random.Random(71)
        for _ in range(200):
            d = random_dfa(rng, AB)
            assert minimize_refinement(d) == minimize(d)


class TestOracleAgainstPipeline:
    def test_decompose_matches_bruteforce_on_small_finite_languages(self):
        rng = random.Random(73)
        for _ in range(60):
            words = frozenset(
                "".join(rng.choice("ab") for _ in range(rng.randint(0, 6)))
                for _ in range(rng.randint(1, 6))
            )
            if not words:
                continue
            lang = FiniteLanguage(AB, words)
            machine = nfa_from_words(words, AB)
            d = decompose(machine)
            assert {
                language_words(left_quotient_language(d, j))
                for j in range(d.quotient_count)
            } == left_quotients_bruteforce(lang)
            assert {
                language_words(right_quotient_language(d, i))
                for i in range(d.atom_count)
            } == right_quotients_bruteforce(lang)
            expected_left = atoms_bruteforce(lang, "left")
            assert d.atom_count == len(expected_left)
            for i in range(d.atom_count):
                machine_i = left_atom_language(d, i)
                assert any(
                    machine_matches(machine_i, ref, AB) for ref in expected_left
                )

    def test_refinement_on_determinized_random_nfas(self):
        rng = random.Random(79)
        for _ in range(50):
            d = determinize(random_nfa(rng, AB))
            assert minimize_refinement(d) == minimize(d)
