"""
Tests for braid words, representations and the character τ_R.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braid import (
    FINGERPRINT_LABEL,
    BraidWord,
    BraidWordError,
    StrandCountError,
    character,
    character_fingerprint,
    character_value,
    factorization_defect,
    fingerprint_distance,
    free_reduce,
    gram_matrix,
    inverse_word,
    markov_defect,
    parse_word,
    positivity_defect,
    random_word,
    random_words,
    rationality_check,
    represent,
    shift_word,
    trace_defect,
    word,
)
from gaussian import HeckeFamily, hecke_gaussian
from hecke import flip, spectral_split
from rmatrix import conjugate_uu, validate
from tensorlinalg import NotProjectionError, amplify, frobenius, random_unitary, wedge

letters = st.lists(st.integers(min_value=-3, max_value=3).filter(lambda l: l != 0), max_size=8)


def test_word_basics():
    w = parse_word("1 2 -1")
    assert w.letters == (1, 2, -1)
    assert w.strands == 3
    assert BraidWord().strands == 1
    assert str(w) == "1 2 -1"


def test_word_rejects_zero_and_garbage():
    with pytest.raises(BraidWordError):
        word(1, 0)
    with pytest.raises(BraidWordError):
        parse_word("1 x")


@pytest.mark.parametrize("letters, reduced", [
    ((1, -1), ()),
    ((1, 2, -2, 1), (1, 1)),
    ((2, 1, -1, -2, 3), (3,)),
])
def test_free_reduce(letters, reduced):
    assert free_reduce(BraidWord(letters)).letters == reduced


def test_shift_word():
    assert shift_word(word(1), 1) == word(2)
    assert shift_word(word(-2, 3), 2) == word(-4, 5)


@given(letters)
def test_word_times_inverse_reduces_to_empty(ls):
    w = BraidWord(tuple(ls))
    assert free_reduce(w + inverse_word(w)) == BraidWord()


def test_random_word_is_reproducible():
    a = random_word(np.random.default_rng(3), 4)
    b = random_word(np.random.default_rng(3), 4)
    assert a == b
    assert a.strands <= 4 and len(a) <= 8


def test_represent(qpi3):
    assert frobenius(represent(qpi3, BraidWord(), 2) - np.eye(9)) == 0
    assert frobenius(represent(qpi3, word(1, -1), 2) - np.eye(9)) < 1e-12
    lhs = represent(qpi3, word(1, 2, 1), 3)
    rhs = represent(qpi3, word(2, 1, 2), 3)
    assert frobenius(lhs - rhs) < 1e-10
    with pytest.raises(StrandCountError):
        represent(qpi3, word(3), 3)


def test_far_generators_commute(qi):
    b1, b3 = amplify(qi.M, 1, 4, 2), amplify(qi.M, 3, 4, 2)
    assert frobenius(b1 @ b3 - b3 @ b1) < 1e-12


def test_character_values(qi):
    assert character(qi, BraidWord()).value == pytest.approx(1)
    report = character(qi, word(1))
    assert report.value == pytest.approx(-(1 - 1j) / 2)
    assert report.strands_used == 2
    assert report.stabilization_defect < 1e-10
    assert character(qi, word(1, 2)).value == pytest.approx(-0.5j)


@settings(max_examples=30, deadline=None)
@given(letters)
def test_character_invariant_under_free_reduction(qpi3, ls):
    w = BraidWord(tuple(ls))
    n = max(w.strands, 2)
    assert abs(character_value(qpi3, w, n) - character_value(qpi3, free_reduce(w), n)) < 1e-10


def test_character_invariant_under_equivalence(qpi3, rng):
    S = conjugate_uu(qpi3, random_unitary(3, rng))
    for w in random_words(rng, 20, 4, 6):
        assert abs(character(S, w).value - character(qpi3, w).value) < 1e-10


def test_trace_property(qi, rng):
    pairs = [(random_word(rng, 4), random_word(rng, 4)) for _ in range(50)]
    assert trace_defect(qi, pairs) < 1e-10


def test_factorization(qpi3, rng):
    triples = []
    for _ in range(20):
        n = int(rng.integers(1, 3))
        triples.append((random_word(rng, n + 1, 4), random_word(rng, 3, 4), n))
    assert factorization_defect(qpi3, triples) < 1e-10
    with pytest.raises(StrandCountError):
        factorization_defect(qpi3, [(word(3), word(1), 1)])


def test_markov_defect_for_hecke_representative(qpi3, rng):
    assert markov_defect(qpi3, random_words(rng, 30, 3, 6)) < 1e-10


def test_markov_defect_for_scalar():
    R = validate(np.exp(0.7j) * np.eye(4), 2)
    assert markov_defect(R, [word(1, 2), word(-1), word(2, 2, -1)]) < 1e-12


def test_markov_defect_detects_non_scalar_partial_trace():
    p, q, s = 1, 1j, -1
    R2 = validate(np.array([[p, 0, 0, 0], [0, 0, q, 0], [0, q, 0, 0], [0, 0, 0, s]]), 2)
    words = [BraidWord(), word(1), word(1, 1), word(-1), word(1, 2), word(2, 2)]
    assert markov_defect(R2, words) > 0.01


def test_gram_matrix_is_positive(qi, rng):
    words = random_words(rng, 12, 3, 5)
    G = gram_matrix(qi, words)
    assert frobenius(G - G.conj().T) < 1e-10
    assert np.allclose(np.diag(G), 1)
    assert positivity_defect(qi, words) < 1e-10


def test_rationality_check(qpi3, qpi3_flip):
    value, defect = rationality_check(qpi3, np.eye(9), 2)
    assert value == pytest.approx(9) and defect < 1e-12

    value, defect = rationality_check(qpi3, spectral_split(qpi3).P, 2)
    assert value == pytest.approx(3) and defect < 1e-8

    P = spectral_split(qpi3_flip).P
    meet = np.eye(81)
    for k in (1, 2, 3):
        meet = wedge(meet, amplify(P, k, 4, 3))
    value, defect = rationality_check(qpi3_flip, meet, 4)
    assert value == pytest.approx(9, abs=1e-6) and defect < 1e-6

    with pytest.raises(NotProjectionError):
        rationality_check(qpi3, 2 * np.eye(9), 2)


def test_fingerprint_is_deterministic_and_reduced(qi):
    f = character_fingerprint(qi, max_length=3, strands=3)
    g = character_fingerprint(qi, max_length=3, strands=3)
    assert f.label == FINGERPRINT_LABEL
    # 1 + 4 + 4·3 + 4·3·3 freely reduced words
    assert len(f) == 1 + 4 + 12 + 36
    assert f.words == g.words and fingerprint_distance(f, g) == 0
    assert all(free_reduce(w) == w for w in f.words)
    for w, v in zip(f.words, f.values):
        assert abs(v - character_value(qi, w, 3)) < 1e-12


def test_fingerprint_distance_requires_same_scope(qi):
    with pytest.raises(ValueError):
        fingerprint_distance(character_fingerprint(qi, 2, 3), character_fingerprint(qi, 3, 3))


def test_fingerprints_separate_flip(qpi3, qpi3_flip):
    d = fingerprint_distance(character_fingerprint(qpi3, 2, 3), character_fingerprint(qpi3_flip, 2, 3))
    assert d > 1e-3


@pytest.mark.slow
@pytest.mark.parametrize("family, m", [
    (HeckeFamily.QI, 1),
    (HeckeFamily.QI, 2),
    (HeckeFamily.QI, 3),
    (HeckeFamily.QPI3, 1),
    (HeckeFamily.QPI3, 2),
    ("flip", 1),
])
def test_hecke_representatives_have_markov_characters(family, m, rng):
    R = flip(hecke_gaussian(HeckeFamily.QPI3, m)) if family == "flip" else hecke_gaussian(family, m)
    # V^{⊗4} at d=6 is too large for a suite run; two-strand words keep the tower at three strands
    strands = 3 if R.d <= 4 else 2
    words = random_words(rng, 100, strands)
    assert markov_defect(R, words) < 1e-10

    triples = []
    for _ in range(100):
        n = int(rng.integers(1, strands))
        triples.append((random_word(rng, n + 1), random_word(rng, 2), n))
    assert factorization_defect(R, triples) < 1e-10

    n = max(strands, 3)
    assert frobenius(represent(R, word(1, 2, 1), n) - represent(R, word(2, 1, 2), n)) < 1e-10
