"""Generators, words, normal forms and the Lorentz connection."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from gasket.core import (GasketError, Q_D, Q_L, W_STANDARD, identity_matrix,
                         mat_mul, mat_vec, transpose, validate_augmented)
from gasket.group import (ALL_LETTERS, ALL_PERMUTATIONS, D_MATRIX,
                          GeneratorLetter, GroupWord, J0, WordError, apply,
                          conjugate_J0, generator_matrix, is_aut_QD,
                          is_lorentz_integer, is_normal_form, letter,
                          lorentz_point, lorentz_point_inverse,
                          normalize_word, perm_matrix, stabilizer_matrix)


def test_generator_matrices_printed_values():
    s1 = generator_matrix(letter("s1"))
    assert s1 == ((-1, 2, 2, 2), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    t1 = generator_matrix(letter("t1"))
    assert t1 == transpose(s1)
    s3 = generator_matrix(letter("s3"))
    assert s3[2] == (2, 2, -1, 2)


def test_generators_are_involutive_form_automorphisms():
    ident = identity_matrix(4)
    for l in ALL_LETTERS:
        m = l.matrix()
        assert mat_mul(m, m) == ident
        assert is_aut_QD(m)


def test_apply_on_quadruples():
    assert apply(letter("s1"), (15, 2, 2, 3)) == (-1, 2, 2, 3)
    assert apply(letter("s4"), (-1, 2, 2, 3)) == (-1, 2, 2, 3)
    assert apply(letter("t1"), (-1, 2, 2, 3)) == (1, 0, 0, 1)


def test_apply_preserves_validity_on_matrices():
    w = W_STANDARD
    for l in ALL_LETTERS:
        assert validate_augmented(apply(l, w))


def test_word_text_round_trip():
    w = GroupWord.from_text("s1 t2 s3")
    assert w.text == "s1 t2 s3"
    assert [l.text for l in w.applied_order()] == ["s3", "t2", "s1"]
    assert w.inverse().text == "s3 t2 s1"
    assert mat_mul(w.matrix(), w.inverse().matrix()) == identity_matrix(4)
    with pytest.raises(WordError):
        GroupWord.from_text("s5")


def test_normal_form_rules():
    # Applied order: s2 then t1 is fine, s2 then t3 is not.
    assert is_normal_form(GroupWord.from_text("t2 s2"))
    assert not is_normal_form(GroupWord.from_text("t3 s2"))
    assert not is_normal_form(GroupWord.from_text("s2 s2"))
    assert not is_normal_form(GroupWord.from_text("t1 t1"))
    assert is_normal_form(GroupWord.from_text("s1 t1"))


def test_normalize_word_example():
    # Applied order [s2, t1] must reorder to [t1, s2].
    w = GroupWord.from_text("t1 s2")
    n = normalize_word(w)
    assert n.text == "s2 t1"
    assert n.matrix() == w.matrix()


@settings(max_examples=200)
@given(st.lists(st.sampled_from([l.text for l in ALL_LETTERS]), max_size=14))
def test_normalize_word_properties(texts):
    w = GroupWord(tuple(letter(t) for t in texts))
    n = normalize_word(w)
    assert n.matrix() == w.matrix()
    assert len(n) <= len(w)
    assert is_normal_form(n)
    assert normalize_word(n) == n


def test_perm_conjugation_relabels_generators():
    for perm in ALL_PERMUTATIONS:
        p = perm_matrix(perm)
        p_inv = transpose(p)
        for i in range(4):
            lhs = mat_mul(mat_mul(p, generator_matrix(
                GeneratorLetter("s", i + 1))), p_inv)
            j = perm.index(i)
            assert lhs == generator_matrix(GeneratorLetter("s", j + 1))


def test_j0_involution_and_lorentz_conjugation():
    assert mat_mul(J0, J0) == identity_matrix(4)
    assert conjugate_J0(D_MATRIX) == (
        (1, 0, 0, 0), (0, -1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1))
    s1l = conjugate_J0(letter("s1"))
    assert s1l == ((2, -1, -1, -1), (1, 0, -1, -1),
                   (1, -1, 0, -1), (1, -1, -1, 0))
    for l in ALL_LETTERS:
        u = conjugate_J0(l)
        assert is_lorentz_integer(u)


def test_lorentz_point_examples():
    assert lorentz_point((0, 0, 1, 1)) == (1, -1, 0, 0)
    assert lorentz_point((-1, 2, 2, 3)) == (3, -2, -2, -1)
    for q in ((0, 0, 1, 1), (-1, 2, 2, 3), (-6, 11, 14, 15)):
        y = lorentz_point(q)
        assert -y[0] ** 2 + y[1] ** 2 + y[2] ** 2 + y[3] ** 2 == 0
        assert lorentz_point_inverse(y) == q


def test_stabilizer_matrices():
    fixed = (1, 1, 0, 0)
    for typ in ("I", "II", "III", "IV"):
        sm = stabilizer_matrix(2, 0, typ)
        assert is_lorentz_integer(sm.matrix)
        assert mat_vec(sm.matrix, fixed) == fixed
    a = stabilizer_matrix(1, 1).matrix
    b = stabilizer_matrix(2, -2).matrix
    assert mat_mul(a, b) == stabilizer_matrix(3, -1).matrix
    inv = stabilizer_matrix(-1, -1).matrix
    assert mat_mul(a, inv) == identity_matrix(4)
    with pytest.raises(GasketError):
        stabilizer_matrix(1, 2)


def test_random_words_are_form_automorphisms():
    rng = random.Random(42)
    for _ in range(50):
        letters = tuple(rng.choice(ALL_LETTERS) for _ in range(rng.randrange(10)))
        u = GroupWord(letters).matrix()
        assert is_aut_QD(u)
        assert is_lorentz_integer(conjugate_J0(u))
