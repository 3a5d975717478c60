"""Completing three mutually tangent circles to a full configuration."""

import random
from fractions import Fraction

import pytest

from gasket.complete import (CompletionError, complete,
                             complex_descartes_linear_holds,
                             complex_descartes_quadratic_holds, sqrt_fraction,
                             strong_integrality_from_three)
from gasket.core import (W_STANDARD, circle_from_row, curvatures,
                         validate_augmented)
from gasket.group import ALL_LETTERS, GroupWord, apply


def random_tangent_triple(rng):
    """Three rows of a random image of the standard configuration."""
    letters = []
    last = None
    for _ in range(rng.randrange(0, 12)):
        pick = rng.choice([l for l in ALL_LETTERS if l != last])
        last = pick
        letters.append(pick)
    mat = apply(GroupWord(tuple(reversed(letters))), W_STANDARD)
    drop = rng.randrange(4)
    kept = tuple(circle_from_row(mat[i]) for i in range(4) if i != drop)
    return kept, mat[drop]


def test_sqrt_fraction():
    assert sqrt_fraction(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_fraction(0) == 0
    assert sqrt_fraction(49) == 7
    assert sqrt_fraction(Fraction(2)) is None
    assert sqrt_fraction(Fraction(-1, 4)) is None


def test_complete_two_lines():
    # Lines x = 0 and x = 2 with the unit circle pinched between them.
    a = circle_from_row((0, 0, -1, 0))
    b = circle_from_row((4, 0, 1, 0))
    c = circle_from_row((0, 1, 1, 0))
    sols = complete(a, b, c)
    for mat in sols:
        assert validate_augmented(mat)
        assert sorted(curvatures(mat)) == [0, 0, 1, 1]
    # The two completions differ in the fourth row only.
    rows = {m[3] for m in sols}
    assert rows == {(4, 1, 1, 2), (4, 1, 1, -2)}


def test_complete_double_root():
    # Curvatures (-1, 2, 2) complete with fourth curvature 3 both ways.
    a = circle_from_row((1, -1, 0, 0))
    b = circle_from_row((0, 2, 1, 0))
    c = circle_from_row((0, 2, -1, 0))
    sols = complete(a, b, c)
    fourth = sorted(m[3] for m in sols)
    assert fourth == [(1, 3, 0, -2), (1, 3, 0, 2)]


def test_complete_recovers_dropped_row():
    rng = random.Random(11)
    for _ in range(200):
        kept, dropped = random_tangent_triple(rng)
        sols = complete(*kept)
        assert any(dropped in m for m in sols)
        for m in sols:
            assert validate_augmented(m)


def test_strong_integrality_propagates():
    rng = random.Random(13)
    for _ in range(200):
        kept, _ = random_tangent_triple(rng)
        assert strong_integrality_from_three(kept)
        for m in complete(*kept):
            for row in m:
                for x in row[1:]:
                    assert x == int(x)


def test_strong_integrality_detects_fractions():
    kept = tuple(circle_from_row(r) for r in
                 ((0, 0, 0, 1),
                  (2, 0, 0, 1),
                  (Fraction(1, 8), 2, Fraction(1, 2), 1)))
    assert not strong_integrality_from_three(kept)


def test_complex_descartes_identities():
    rng = random.Random(17)
    for _ in range(100):
        kept, _ = random_tangent_triple(rng)
        for m in complete(*kept):
            assert complex_descartes_quadratic_holds(m)
            assert complex_descartes_linear_holds(m)


def test_complete_rejects_non_tangent_input():
    a = circle_from_row((1, -1, 0, 0))
    far = circle_from_row((Fraction(399, 2), 2, 20, 0))
    c = circle_from_row((0, 2, -1, 0))
    with pytest.raises(CompletionError):
        complete(a, far, c)


def test_complete_rejects_common_point_triple():
    # A line and two circles all tangent to each other at the origin.
    a = circle_from_row((0, 0, 0, 1))
    b = circle_from_row((0, 2, 0, 1))
    c = circle_from_row((0, 4, 0, 1))
    with pytest.raises(CompletionError):
        complete(a, b, c)
