"""Outcome solvers and the closed-form outcome rules."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deadending import (
    ZERO,
    NumberLiteral,
    Outcome,
    add,
    add_all,
    conjugate,
    conjugate_outcome,
    dead_end_sum_outcome,
    dyadic_game,
    integer_game,
    intern,
    is_dead_left_end,
    is_dead_right_end,
    is_left_end,
    lambda_game,
    normal_geq,
    number_literals,
    number_sum_outcome,
    outcome_geq,
    outcome_misere,
    outcome_normal,
    star,
)
from deadending.universes import gen_dead_ends

from strategies import build, shapes


def lit(value):
    return NumberLiteral.from_value(Fraction(value))


def test_misere_examples():
    assert outcome_misere(ZERO) == Outcome.N
    assert outcome_misere(integer_game(1)) == Outcome.R
    assert outcome_misere(integer_game(-3)) == Outcome.L
    assert outcome_misere(intern((), (integer_game(1),))) == Outcome.N
    assert outcome_misere(star()) == Outcome.P
    assert outcome_misere(dyadic_game(lit("1/2"))) == Outcome.R


def test_misere_mixed_number_sums():
    half = dyadic_game(lit("1/2"))
    assert outcome_misere(add(half, conjugate(half))) == Outcome.N
    assert outcome_misere(add(dyadic_game(lit("3/4")), conjugate(half))) == Outcome.R


def test_normal_examples():
    assert outcome_normal(ZERO) == Outcome.P
    assert outcome_normal(integer_game(1)) == Outcome.L
    assert outcome_normal(star()) == Outcome.N


def test_normal_geq():
    assert normal_geq(integer_game(1), ZERO)
    assert not normal_geq(dyadic_game(lit("1/2")), dyadic_game(lit("3/4")))
    g = dyadic_game(lit("3/4"))
    assert normal_geq(g, g)


def test_outcome_order_table():
    L, R, N, P = Outcome.L, Outcome.R, Outcome.N, Outcome.P
    expected = {
        (L, L): True, (L, N): True, (L, P): True, (L, R): True,
        (N, L): False, (N, N): True, (N, P): False, (N, R): True,
        (P, L): False, (P, N): False, (P, P): True, (P, R): True,
        (R, L): False, (R, N): False, (R, P): False, (R, R): True,
    }
    for pair, value in expected.items():
        assert outcome_geq(*pair) == value, pair


@settings(max_examples=150)
@given(shapes)
def test_conjugation_symmetry(shape):
    g = build(shape)
    assert outcome_misere(conjugate(g)) == conjugate_outcome(outcome_misere(g))
    assert outcome_normal(conjugate(g)) == conjugate_outcome(outcome_normal(g))


@settings(max_examples=150)
@given(shapes)
def test_left_ends_favour_left(shape):
    g = build(shape)
    if is_left_end(g):
        assert outcome_misere(g) in (Outcome.L, Outcome.N)


def test_nonzero_dead_ends_are_one_sided():
    for g in gen_dead_ends(3, 2):
        if g == ZERO:
            continue
        if is_dead_left_end(g):
            assert outcome_misere(g) == Outcome.L
        if is_dead_right_end(g):
            assert outcome_misere(g) == Outcome.R


def test_dead_end_sum_outcome_examples():
    assert dead_end_sum_outcome(integer_game(1), integer_game(-2)) == Outcome.L
    assert dead_end_sum_outcome(integer_game(2), integer_game(-2)) == Outcome.N
    assert dead_end_sum_outcome(integer_game(2), integer_game(-1)) == Outcome.R


def test_dead_end_sum_outcome_preconditions():
    with pytest.raises(ValueError):
        dead_end_sum_outcome(integer_game(-1), integer_game(-1))
    with pytest.raises(ValueError):
        dead_end_sum_outcome(integer_game(1), star())


def test_dead_end_sum_outcome_matches_solver_exhaustively():
    ends = gen_dead_ends(3, 2)
    rights = [g for g in ends if is_dead_right_end(g)]
    lefts = [g for g in ends if is_dead_left_end(g)]
    for g in rights:
        for h in lefts:
            assert outcome_misere(add(g, h)) == dead_end_sum_outcome(g, h)


def test_number_sum_outcome_examples():
    assert number_sum_outcome([lit("1/2"), lit("-1/2")]) == Outcome.N
    assert number_sum_outcome([lit("3/4"), lit("-1/2")]) == Outcome.R
    assert number_sum_outcome([]) == Outcome.N
    assert number_sum_outcome([lit("1/2"), lit("1/2")]) == Outcome.R
    with pytest.raises(ValueError):
        number_sum_outcome([NumberLiteral(0, 0)])


def test_number_sum_outcome_matches_solver():
    literals = number_literals(2, 1)
    for size in range(0, 4):
        for combo in itertools.combinations_with_replacement(literals, size):
            built = add_all(dyadic_game(l) for l in combo)
            assert outcome_misere(built) == number_sum_outcome(combo), combo


def test_ladder_facts_used_by_integer_separation():
    for n in range(1, 5):
        assert outcome_misere(add(integer_game(n), lambda_game(n))) == Outcome.L
        for m in range(0, n):
            assert outcome_misere(add(integer_game(m), lambda_game(n))) in (
                Outcome.P,
                Outcome.R,
            )
