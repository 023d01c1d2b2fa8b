"""Structural layer: interning, constructors, predicates, lengths."""

import threading
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deadending import (
    ZERO,
    NumberLiteral,
    add,
    as_integer,
    as_lambda,
    as_number,
    birthday,
    conjugate,
    dyadic_game,
    followers,
    integer_game,
    intern,
    is_dead_end,
    is_dead_ending,
    is_dead_left_end,
    is_dead_right_end,
    is_dicot,
    is_left_end,
    is_right_end,
    lambda_game,
    left_length,
    left_options,
    number_literals,
    right_length,
    right_options,
    star,
)


def lit(value) -> NumberLiteral:
    return NumberLiteral.from_value(Fraction(value))


from strategies import build, shapes


# -- interning ----------------------------------------------------------------


def test_zero_is_id_zero():
    assert intern((), ()) == 0 == ZERO


def test_intern_idempotent():
    a = intern((ZERO,), ())
    b = intern((ZERO,), ())
    assert a == b


def test_intern_matches_constructor():
    assert intern((ZERO,), ()) == integer_game(1)
    assert intern((integer_game(1),), ()) == integer_game(2)


def test_intern_dedupes_and_sorts_options():
    one = integer_game(1)
    assert intern((one, ZERO, one), ()) == intern((ZERO, one), ())


def test_intern_rejects_unknown_ids():
    with pytest.raises(ValueError):
        intern((10**9,), ())


@settings(max_examples=200)
@given(shapes)
def test_interning_soundness(shape):
    assert build(shape) == build(shape)


# -- constructors -------------------------------------------------------------


def test_integer_games():
    assert integer_game(0) == ZERO
    assert left_options(integer_game(2)) == (integer_game(1),)
    assert right_options(integer_game(2)) == ()
    assert integer_game(-1) == intern((), (ZERO,))


def test_dyadic_games():
    half = dyadic_game(lit("1/2"))
    assert left_options(half) == (ZERO,)
    assert right_options(half) == (integer_game(1),)
    three_quarters = dyadic_game(lit("3/4"))
    assert left_options(three_quarters) == (half,)
    assert right_options(three_quarters) == (integer_game(1),)
    assert dyadic_game(NumberLiteral(5, 0)) == integer_game(5)


def test_number_literal_invariants():
    with pytest.raises(ValueError):
        NumberLiteral(2, 1)  # even numerator with positive exponent
    with pytest.raises(ValueError):
        NumberLiteral(1, -1)
    with pytest.raises(ValueError):
        NumberLiteral.from_value(Fraction(1, 3))
    assert NumberLiteral.from_value(Fraction(2, 4)) == NumberLiteral(1, 1)
    assert str(NumberLiteral(-3, 2)) == "-3/4"


def test_conjugate_examples():
    assert conjugate(ZERO) == ZERO
    assert conjugate(integer_game(2)) == integer_game(-2)
    switch = intern((integer_game(1),), (integer_game(-1),))
    assert conjugate(switch) == switch


@settings(max_examples=150)
@given(shapes)
def test_conjugate_involution(shape):
    g = build(shape)
    assert conjugate(conjugate(g)) == g


def test_sum_examples():
    assert add(integer_game(1), integer_game(1)) == integer_game(2)
    half = dyadic_game(lit("1/2"))
    doubled = add(half, half)
    assert left_options(doubled) == (half,)
    assert right_options(doubled) == (add(integer_game(1), half),)
    one_and_half = add(integer_game(1), half)
    assert set(left_options(one_and_half)) == {half, integer_game(1)}
    assert right_options(one_and_half) == (integer_game(2),)
    g = dyadic_game(lit("3/4"))
    assert add(g, ZERO) == g


@settings(max_examples=40, deadline=None)
@given(shapes, shapes, shapes)
def test_sum_laws_at_id_level(sa, sb, sc):
    a, b, c = build(sa), build(sb), build(sc)
    assert add(a, b) == add(b, a)
    assert add(add(a, b), c) == add(a, add(b, c))
    assert add(a, ZERO) == a


def test_lambda_games():
    assert lambda_game(1) == intern((ZERO,), (integer_game(-1),))
    assert lambda_game(2) == intern((ZERO,), (lambda_game(1),))
    assert all(is_dead_ending(lambda_game(k)) for k in range(1, 7))
    with pytest.raises(ValueError):
        lambda_game(0)


def test_star():
    s = star()
    assert left_options(s) == (ZERO,) == right_options(s)
    assert is_dicot(s)
    assert is_dead_ending(s)
    assert conjugate(s) == s


# -- structure ----------------------------------------------------------------


def test_followers():
    assert followers(ZERO) == {ZERO}
    assert followers(integer_game(2)) == {integer_game(2), integer_game(1), ZERO}
    assert len(followers(dyadic_game(lit("3/4")))) == 4


def test_birthday():
    assert birthday(ZERO) == 0
    assert birthday(integer_game(3)) == 3
    assert birthday(dyadic_game(lit("3/4"))) == 3
    assert birthday(dyadic_game(lit("13/8"))) == 5


def test_end_predicates():
    assert is_left_end(ZERO) and is_right_end(ZERO)
    assert not is_left_end(integer_game(1)) and is_right_end(integer_game(1))
    lam = lambda_game(1)
    assert not is_left_end(lam) and not is_right_end(lam)


def test_dead_end_predicates():
    assert is_dead_left_end(integer_game(-2))
    live = intern((), (integer_game(1),))
    assert is_left_end(live) and not is_dead_left_end(live)
    assert is_dead_left_end(ZERO) and is_dead_right_end(ZERO)
    assert is_dead_end(integer_game(3))


def test_dead_ending_examples():
    for n in range(-3, 4):
        assert is_dead_ending(integer_game(n))
    for value in ("1/2", "-3/4", "7/8"):
        assert is_dead_ending(dyadic_game(lit(value)))
    live = intern((), (integer_game(1),))
    assert not is_dead_ending(live)
    assert not is_dead_ending(intern((live,), ()))
    assert is_dead_ending(star())


def test_dicot_examples():
    assert is_dicot(ZERO)
    assert not is_dicot(integer_game(1))
    assert is_dicot(intern((star(),), (star(), ZERO)))


@settings(max_examples=150)
@given(shapes)
def test_dead_ending_closed_under_followers(shape):
    g = build(shape)
    if is_dead_ending(g):
        assert all(is_dead_ending(f) for f in followers(g))


@settings(max_examples=60, deadline=None)
@given(shapes, shapes)
def test_dead_ending_closed_under_sum(sa, sb):
    a, b = build(sa), build(sb)
    if is_dead_ending(a) and is_dead_ending(b):
        assert is_dead_ending(add(a, b))


# -- lengths ------------------------------------------------------------------


def test_length_examples():
    assert left_length(ZERO) == 0 and right_length(ZERO) == 0
    assert left_length(dyadic_game(lit("1/2"))) == 1
    assert right_length(dyadic_game(lit("-3/4"))) == 2
    assert left_length(integer_game(-1)) is None
    assert right_length(integer_game(-1)) == 1
    for n in range(0, 5):
        assert left_length(integer_game(n)) == n
    assert right_length(integer_game(2)) is None


def test_length_shortest_path_not_longest():
    g = intern((ZERO, integer_game(1)), ())
    assert left_length(g) == 1


@settings(max_examples=60, deadline=None)
@given(shapes, shapes)
def test_length_additive_over_sums(sa, sb):
    a, b = build(sa), build(sb)
    la, lb = left_length(a), left_length(b)
    if la is not None and lb is not None:
        assert left_length(add(a, b)) == la + lb
    ra, rb = right_length(a), right_length(b)
    if ra is not None and rb is not None:
        assert right_length(add(a, b)) == ra + rb


def test_literal_lengths_match_tree_lengths():
    for literal in number_literals(3, 2):
        game = dyadic_game(literal)
        assert literal.left_length() == left_length(game)
        assert literal.right_length() == right_length(game)


def test_positive_dyadic_length_recursion():
    for literal in number_literals(4, 2):
        if literal.numerator <= 0 or literal.is_integer:
            continue
        left = literal.left_option()
        assert left is not None
        assert literal.left_length() == 1 + left.left_length()
        right = literal.right_option()
        assert right is not None
        assert right.left_length() <= literal.left_length()


def test_dyadic_option_structure():
    # one of the mixed second options coincides with the direct option
    for literal in number_literals(4, 2):
        if literal.is_integer:
            continue
        g = dyadic_game(literal)
        (gl,) = left_options(g)
        (gr,) = right_options(g)
        rl = left_options(gr)
        lr = right_options(gl)
        assert (rl and rl[0] == gl) or (lr and lr[0] == gr)


# -- recognizers --------------------------------------------------------------


def test_recognizers():
    assert as_integer(intern((integer_game(1),), ())) == 2
    assert as_integer(lambda_game(1)) is None
    assert as_number(dyadic_game(lit("5/8"))) == NumberLiteral(5, 3)
    assert as_number(intern((ZERO,), (integer_game(2),))) is None
    assert as_number(star()) is None
    assert as_lambda(lambda_game(4)) == 4
    assert as_lambda(star()) is None


@settings(max_examples=100)
@given(st.integers(-40, 40))
def test_integer_recognizer_round_trip(n):
    assert as_integer(integer_game(n)) == n


def test_number_recognizer_round_trip():
    for literal in number_literals(5, 3):
        assert as_number(dyadic_game(literal)) == literal


# -- concurrency --------------------------------------------------------------


def test_concurrent_interning_consistent():
    literals = number_literals(4, 2)
    results = [None] * 8
    barrier = threading.Barrier(8)

    def worker(slot):
        barrier.wait()
        results[slot] = [dyadic_game(l) for l in literals]

    threads = [threading.Thread(target=worker, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)
