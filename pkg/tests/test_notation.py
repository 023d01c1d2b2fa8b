"""Notation grammar, elaboration, and render round-trips."""

import pytest
from hypothesis import given, settings

from deadending import (
    ZERO,
    NumberLiteral,
    add,
    birthday,
    conjugate,
    dyadic_game,
    integer_game,
    intern,
    lambda_game,
    number_literals,
    star,
)
from deadending.notation import (
    Braces,
    Conj,
    FracLit,
    IntLit,
    ParseError,
    Sum,
    elaborate,
    parse,
    parse_game,
    render,
)

from strategies import build, shapes


def test_parse_zero_forms():
    assert parse_game("{.|.}") == ZERO
    assert parse_game("{|}") == ZERO
    assert parse_game("0") == ZERO


def test_parse_ladder():
    assert parse_game("{0|-1}") == lambda_game(1)
    assert parse_game("lambda(1)") == lambda_game(1)
    assert parse_game("lambda(3)") == lambda_game(3)


def test_parse_sum_with_conjugate():
    expr = parse("1/2 + ~1/2")
    assert isinstance(expr, Sum)
    assert expr.terms == (FracLit(1, 1), Conj(FracLit(1, 1)))
    built = elaborate(expr)
    assert built == add(
        dyadic_game(NumberLiteral(1, 1)), dyadic_game(NumberLiteral(-1, 1))
    )


def test_parse_fraction_reduction():
    assert parse("2/4") == FracLit(1, 1)
    assert parse("4/2") == IntLit(2)
    assert parse_game("5/1") == integer_game(5)


def test_parse_rejects_bad_denominator():
    with pytest.raises(ParseError) as err:
        parse("3/6")
    assert "power of two" in str(err.value)


def test_parse_rejects_lambda_zero():
    with pytest.raises(ParseError):
        parse("lambda(0)")


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        parse("{0|\n  ?}")
    assert err.value.line == 2 and err.value.column == 3


def test_parse_errors():
    for text in ("", "{0|1", "1 +", "lambda(", "{0,|1}", "**", "foo"):
        with pytest.raises(ParseError):
            parse(text)


def test_parse_nested():
    expr = parse("{1, {0|*} | ~lambda(2)}")
    assert isinstance(expr, Braces)
    game = elaborate(expr)
    from deadending import left_options, right_options

    assert right_options(game) == (conjugate(lambda_game(2)),)
    assert set(left_options(game)) == {integer_game(1), intern((ZERO,), (star(),))}
    assert parse_game("(1 + 1) + *") == add(integer_game(2), star())


def test_render_named_literals():
    assert render(ZERO) == "0"
    assert render(integer_game(-4)) == "-4"
    assert render(dyadic_game(NumberLiteral(5, 3))) == "5/8"
    assert render(dyadic_game(NumberLiteral(-3, 1))) == "-3/2"
    assert render(lambda_game(2)) == "lambda(2)"
    assert render(intern((ZERO,), (integer_game(-1),))) == "lambda(1)"
    assert render(star()) == "*"


def test_render_braces():
    g = intern((integer_game(1),), (integer_game(-1),))
    assert render(g) == "{1 | -1}"
    left_end = intern((), (integer_game(1),))
    assert render(left_end) == "{. | 1}"


def test_render_elides_past_depth():
    deep = ZERO
    for _ in range(8):
        deep = intern((deep,), (deep, star()))
    text = render(deep, depth=3)
    assert "…" in text
    assert render(deep, depth=20).count("…") == 0


def test_round_trip_named_literals():
    games = [integer_game(n) for n in range(-6, 7)]
    games += [dyadic_game(l) for l in number_literals(4, 3)]
    games += [lambda_game(k) for k in range(1, 7)]
    games += [star()]
    for g in games:
        assert parse_game(render(g)) == g


@settings(max_examples=300, deadline=None)
@given(shapes)
def test_round_trip_random_games(shape):
    g = build(shape)
    assert parse_game(render(g, depth=birthday(g) + 1)) == g
