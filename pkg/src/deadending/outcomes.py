"""Outcome solvers and closed-form outcome rules.

The misere solver treats a player with no move as the winner; the normal
solver treats them as the loser.  Both are exact memoized searches over
interned positions.  The closed forms compute outcomes of dead-end sums and
number sums arithmetically and never fall back to the solver; agreement
between the two routes is checked by the verification harness.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Optional

from .games import (
    GameId,
    NumberLiteral,
    add,
    conjugate,
    is_dead_left_end,
    is_dead_right_end,
    left_length,
    left_options,
    right_length,
    right_options,
)


class Outcome(Enum):
    """Who wins under optimal play: Left, Right, the next or the previous player."""

    L = "L"
    R = "R"
    N = "N"
    P = "P"


# pairs (a, b) with a >= b in the outcome order: L on top, R at bottom,
# N and P incomparable in between
_GEQ_PAIRS = {
    (Outcome.L, Outcome.L),
    (Outcome.L, Outcome.N),
    (Outcome.L, Outcome.P),
    (Outcome.L, Outcome.R),
    (Outcome.N, Outcome.N),
    (Outcome.N, Outcome.R),
    (Outcome.P, Outcome.P),
    (Outcome.P, Outcome.R),
    (Outcome.R, Outcome.R),
}

_CONJUGATE = {
    Outcome.L: Outcome.R,
    Outcome.R: Outcome.L,
    Outcome.N: Outcome.N,
    Outcome.P: Outcome.P,
}

_misere_win_memo: dict[tuple[GameId, bool], bool] = {}
_normal_win_memo: dict[tuple[GameId, bool], bool] = {}


def outcome_geq(a: Outcome, b: Outcome) -> bool:
    """Partial order on outcomes, Left preferring the top."""
    return (a, b) in _GEQ_PAIRS


def conjugate_outcome(o: Outcome) -> Outcome:
    return _CONJUGATE[o]


def _wins_moving_first(g: GameId, left_to_move: bool, memo, no_move_wins: bool) -> bool:
    key = (g, left_to_move)
    cached = memo.get(key)
    if cached is not None:
        return cached
    opts = left_options(g) if left_to_move else right_options(g)
    if not opts:
        result = no_move_wins
    else:
        result = any(
            not _wins_moving_first(o, not left_to_move, memo, no_move_wins)
            for o in opts
        )
    memo[key] = result
    return result


def _outcome(g: GameId, memo, no_move_wins: bool) -> Outcome:
    left_wins = _wins_moving_first(g, True, memo, no_move_wins)
    right_wins = _wins_moving_first(g, False, memo, no_move_wins)
    if left_wins:
        return Outcome.N if right_wins else Outcome.L
    return Outcome.R if right_wins else Outcome.P


def outcome_misere(g: GameId) -> Outcome:
    """Misere outcome class: the first player unable to move wins."""
    return _outcome(g, _misere_win_memo, True)


def outcome_normal(g: GameId) -> Outcome:
    """Normal outcome class: the first player unable to move loses."""
    return _outcome(g, _normal_win_memo, False)


def normal_geq(g: GameId, h: GameId) -> bool:
    """Normal-play comparison: g >= h iff Left wins g + conjugate(h) second."""
    return outcome_normal(add(g, conjugate(h))) in (Outcome.L, Outcome.P)


def dead_end_sum_outcome(g: GameId, h: GameId) -> Outcome:
    """Misere outcome of (dead right end) + (dead left end) from the lengths.

    The players can only move in their own component, so the winner is whoever
    runs out of moves first.
    """
    if not is_dead_right_end(g):
        raise ValueError("first summand must be a dead right end")
    if not is_dead_left_end(h):
        raise ValueError("second summand must be a dead left end")
    lg = left_length(g)
    rh = right_length(h)
    assert lg is not None and rh is not None
    if lg == rh:
        return Outcome.N
    return Outcome.L if lg < rh else Outcome.R


def number_sum_outcome(terms: Iterable[NumberLiteral]) -> Outcome:
    """Misere outcome of a sum of nonzero canonical numbers, computed arithmetically.

    With k = (total left-length of the positive terms) - (total right-length of
    the negative terms): Left wins when k < 0, the first player when k = 0,
    Right when k > 0.
    """
    k = 0
    for term in terms:
        if term.is_zero:
            raise ValueError("terms must be nonzero literals")
        if term.numerator > 0:
            length: Optional[int] = term.left_length()
        else:
            length = term.right_length()
            assert length is not None
            length = -length
        assert length is not None
        k += length
    if k < 0:
        return Outcome.L
    return Outcome.N if k == 0 else Outcome.R
