"""Interned partizan game positions and structural predicates.

A position is a pair of option sets, one for Left and one for Right, and is
identified by a dense integer id.  Positions are hash-consed: two games built
from identical (recursively interned) option sets always share an id, so
structural equality of trees is id equality.  The intern store and every memo
table are append-only and guarded for concurrent use; all functions here are
pure in their arguments and deterministic.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

GameId = int

_lock = threading.RLock()

# id -> (left option ids, right option ids), both sorted and duplicate-free
_nodes: list[tuple[tuple[GameId, ...], tuple[GameId, ...]]] = []
_index: dict[tuple[tuple[GameId, ...], tuple[GameId, ...]], GameId] = {}

_conjugate_memo: dict[GameId, GameId] = {}
_sum_memo: dict[tuple[GameId, GameId], GameId] = {}
_birthday_memo: dict[GameId, int] = {}
_followers_memo: dict[GameId, frozenset[GameId]] = {}
_dead_left_memo: dict[GameId, bool] = {}
_dead_right_memo: dict[GameId, bool] = {}
_dead_ending_memo: dict[GameId, bool] = {}
_dicot_memo: dict[GameId, bool] = {}
_left_length_memo: dict[GameId, Optional[int]] = {}
_right_length_memo: dict[GameId, Optional[int]] = {}
_branching_memo: dict[GameId, int] = {}
_struct_key_memo: dict[GameId, tuple] = {}
_integer_memo: dict[int, GameId] = {}
_dyadic_memo: dict[tuple[int, int], GameId] = {}
_lambda_memo: dict[int, GameId] = {}
_as_integer_memo: dict[GameId, Optional[int]] = {}
_as_number_memo: dict[GameId, Optional["NumberLiteral"]] = {}


def intern(left: Iterable[GameId], right: Iterable[GameId]) -> GameId:
    """Return the id for the game with the given option sets, creating it if new."""
    node = (tuple(sorted(set(left))), tuple(sorted(set(right))))
    gid = _index.get(node)
    if gid is not None:
        return gid
    with _lock:
        gid = _index.get(node)
        if gid is None:
            size = len(_nodes)
            for opt in node[0] + node[1]:
                if not 0 <= opt < size:
                    raise ValueError(f"option {opt} is not an interned game id")
            gid = size
            _nodes.append(node)
            _index[node] = gid
    return gid


def left_options(g: GameId) -> tuple[GameId, ...]:
    return _nodes[g][0]


def right_options(g: GameId) -> tuple[GameId, ...]:
    return _nodes[g][1]


def options(g: GameId) -> tuple[GameId, ...]:
    node = _nodes[g]
    return node[0] + node[1]


def store_size() -> int:
    return len(_nodes)


ZERO: GameId = intern((), ())


# ---------------------------------------------------------------------------
# numbers as literals


@dataclass(frozen=True, order=True)
class NumberLiteral:
    """A dyadic rational numerator / 2**exponent in lowest terms.

    Integers carry exponent 0; for a positive exponent the numerator must be
    odd.  These literals name canonical-form number games without building
    them, and support the arithmetic that mirrors the game structure.
    """

    numerator: int
    exponent: int

    def __post_init__(self) -> None:
        if self.exponent < 0:
            raise ValueError("exponent must be nonnegative")
        if self.exponent > 0 and self.numerator % 2 == 0:
            raise ValueError("non-integer literal must have an odd numerator")

    @classmethod
    def from_value(cls, value: Union[int, Fraction]) -> "NumberLiteral":
        frac = Fraction(value)
        denominator = frac.denominator
        exponent = denominator.bit_length() - 1
        if 1 << exponent != denominator:
            raise ValueError(f"{frac} is not a dyadic rational")
        return cls(frac.numerator, exponent)

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    @property
    def is_integer(self) -> bool:
        return self.exponent == 0

    @property
    def is_zero(self) -> bool:
        return self.numerator == 0

    def conjugated(self) -> "NumberLiteral":
        return NumberLiteral(-self.numerator, self.exponent)

    def left_option(self) -> Optional["NumberLiteral"]:
        """The Left option of the canonical game this literal names."""
        if self.exponent == 0:
            return NumberLiteral(self.numerator - 1, 0) if self.numerator > 0 else None
        return NumberLiteral.from_value(
            Fraction(self.numerator - 1, 1 << self.exponent)
        )

    def right_option(self) -> Optional["NumberLiteral"]:
        if self.exponent == 0:
            return NumberLiteral(self.numerator + 1, 0) if self.numerator < 0 else None
        return NumberLiteral.from_value(
            Fraction(self.numerator + 1, 1 << self.exponent)
        )

    def left_length(self) -> Optional[int]:
        """Minimum count of consecutive Left moves to zero, or None if unreachable."""
        if self.numerator == 0:
            return 0
        if self.numerator < 0:
            return None
        left = self.left_option()
        assert left is not None
        sub = left.left_length()
        assert sub is not None
        return 1 + sub

    def right_length(self) -> Optional[int]:
        if self.numerator == 0:
            return 0
        if self.numerator > 0:
            return None
        right = self.right_option()
        assert right is not None
        sub = right.right_length()
        assert sub is not None
        return 1 + sub

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{1 << self.exponent}"


def number_literals(
    max_exponent: int, max_magnitude: Union[int, Fraction], include_zero: bool = False
) -> list[NumberLiteral]:
    """All literals with exponent <= max_exponent and |value| <= max_magnitude.

    Deterministically ordered by (value, exponent).
    """
    found = []
    for exponent in range(max_exponent + 1):
        scale = 1 << exponent
        top = int(Fraction(max_magnitude) * scale)
        for numerator in range(-top, top + 1):
            if exponent > 0 and numerator % 2 == 0:
                continue
            if numerator == 0 and not include_zero:
                continue
            found.append(NumberLiteral(numerator, exponent))
    found.sort(key=lambda lit: (lit.value, lit.exponent))
    return found


# ---------------------------------------------------------------------------
# constructors


def integer_game(n: int) -> GameId:
    """Canonical-form integer: n > 0 is {n-1 | }, n < 0 its mirror, 0 is { | }."""
    gid = _integer_memo.get(n)
    if gid is not None:
        return gid
    if n == 0:
        gid = ZERO
    elif n > 0:
        gid = intern((integer_game(n - 1),), ())
    else:
        gid = intern((), (integer_game(n + 1),))
    _integer_memo[n] = gid
    return gid


def dyadic_game(a: Union[NumberLiteral, int, Fraction]) -> GameId:
    """Canonical-form number game for a dyadic rational.

    Non-integers m / 2**e are built as { (m-1)/2**e | (m+1)/2**e } with the
    options reduced to lowest terms; integers delegate to integer_game.
    """
    if not isinstance(a, NumberLiteral):
        a = NumberLiteral.from_value(a)
    if a.is_integer:
        return integer_game(a.numerator)
    key = (a.numerator, a.exponent)
    gid = _dyadic_memo.get(key)
    if gid is None:
        left = a.left_option()
        right = a.right_option()
        assert left is not None and right is not None
        gid = intern((dyadic_game(left),), (dyadic_game(right),))
        _dyadic_memo[key] = gid
    return gid


def conjugate(g: GameId) -> GameId:
    """Swap Left and Right options recursively (an involution)."""
    gid = _conjugate_memo.get(g)
    if gid is None:
        left, right = _nodes[g]
        gid = intern(
            tuple(conjugate(r) for r in right), tuple(conjugate(l) for l in left)
        )
        _conjugate_memo[g] = gid
        _conjugate_memo[gid] = g
    return gid


def add(g: GameId, h: GameId) -> GameId:
    """Disjunctive sum: a move in the sum is a move in exactly one component."""
    if g > h:
        g, h = h, g
    if g == ZERO:
        return h
    key = (g, h)
    gid = _sum_memo.get(key)
    if gid is None:
        gl, gr = _nodes[g]
        hl, hr = _nodes[h]
        left = {add(x, h) for x in gl} | {add(g, x) for x in hl}
        right = {add(x, h) for x in gr} | {add(g, x) for x in hr}
        gid = intern(left, right)
        _sum_memo[key] = gid
    return gid


def add_all(games: Iterable[GameId]) -> GameId:
    total = ZERO
    for g in games:
        total = add(total, g)
    return total


def lambda_game(k: int) -> GameId:
    """The ladder {0 | {0 | ... {0 | -1}}} with k rungs; requires k >= 1."""
    if k < 1:
        raise ValueError("lambda_game requires k >= 1")
    gid = _lambda_memo.get(k)
    if gid is None:
        if k == 1:
            gid = intern((ZERO,), (integer_game(-1),))
        else:
            gid = intern((ZERO,), (lambda_game(k - 1),))
        _lambda_memo[k] = gid
    return gid


def star() -> GameId:
    return intern((ZERO,), (ZERO,))


# ---------------------------------------------------------------------------
# structure


def followers(g: GameId) -> frozenset[GameId]:
    """Every position reachable by any sequence of moves, including g itself."""
    cached = _followers_memo.get(g)
    if cached is None:
        acc = {g}
        for o in options(g):
            acc |= followers(o)
        cached = frozenset(acc)
        _followers_memo[g] = cached
    return cached


def birthday(g: GameId) -> int:
    """Height of the game tree."""
    cached = _birthday_memo.get(g)
    if cached is None:
        opts = options(g)
        cached = 1 + max(birthday(o) for o in opts) if opts else 0
        _birthday_memo[g] = cached
    return cached


def max_branching(g: GameId) -> int:
    """Largest per-side option count over all followers."""
    cached = _branching_memo.get(g)
    if cached is None:
        left, right = _nodes[g]
        cached = max(
            [len(left), len(right)] + [max_branching(o) for o in left + right]
        )
        _branching_memo[g] = cached
    return cached


def struct_key(g: GameId) -> tuple:
    """A history-independent total order key for games.

    Built purely from the tree shape, so sorting by (birthday, struct_key) gives
    the same order no matter what else was interned first.  Shared subgames
    share key objects, which keeps comparisons cheap.
    """
    cached = _struct_key_memo.get(g)
    if cached is None:
        left, right = _nodes[g]
        cached = (
            tuple(sorted(struct_key(x) for x in left)),
            tuple(sorted(struct_key(x) for x in right)),
        )
        _struct_key_memo[g] = cached
    return cached


def sort_games(games: Iterable[GameId]) -> list[GameId]:
    """Deterministic order: ascending birthday, then structural key."""
    return sorted(games, key=lambda g: (birthday(g), struct_key(g)))


# ---------------------------------------------------------------------------
# predicates


def is_left_end(g: GameId) -> bool:
    return not _nodes[g][0]


def is_right_end(g: GameId) -> bool:
    return not _nodes[g][1]


def is_dead_left_end(g: GameId) -> bool:
    """Left end whose every follower is also a left end."""
    cached = _dead_left_memo.get(g)
    if cached is None:
        cached = is_left_end(g) and all(
            is_dead_left_end(r) for r in right_options(g)
        )
        _dead_left_memo[g] = cached
    return cached


def is_dead_right_end(g: GameId) -> bool:
    cached = _dead_right_memo.get(g)
    if cached is None:
        cached = is_right_end(g) and all(
            is_dead_right_end(l) for l in left_options(g)
        )
        _dead_right_memo[g] = cached
    return cached


def is_dead_end(g: GameId) -> bool:
    return is_dead_left_end(g) or is_dead_right_end(g)


def is_dead_ending(g: GameId) -> bool:
    """True when every end follower of g is a dead end."""
    cached = _dead_ending_memo.get(g)
    if cached is None:
        if is_left_end(g) and not is_dead_left_end(g):
            cached = False
        elif is_right_end(g) and not is_dead_right_end(g):
            cached = False
        else:
            cached = all(is_dead_ending(o) for o in options(g))
        _dead_ending_memo[g] = cached
    return cached


def is_dicot(g: GameId) -> bool:
    """At every follower either both players can move or neither can."""
    cached = _dicot_memo.get(g)
    if cached is None:
        cached = is_left_end(g) == is_right_end(g) and all(
            is_dicot(o) for o in options(g)
        )
        _dicot_memo[g] = cached
    return cached


# ---------------------------------------------------------------------------
# lengths


def left_length(g: GameId) -> Optional[int]:
    """Fewest consecutive Left moves from g to the zero game, None if unreachable."""
    if g in _left_length_memo:
        return _left_length_memo[g]
    if g == ZERO:
        result: Optional[int] = 0
    else:
        best: Optional[int] = None
        for option in left_options(g):
            sub = left_length(option)
            if sub is not None and (best is None or sub + 1 < best):
                best = sub + 1
        result = best
    _left_length_memo[g] = result
    return result


def right_length(g: GameId) -> Optional[int]:
    if g in _right_length_memo:
        return _right_length_memo[g]
    if g == ZERO:
        result: Optional[int] = 0
    else:
        best: Optional[int] = None
        for option in right_options(g):
            sub = right_length(option)
            if sub is not None and (best is None or sub + 1 < best):
                best = sub + 1
        result = best
    _right_length_memo[g] = result
    return result


# ---------------------------------------------------------------------------
# recognizers (structural, independent of construction history)


def as_integer(g: GameId) -> Optional[int]:
    """The integer n when g is structurally the canonical-form integer game."""
    if g in _as_integer_memo:
        return _as_integer_memo[g]
    left, right = _nodes[g]
    result: Optional[int] = None
    if g == ZERO:
        result = 0
    elif not right and len(left) == 1:
        sub = as_integer(left[0])
        if sub is not None and sub >= 0:
            result = sub + 1
    elif not left and len(right) == 1:
        sub = as_integer(right[0])
        if sub is not None and sub <= 0:
            result = sub - 1
    _as_integer_memo[g] = result
    return result


def _simplest_between(low: Fraction, high: Fraction) -> Fraction:
    """The dyadic rational of least birthday strictly between low and high."""
    assert low < high
    if low < 0 < high:
        return Fraction(0)
    if low >= 0:
        candidate = Fraction(int(low) + 1)
        if candidate < high:
            return candidate
    else:
        candidate = Fraction(int(high) - 1)
        if candidate > low:
            return candidate
    exponent = 1
    while True:
        scale = 1 << exponent
        numerator = int(low * scale) + 1
        if Fraction(numerator, scale) <= low:
            numerator += 1
        if Fraction(numerator, scale) < high:
            return Fraction(numerator, scale)
        exponent += 1


def as_number(g: GameId) -> Optional[NumberLiteral]:
    """The literal a when g is structurally the canonical-form number game for a."""
    if g in _as_number_memo:
        return _as_number_memo[g]
    result: Optional[NumberLiteral] = None
    n = as_integer(g)
    if n is not None:
        result = NumberLiteral(n, 0)
    else:
        left, right = _nodes[g]
        if len(left) == 1 and len(right) == 1:
            low = as_number(left[0])
            high = as_number(right[0])
            if low is not None and high is not None and low.value < high.value:
                candidate = NumberLiteral.from_value(
                    _simplest_between(low.value, high.value)
                )
                if dyadic_game(candidate) == g:
                    result = candidate
    _as_number_memo[g] = result
    return result


def as_lambda(g: GameId) -> Optional[int]:
    """The index k when g is structurally the k-rung ladder game."""
    left, right = _nodes[g]
    if left != (ZERO,) or len(right) != 1:
        return None
    if right[0] == integer_game(-1):
        return 1
    sub = as_lambda(right[0])
    return sub + 1 if sub is not None else None
