"""Bounded test universes and universe-relative equivalence, order, and
monoid-quotient computations.

A TestSet is a finite, reproducibly generated slice of a universe used as a
pool of distinguishing contexts.  Verdicts from scans over a TestSet are
three-valued by design: a bounded scan can refute equivalence or inequality
outright, but can confirm it only up to the declared bounds, so every
"consistent" verdict carries its descriptor.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Iterable, Iterator, Optional, Sequence, Union

from .games import (
    ZERO,
    GameId,
    NumberLiteral,
    add,
    add_all,
    as_number,
    conjugate,
    dyadic_game,
    integer_game,
    intern,
    is_dead_end,
    is_dead_ending,
    is_dead_left_end,
    is_dead_right_end,
    left_length,
    number_literals,
    right_length,
    sort_games,
)
from .outcomes import Outcome, outcome_geq, outcome_misere

DEFAULT_MEMBER_BUDGET = 500_000


class BudgetExceededError(RuntimeError):
    """Raised when generating a test set would blow past its member budget."""

    def __init__(self, descriptor: str, needed: int, allowed: int):
        super().__init__(
            f"test set {descriptor} needs {needed} members, which exceeds the "
            f"budget of {allowed}; pass a cap to take a deterministic prefix"
        )
        self.descriptor = descriptor
        self.needed = needed
        self.allowed = allowed


@dataclass(frozen=True)
class TestSet:
    """A descriptor string plus the deterministic member list it denotes."""

    __test__ = False  # not a pytest class, despite the name

    descriptor: str
    members: tuple[GameId, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[GameId]:
        return iter(self.members)


# ---------------------------------------------------------------------------
# generation


def _subset_count(n: int, max_size: int) -> int:
    return sum(comb(n, size) for size in range(1, max_size + 1))


def _subsets_in_key_order(pool: Sequence[GameId], max_size: int):
    """Nonempty index combinations of the key-sorted pool, smallest keys first."""
    for size in range(1, max_size + 1):
        yield from itertools.combinations(range(len(pool)), size)


def _day_candidates(pool: list[GameId], option_cap: int) -> Iterator[GameId]:
    """Candidate games whose options come from pool, in width-major key order."""
    by_size: dict[int, list[tuple[int, ...]]] = {0: [()]}
    for size in range(1, option_cap + 1):
        by_size[size] = list(itertools.combinations(range(len(pool)), size))
    for width in range(1, 2 * option_cap + 1):
        for left_size in range(0, min(width, option_cap) + 1):
            right_size = width - left_size
            if right_size > option_cap:
                continue
            for lsub in by_size[left_size]:
                left = tuple(pool[i] for i in lsub)
                for rsub in by_size[right_size]:
                    yield intern(left, tuple(pool[i] for i in rsub))


def gen_dead_ending(
    birthday_cap: int,
    option_cap: int,
    cap: Optional[int] = None,
    member_budget: int = DEFAULT_MEMBER_BUDGET,
) -> TestSet:
    """Every dead-ending game of bounded birthday and option width.

    Grows rank by rank: the candidates of each birthday are all option-set
    pairs over the previously found members, which is exhaustive because
    followers of dead-ending games are dead-ending.  Members are ordered by
    ascending birthday, then total option width, then a fixed enumeration of
    option subsets; the order depends only on the bounds, never on interning
    history.  With a cap, the first `cap` members in that order are returned
    instead of raising when the full universe would exceed the budget.
    """
    if birthday_cap < 0 or option_cap < 1:
        raise ValueError("birthday_cap must be >= 0 and option_cap >= 1")
    descriptor = f"dead-ending:b{birthday_cap}:k{option_cap}"
    if cap is not None:
        descriptor += f":cap{cap}"
    limit = cap if cap is not None else member_budget
    members: list[GameId] = [ZERO]
    seen = {ZERO}
    for _day in range(1, birthday_cap + 1):
        if len(members) >= limit:
            break
        pool = members[:]  # sorted: prior days in order, each day key-sorted
        if cap is None:
            dead_left = sum(1 for g in pool if is_dead_left_end(g))
            dead_right = sum(1 for g in pool if is_dead_right_end(g))
            projected = (
                _subset_count(len(pool), option_cap) ** 2
                + _subset_count(dead_left, option_cap)
                + _subset_count(dead_right, option_cap)
                + 1
            )
            if projected > member_budget:
                raise BudgetExceededError(descriptor, projected, member_budget)
        for candidate in _day_candidates(pool, option_cap):
            if candidate in seen:
                continue
            seen.add(candidate)
            if is_dead_ending(candidate):
                members.append(candidate)
                if len(members) >= limit:
                    break
    if cap is not None:
        members = members[:cap]
    return TestSet(descriptor, tuple(members))


def gen_dead_ends(birthday_cap: int, option_cap: int) -> list[GameId]:
    """All dead ends (left or right) within the bounds, deterministically ordered."""
    rights: list[GameId] = [ZERO]
    lefts: list[GameId] = [ZERO]
    for _day in range(birthday_cap):
        rights_pool = sort_games(rights)
        seen = set(rights)
        for sub in _subsets_in_key_order(rights_pool, option_cap):
            g = intern(tuple(rights_pool[i] for i in sub), ())
            if g not in seen:
                seen.add(g)
                rights.append(g)
        lefts_pool = sort_games(lefts)
        seen = set(lefts)
        for sub in _subsets_in_key_order(lefts_pool, option_cap):
            g = intern((), tuple(lefts_pool[i] for i in sub))
            if g not in seen:
                seen.add(g)
                lefts.append(g)
    return sort_games(set(rights) | set(lefts))


def gen_dead_end_closure(
    birthday_cap: int,
    option_cap: int,
    max_terms: int,
    member_budget: int = DEFAULT_MEMBER_BUDGET,
) -> TestSet:
    """Sums of up to max_terms dead ends, each within the structural bounds."""
    if max_terms < 0:
        raise ValueError("max_terms must be >= 0")
    descriptor = f"dead-end-closure:b{birthday_cap}:k{option_cap}:t{max_terms}"
    ends = gen_dead_ends(birthday_cap, option_cap)
    total = sum(comb(len(ends) + size - 1, size) for size in range(max_terms + 1))
    if total > member_budget:
        raise BudgetExceededError(descriptor, total, member_budget)
    members: list[GameId] = []
    seen: set[GameId] = set()
    for size in range(max_terms + 1):
        for combo in itertools.combinations_with_replacement(ends, size):
            g = add_all(combo)
            if g not in seen:
                seen.add(g)
                members.append(g)
    return TestSet(descriptor, tuple(sort_games(members)))


def gen_number_closure(
    max_exponent: int,
    max_magnitude: int,
    max_terms: int,
    member_budget: int = DEFAULT_MEMBER_BUDGET,
) -> TestSet:
    """Sums of up to max_terms canonical numbers within the literal bounds."""
    descriptor = f"numbers:j{max_exponent}:v{max_magnitude}:t{max_terms}"
    literals = number_literals(max_exponent, max_magnitude)
    total = sum(
        comb(len(literals) + size - 1, size) for size in range(max_terms + 1)
    )
    if total > member_budget:
        raise BudgetExceededError(descriptor, total, member_budget)
    games = [dyadic_game(lit) for lit in literals]
    members: list[GameId] = []
    seen: set[GameId] = set()
    for size in range(max_terms + 1):
        for combo in itertools.combinations_with_replacement(games, size):
            g = add_all(combo)
            if g not in seen:
                seen.add(g)
                members.append(g)
    return TestSet(descriptor, tuple(sort_games(members)))


def generate(descriptor: str, member_budget: int = DEFAULT_MEMBER_BUDGET) -> TestSet:
    """Materialize a test set from its descriptor string."""
    fields = descriptor.split(":")
    kind = fields[0]

    def value(field: str, prefix: str) -> int:
        if not field.startswith(prefix) or not field[len(prefix):].isdigit():
            raise ValueError(f"malformed descriptor field {field!r} in {descriptor!r}")
        return int(field[len(prefix):])

    if kind == "dead-ending" and len(fields) in (3, 4):
        cap = value(fields[3], "cap") if len(fields) == 4 else None
        return gen_dead_ending(
            value(fields[1], "b"), value(fields[2], "k"), cap, member_budget
        )
    if kind == "dead-end-closure" and len(fields) == 4:
        return gen_dead_end_closure(
            value(fields[1], "b"),
            value(fields[2], "k"),
            value(fields[3], "t"),
            member_budget,
        )
    if kind == "numbers" and len(fields) == 4:
        return gen_number_closure(
            value(fields[1], "j"),
            value(fields[2], "v"),
            value(fields[3], "t"),
            member_budget,
        )
    raise ValueError(f"unrecognized test set descriptor {descriptor!r}")


def ladder_game(rungs: int, drop: int) -> GameId:
    """{0 | {0 | ... {0 | -drop}}} with the given number of rungs."""
    if rungs < 1 or drop < 1:
        raise ValueError("rungs and drop must be >= 1")
    g = integer_game(-drop)
    for _ in range(rungs):
        g = intern((ZERO,), (g,))
    return g


def witness_contexts(max_rungs: int = 8, max_drop: int = 6) -> list[GameId]:
    """Ladder-shaped contexts (and conjugates) that separate slow-moving pairs.

    These live outside the small generated universes but are all dead-ending,
    so any refutation they produce is a genuine witness.
    """
    out: list[GameId] = []
    for rungs in range(1, max_rungs + 1):
        for drop in range(1, max_drop + 1):
            g = ladder_game(rungs, drop)
            out.append(g)
            out.append(conjugate(g))
    return out


# ---------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class Distinguished:
    """A context X with different misere outcomes for the two compared games."""

    witness: GameId
    first_outcome: Outcome
    second_outcome: Outcome


@dataclass(frozen=True)
class IndistinguishableUpTo:
    descriptor: str


Verdict = Union[Distinguished, IndistinguishableUpTo]


@dataclass(frozen=True)
class GeqConsistentUpTo:
    descriptor: str


@dataclass(frozen=True)
class Refuted:
    witness: GameId


@dataclass(frozen=True)
class IncomparableWitnessed:
    witness_geq_fail: GameId
    witness_leq_fail: GameId


OrderVerdict = Union[GeqConsistentUpTo, Refuted, IncomparableWitnessed]


def equiv_mod(g: GameId, h: GameId, tests: TestSet) -> Verdict:
    """Scan the test set for a context with differing misere outcomes."""
    for x in tests.members:
        og = outcome_misere(add(g, x))
        oh = outcome_misere(add(h, x))
        if og != oh:
            return Distinguished(x, og, oh)
    return IndistinguishableUpTo(tests.descriptor)


def geq_mod(g: GameId, h: GameId, tests: TestSet) -> OrderVerdict:
    """Check o-(g+X) >= o-(h+X) over the test set, also noting the converse."""
    geq_fail: Optional[GameId] = None
    leq_fail: Optional[GameId] = None
    for x in tests.members:
        og = outcome_misere(add(g, x))
        oh = outcome_misere(add(h, x))
        if geq_fail is None and not outcome_geq(og, oh):
            geq_fail = x
        if leq_fail is None and not outcome_geq(oh, og):
            leq_fail = x
        if geq_fail is not None and leq_fail is not None:
            return IncomparableWitnessed(geq_fail, leq_fail)
    if geq_fail is None:
        return GeqConsistentUpTo(tests.descriptor)
    return Refuted(geq_fail)


def invert_check(g: GameId, tests: TestSet) -> Verdict:
    """Is g + conjugate(g) indistinguishable from zero over the test set?"""
    return equiv_mod(add(g, conjugate(g)), ZERO, tests)


# ---------------------------------------------------------------------------
# closed-form comparisons


class Comparison(Enum):
    EQUIVALENT = "equivalent"
    GREATER = "greater"
    LESS = "less"
    INCOMPARABLE = "incomparable"


def compare_numbers_mod_E(a: NumberLiteral, b: NumberLiteral) -> Comparison:
    """Order of two canonical numbers in the dead-ending universe.

    Same-sign numbers compare by value plus a length condition: a exceeds b
    exactly when a > b and Left's path in a is no longer than in b (mirrored
    with right-lengths for negatives).  Pairs of opposite sign, and distinct
    pairs involving zero, are incomparable.
    """
    if a.value == b.value:
        return Comparison.EQUIVALENT
    if a.value > 0 and b.value > 0:
        la, lb = a.left_length(), b.left_length()
        assert la is not None and lb is not None
        if a.value > b.value and la <= lb:
            return Comparison.GREATER
        if b.value > a.value and lb <= la:
            return Comparison.LESS
        return Comparison.INCOMPARABLE
    if a.value < 0 and b.value < 0:
        ra, rb = a.right_length(), b.right_length()
        assert ra is not None and rb is not None
        if a.value > b.value and rb <= ra:
            return Comparison.GREATER
        if b.value > a.value and ra <= rb:
            return Comparison.LESS
        return Comparison.INCOMPARABLE
    return Comparison.INCOMPARABLE


def compare_integers_mod_dead_end_closure(n: int, m: int) -> Comparison:
    """Total order of integers modulo the closure of dead ends: n exceeds m iff n < m."""
    if n == m:
        return Comparison.EQUIVALENT
    return Comparison.GREATER if n < m else Comparison.LESS


def reduce_end_to_integer(g: GameId) -> NumberLiteral:
    """The integer a dead end is equivalent to in the closure of dead ends."""
    if is_dead_right_end(g):
        length = left_length(g)
        assert length is not None
        return NumberLiteral(length, 0)
    if is_dead_left_end(g):
        length = right_length(g)
        assert length is not None
        return NumberLiteral(-length, 0)
    raise ValueError("reduce_end_to_integer requires a dead end")


# ---------------------------------------------------------------------------
# monoid quotient


@dataclass
class MonoidClass:
    label: int
    representative: GameId
    members: list[GameId]
    outcome: Outcome


@dataclass
class MonoidReport:
    """Quotient of bounded generator sums by indistinguishability over a test set."""

    descriptor: str
    generators: list[GameId]
    max_terms: int
    classes: list[MonoidClass]
    product: dict[tuple[int, int], int]
    product_verified: dict[tuple[int, int], bool]
    identity_label: int
    inverse_pairs: list[tuple[int, int]]
    order: dict[tuple[int, int], str]
    consistent: bool
    notes: list[str]

    def class_for(self, label: int) -> Optional[MonoidClass]:
        for cls in self.classes:
            if cls.label == label:
                return cls
        return None

    def to_dict(self) -> dict:
        from .notation import render

        return {
            "tests": self.descriptor,
            "generators": [render(g) for g in self.generators],
            "max_terms": self.max_terms,
            "classes": [
                {
                    "label": cls.label,
                    "representative": render(cls.representative),
                    "members": [render(m) for m in cls.members],
                    "outcome": cls.outcome.value,
                }
                for cls in self.classes
            ],
            "product": {
                f"{a},{b}": result for (a, b), result in sorted(self.product.items())
            },
            "product_verified": {
                f"{a},{b}": flag
                for (a, b), flag in sorted(self.product_verified.items())
            },
            "identity_label": self.identity_label,
            "inverse_pairs": [list(pair) for pair in sorted(self.inverse_pairs)],
            "order": {f"{a},{b}": rel for (a, b), rel in sorted(self.order.items())},
            "consistent": self.consistent,
            "notes": self.notes,
        }


def _generator_label(g: GameId) -> int:
    lit = as_number(g)
    if lit is None:
        if not is_dead_end(g):
            raise ValueError("generators must be canonical numbers or dead ends")
        lit = reduce_end_to_integer(g)
        return lit.numerator
    if lit.numerator >= 0:
        length = lit.left_length()
    else:
        length = lit.right_length()
        assert length is not None
        return -length
    assert length is not None
    return length


def quotient_monoid(
    generators: Iterable[GameId],
    max_terms: int,
    tests: TestSet,
    member_budget: int = DEFAULT_MEMBER_BUDGET,
) -> MonoidReport:
    """Partition bounded generator sums into indistinguishability classes.

    Labels come from the length arithmetic of the generators (positive numbers
    count left moves, negatives right moves, ends reduce to integers), so the
    report exposes whether the quotient really is label addition.
    """
    gens = sort_games(set(generators))
    if not gens:
        raise ValueError("at least one generator required")
    for g in gens:
        if conjugate(g) not in set(gens):
            raise ValueError("generator set must be closed under conjugation")
    labels = {g: _generator_label(g) for g in gens}
    total = sum(comb(len(gens) + size - 1, size) for size in range(max_terms + 1))
    if total > member_budget:
        raise BudgetExceededError("monoid generator sums", total, member_budget)

    notes: list[str] = []
    consistent = True
    sums: dict[GameId, int] = {}
    for size in range(max_terms + 1):
        for combo in itertools.combinations_with_replacement(gens, size):
            s = add_all(combo)
            label = sum(labels[g] for g in combo)
            if s in sums:
                if sums[s] != label:
                    consistent = False
                    notes.append(
                        f"structurally equal sums carry labels {sums[s]} and {label}"
                    )
            else:
                sums[s] = label

    classes: list[MonoidClass] = []
    for s in sort_games(sums):
        placed = False
        for cls in classes:
            if isinstance(equiv_mod(s, cls.representative, tests), IndistinguishableUpTo):
                cls.members.append(s)
                if sums[s] != cls.label:
                    consistent = False
                    notes.append(
                        f"class with label {cls.label} absorbed a sum labeled {sums[s]}"
                    )
                placed = True
                break
        if not placed:
            classes.append(MonoidClass(sums[s], s, [s], outcome_misere(s)))
    label_list = sorted({cls.label for cls in classes})
    if len(label_list) != len(classes):
        consistent = False
        notes.append("distinct classes share a label")

    by_label = {cls.label: cls for cls in classes}
    product: dict[tuple[int, int], int] = {}
    product_verified: dict[tuple[int, int], bool] = {}
    for la in label_list:
        for lb in label_list:
            target = la + lb
            product[(la, lb)] = target
            combined = add(by_label[la].representative, by_label[lb].representative)
            if target in by_label:
                reference = by_label[target].representative
            else:
                reference = integer_game(target)
            product_verified[(la, lb)] = isinstance(
                equiv_mod(combined, reference, tests), IndistinguishableUpTo
            )

    zero_class = next((cls for cls in classes if ZERO in cls.members), None)
    if zero_class is None:
        consistent = False
        notes.append("no class contains the zero game")
        identity_label = 0
    else:
        identity_label = zero_class.label

    inverse_pairs = []
    for la in label_list:
        for lb in label_list:
            if la > lb or la + lb != identity_label:
                continue
            combined = add(by_label[la].representative, by_label[lb].representative)
            if isinstance(equiv_mod(combined, ZERO, tests), IndistinguishableUpTo):
                inverse_pairs.append((la, lb))

    order: dict[tuple[int, int], str] = {}
    for la in label_list:
        for lb in label_list:
            if la == lb:
                continue
            verdict = geq_mod(
                by_label[la].representative, by_label[lb].representative, tests
            )
            if isinstance(verdict, GeqConsistentUpTo):
                order[(la, lb)] = "geq-consistent"
            elif isinstance(verdict, Refuted):
                order[(la, lb)] = "refuted"
            else:
                order[(la, lb)] = "incomparable"

    return MonoidReport(
        descriptor=tests.descriptor,
        generators=gens,
        max_terms=max_terms,
        classes=classes,
        product=product,
        product_verified=product_verified,
        identity_label=identity_label,
        inverse_pairs=inverse_pairs,
        order=order,
        consistent=consistent,
        notes=notes,
    )
