"""Registry of executable bounded checks, one per governing statement of the algebra.

Every checker is deterministic given its bounds and returns a structured
report.  Statements quantified over an infinite universe are checked over
declared test sets and labeled as bounded passes; statements with closed
forms are checked exhaustively within bounds.  A refuted report means the
implementation is wrong somewhere, never merely that the bounds are small:
search shortfalls surface as distinct failure notes, not as refutations.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .games import (
    ZERO,
    GameId,
    add,
    add_all,
    birthday,
    conjugate,
    dyadic_game,
    followers,
    integer_game,
    intern,
    is_dead_ending,
    is_dead_left_end,
    is_dead_right_end,
    is_left_end,
    is_right_end,
    lambda_game,
    left_length,
    left_options,
    number_literals,
    right_length,
    right_options,
    sort_games,
    star,
)
from .notation import render
from .outcomes import (
    Outcome,
    dead_end_sum_outcome,
    normal_geq,
    number_sum_outcome,
    outcome_geq,
    outcome_misere,
)
from .universes import (
    Comparison,
    Distinguished,
    GeqConsistentUpTo,
    IndistinguishableUpTo,
    TestSet,
    compare_integers_mod_dead_end_closure,
    compare_numbers_mod_E,
    equiv_mod,
    gen_dead_end_closure,
    gen_dead_ending,
    gen_dead_ends,
    gen_number_closure,
    geq_mod,
    invert_check,
    quotient_monoid,
    reduce_end_to_integer,
    witness_contexts,
)


@dataclass(frozen=True)
class Bounds:
    """Scale knobs for the bounded checks.

    birthday/options/terms govern end and closure generation; exponent and
    magnitude bound number literals; scan_birthday bounds the dead-ending
    context universe used for equivalence scans, which grows so much faster
    than the others that it gets its own knob.  struct_exponent bounds the
    purely arithmetic dyadic checks, which are nearly free.
    """

    birthday: int = 3
    options: int = 2
    terms: int = 3
    exponent: int = 3
    magnitude: int = 2
    scan_birthday: int = 2
    struct_exponent: int = 6
    seed: int = 0

    def to_dict(self) -> dict:
        return {
            "birthday": self.birthday,
            "options": self.options,
            "terms": self.terms,
            "exponent": self.exponent,
            "magnitude": self.magnitude,
            "scan_birthday": self.scan_birthday,
            "struct_exponent": self.struct_exponent,
            "seed": self.seed,
        }

    def dead_ending_tests(self) -> TestSet:
        return gen_dead_ending(self.scan_birthday, self.options)

    def closure_tests(self) -> TestSet:
        return gen_dead_end_closure(self.birthday, self.options, self.terms)

    def number_tests(self) -> TestSet:
        return gen_number_closure(self.exponent, self.magnitude, self.terms)

    def ladder_pack(self) -> list[GameId]:
        size = max(8, 2 * (self.exponent + self.magnitude))
        return witness_contexts(size, size)


@dataclass
class ClaimReport:
    claim: str
    status: str  # "pass" | "refuted" | "skipped"
    bounds: dict
    cases: int
    witnesses: list[dict]
    duration_ms: int
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "status": self.status,
            "bounds": self.bounds,
            "cases": self.cases,
            "witnesses": self.witnesses,
            "duration_ms": self.duration_ms,
            "details": self.details,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ClaimReport":
        return cls(
            claim=data["claim"],
            status=data["status"],
            bounds=dict(data["bounds"]),
            cases=data["cases"],
            witnesses=[dict(w) for w in data["witnesses"]],
            duration_ms=data["duration_ms"],
            details=dict(data["details"]),
        )

    def line(self) -> str:
        mark = {"pass": "PASS", "refuted": "FAIL", "skipped": "SKIP"}[self.status]
        return (
            f"{mark:4s} {self.claim:28s} cases={self.cases:<7d} "
            f"witnesses={len(self.witnesses):<3d} {self.duration_ms / 1000.0:.2f}s"
        )


def _witness(game: GameId, role: str, **extra) -> dict:
    record = {"game": render(game, depth=8), "role": role}
    record.update(extra)
    return record


class _Check:
    """Collects case counts and failures for one claim run."""

    def __init__(self):
        self.cases = 0
        self.failures: list[dict] = []
        self.witnesses: list[dict] = []
        self.details: dict = {}

    def run(self, ok: bool, game: GameId, role: str, **extra) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(_witness(game, role, **extra))

    def report(self, claim: str, bounds: Bounds, started: float) -> ClaimReport:
        status = "refuted" if self.failures else "pass"
        return ClaimReport(
            claim=claim,
            status=status,
            bounds=bounds.to_dict(),
            cases=self.cases,
            witnesses=self.failures or self.witnesses,
            duration_ms=int((time.monotonic() - started) * 1000),
            details=self.details,
        )


# ---------------------------------------------------------------------------
# witness search shared by the order and distinctness claims


def _refutation_witness(
    g: GameId,
    h: GameId,
    scan: Iterable[GameId],
    pack: list[GameId],
    h_conjugate: Optional[GameId],
) -> Optional[tuple[GameId, str]]:
    """A context X in the dead-ending universe with not o-(g+X) >= o-(h+X).

    Tries the scan pool, then ladder contexts, then composites conj(h) + Y;
    the composite step mirrors the reduction of g >= h to g + conj(h) >= 0,
    valid whenever h has an inverse.  Every returned witness is re-verified
    directly, so the route taken never weakens the result.
    """
    scan = list(scan)
    for x in scan:
        if not outcome_geq(outcome_misere(add(g, x)), outcome_misere(add(h, x))):
            return x, "scan"
    for x in pack:
        if not outcome_geq(outcome_misere(add(g, x)), outcome_misere(add(h, x))):
            return x, "ladder"
    if h_conjugate is not None:
        for y in itertools.chain(scan, pack):
            x = add(h_conjugate, y)
            if not outcome_geq(outcome_misere(add(g, x)), outcome_misere(add(h, x))):
                return x, "composite"
    return None


def _distinguishing_witness(
    g: GameId,
    h: GameId,
    scan: Iterable[GameId],
    pack: list[GameId],
    h_conjugate: Optional[GameId],
) -> Optional[tuple[GameId, str]]:
    scan = list(scan)
    for x in scan:
        if outcome_misere(add(g, x)) != outcome_misere(add(h, x)):
            return x, "scan"
    for x in pack:
        if outcome_misere(add(g, x)) != outcome_misere(add(h, x)):
            return x, "ladder"
    if h_conjugate is not None:
        for y in itertools.chain(scan, pack):
            x = add(h_conjugate, y)
            if outcome_misere(add(g, x)) != outcome_misere(add(h, x)):
                return x, "composite"
    return None


def _verify_refutation(g: GameId, h: GameId, x: GameId) -> bool:
    return is_dead_ending(x) and not outcome_geq(
        outcome_misere(add(g, x)), outcome_misere(add(h, x))
    )


# ---------------------------------------------------------------------------
# claim checkers


def _claim_follower_closed(bounds: Bounds) -> _Check:
    check = _Check()
    for g in bounds.dead_ending_tests().members:
        for f in sort_games(followers(g)):
            check.run(is_dead_ending(f), f, "non-dead-ending follower", of=render(g))
    return check


def _claim_sum_closed(bounds: Bounds) -> _Check:
    check = _Check()
    members = bounds.dead_ending_tests().members
    for i, g in enumerate(members):
        for h in members[i:]:
            check.run(is_dead_ending(add(g, h)), add(g, h), "non-dead-ending sum")
    return check


def _claim_dead_end_outcome(bounds: Bounds) -> _Check:
    check = _Check()
    for g in gen_dead_ends(bounds.birthday, bounds.options):
        if g == ZERO:
            check.run(outcome_misere(g) == Outcome.N, g, "zero end not N")
            continue
        if is_dead_left_end(g):
            check.run(outcome_misere(g) == Outcome.L, g, "dead left end not L")
        if is_dead_right_end(g):
            check.run(outcome_misere(g) == Outcome.R, g, "dead right end not R")
    return check


def _claim_end_sum_outcome(bounds: Bounds) -> _Check:
    check = _Check()
    ends = gen_dead_ends(bounds.birthday, bounds.options)
    rights = [g for g in ends if is_dead_right_end(g)]
    lefts = [g for g in ends if is_dead_left_end(g)]
    for g in rights:
        for h in lefts:
            check.run(
                outcome_misere(add(g, h)) == dead_end_sum_outcome(g, h),
                add(g, h),
                "solver disagrees with length rule",
            )
    check.details["pairs"] = len(rights) * len(lefts)
    return check


def _claim_ends_invertible(bounds: Bounds) -> _Check:
    check = _Check()
    tests = bounds.dead_ending_tests()
    left_ends = [x for x in tests.members if is_left_end(x)]
    for g in gen_dead_ends(bounds.birthday, bounds.options):
        verdict = invert_check(g, tests)
        check.run(
            isinstance(verdict, IndistinguishableUpTo),
            g,
            "end plus conjugate distinguished from zero",
            witness=render(verdict.witness) if isinstance(verdict, Distinguished) else None,
        )
        paired = add(g, conjugate(g))
        for x in left_ends:
            check.run(
                outcome_misere(add(paired, x)) in (Outcome.L, Outcome.N),
                x,
                "left-end context escapes L/N",
                around=render(g),
            )
    check.details["tests"] = tests.descriptor
    return check


def _claim_int_total_order(bounds: Bounds) -> _Check:
    check = _Check()
    tests = bounds.closure_tests()
    span = range(-bounds.birthday, bounds.birthday + 1)
    for n in span:
        for m in span:
            if n >= m:
                continue
            verdict = geq_mod(integer_game(n), integer_game(m), tests)
            check.run(
                isinstance(verdict, GeqConsistentUpTo),
                integer_game(n),
                "smaller integer not >= larger over closure",
                pair=f"{n},{m}",
            )
            strict = equiv_mod(integer_game(n), integer_game(m), tests)
            check.run(
                isinstance(strict, Distinguished),
                integer_game(m),
                "distinct integers indistinguishable over closure",
                pair=f"{n},{m}",
            )
            if isinstance(strict, Distinguished):
                check.run(
                    compare_integers_mod_dead_end_closure(n, m) == Comparison.GREATER,
                    integer_game(n),
                    "closed form disagrees",
                    pair=f"{n},{m}",
                )
    check.details["tests"] = tests.descriptor
    return check


def _claim_int_incomparable(bounds: Bounds) -> _Check:
    check = _Check()
    span = range(-bounds.birthday, bounds.birthday + 1)
    for n in span:
        for m in span:
            if n <= m:
                continue
            gn, gm = integer_game(n), integer_game(m)
            # conjugate witness refutes n >= m
            x = conjugate(gm)
            check.run(
                outcome_misere(add(gn, x)) == Outcome.R,
                x,
                "n + conj(m) not R",
                pair=f"{n},{m}",
            )
            check.run(
                outcome_misere(add(gm, x)) == Outcome.N,
                x,
                "m + conj(m) not N",
                pair=f"{n},{m}",
            )
            check.run(
                _verify_refutation(gn, gm, x), x, "conjugate witness fails", pair=f"{n},{m}"
            )
            # ladder witness refutes n <= m
            if m >= 0:
                lam = lambda_game(n)
                check.run(
                    outcome_misere(add(gn, lam)) == Outcome.L,
                    lam,
                    "n + ladder not L",
                    pair=f"{n},{m}",
                )
                check.run(
                    outcome_misere(add(gm, lam)) in (Outcome.P, Outcome.R),
                    lam,
                    "m + ladder not P/R",
                    pair=f"{n},{m}",
                )
                witness = lam
            elif n - m - 1 >= 1:
                k = -m - 1
                witness = add(integer_game(k), lambda_game(n + k))
                check.run(
                    outcome_misere(add(gn, witness)) == Outcome.L,
                    witness,
                    "n + shifted ladder not L",
                    pair=f"{n},{m}",
                )
                check.run(
                    outcome_misere(add(gm, witness)) == Outcome.N,
                    witness,
                    "m + shifted ladder not N",
                    pair=f"{n},{m}",
                )
            else:
                # consecutive pair below zero: the conjugated ladder separates it
                witness = conjugate(lambda_game(-m))
            check.run(
                _verify_refutation(gm, gn, witness),
                witness,
                "ladder witness fails to refute n <= m",
                pair=f"{n},{m}",
            )
    return check


def _claim_end_to_integer(bounds: Bounds) -> _Check:
    check = _Check()
    tests = bounds.closure_tests()
    for g in gen_dead_ends(bounds.birthday, bounds.options):
        literal = reduce_end_to_integer(g)
        verdict = equiv_mod(g, dyadic_game(literal), tests)
        check.run(
            isinstance(verdict, IndistinguishableUpTo),
            g,
            "end distinguished from its integer",
            integer=str(literal),
        )
    check.details["tests"] = tests.descriptor
    return check


def _expect_integer_monoid(report, check: _Check, label_span: int) -> None:
    expected = list(range(-label_span, label_span + 1))
    labels = sorted(cls.label for cls in report.classes)
    check.run(report.consistent, ZERO, "label bookkeeping inconsistent")
    check.run(labels == expected, ZERO, "class labels not the expected range",
              labels=str(labels))
    for (a, b), target in report.product.items():
        check.run(target == a + b, ZERO, "product is not label addition", pair=f"{a},{b}")
    for (a, b), verified in report.product_verified.items():
        check.run(verified, ZERO, "product entry failed equivalence check", pair=f"{a},{b}")
    for cls in report.classes:
        expected_outcome = (
            Outcome.N if cls.label == 0 else Outcome.L if cls.label < 0 else Outcome.R
        )
        check.run(
            cls.outcome == expected_outcome,
            cls.representative,
            "class outcome off the partition",
            label=cls.label,
        )
    check.run(report.identity_label == 0, ZERO, "identity class is not labeled 0")
    check.run(
        report.inverse_pairs == [(-k, k) for k in range(label_span, -1, -1)],
        ZERO,
        "inverse pairs incomplete",
    )
    for (a, b), relation in report.order.items():
        expected_rel = "geq-consistent" if a < b else "refuted"
        check.run(relation == expected_rel, ZERO, "order relation off", pair=f"{a},{b}")


def _claim_int_monoid(bounds: Bounds) -> _Check:
    check = _Check()
    span = min(bounds.magnitude, 2)
    gens = [integer_game(n) for n in range(-span, span + 1)]
    tests = gen_dead_end_closure(bounds.birthday, bounds.options, 2)
    report = quotient_monoid(gens, 2, tests)
    _expect_integer_monoid(report, check, 2 * span)
    check.details["tests"] = tests.descriptor
    check.details["classes"] = len(report.classes)
    return check


def _claim_number_monoid(bounds: Bounds) -> _Check:
    check = _Check()
    gens = [dyadic_game(lit) for lit in number_literals(2, 1, include_zero=True)]
    tests = gen_number_closure(2, 1, 2)
    report = quotient_monoid(gens, 2, tests)
    _expect_integer_monoid(report, check, 4)
    check.details["tests"] = tests.descriptor
    check.details["classes"] = len(report.classes)
    return check


def _claim_dyadic_options(bounds: Bounds) -> _Check:
    check = _Check()
    tallies = {"1:rl": 0, "1:lr": 0, "3:rl": 0, "3:lr": 0}
    flips = 0
    for lit in number_literals(bounds.struct_exponent, bounds.magnitude):
        if lit.is_integer:
            continue
        g = dyadic_game(lit)
        (gl,) = left_options(g)
        (gr,) = right_options(g)
        rl = left_options(gr)
        lr = right_options(gl)
        check.run(bool(rl) or bool(lr), g, "neither mixed option exists")
        rl_match = bool(rl) and rl[0] == gl
        lr_match = bool(lr) and lr[0] == gr
        check.run(rl_match or lr_match, g, "no mixed option equals the direct option")
        # residue of the positive mirror; 1 normally forces the RL identity and
        # 3 the LR identity, except that half-integers with an integer option
        # satisfy the other branch instead
        residue = abs(lit.numerator) % 4
        expected_rl = (lit.numerator > 0) == (residue == 1)
        if rl_match:
            tallies[f"{residue}:rl"] += 1
        if lr_match:
            tallies[f"{residue}:lr"] += 1
        if rl_match != expected_rl and not (rl_match and lr_match):
            flips += 1
            check.run(
                lit.exponent == 1,
                g,
                "branch flip outside the half-integer family",
                literal=str(lit),
            )
    check.details["branch_tallies"] = tallies
    check.details["half_integer_branch_flips"] = flips
    return check


def _claim_right_option_length(bounds: Bounds) -> _Check:
    check = _Check()
    for lit in number_literals(bounds.struct_exponent, bounds.magnitude):
        if lit.is_integer:
            continue
        if lit.numerator > 0:
            right = lit.right_option()
            assert right is not None
            la, lr = lit.left_length(), right.left_length()
            assert la is not None and lr is not None
            check.run(lr <= la, dyadic_game(lit), "right option has longer left path")
        else:
            left = lit.left_option()
            assert left is not None
            ra, rl = lit.right_length(), left.right_length()
            assert ra is not None and rl is not None
            check.run(rl <= ra, dyadic_game(lit), "left option has longer right path")
        # literal arithmetic must agree with tree search
        g = dyadic_game(lit)
        check.run(
            left_length(g) == lit.left_length() and right_length(g) == lit.right_length(),
            g,
            "literal lengths disagree with tree lengths",
        )
    return check


def _claim_number_sum_outcome(bounds: Bounds) -> _Check:
    check = _Check()
    literals = number_literals(bounds.exponent, bounds.magnitude)
    games = {lit: dyadic_game(lit) for lit in literals}
    for size in range(bounds.terms + 1):
        for combo in itertools.combinations_with_replacement(literals, size):
            built = add_all(games[lit] for lit in combo)
            check.run(
                outcome_misere(built) == number_sum_outcome(combo),
                built,
                "solver disagrees with length rule",
                terms=" + ".join(str(l) for l in combo) or "0",
            )
    return check


def _claim_number_collapses(bounds: Bounds) -> _Check:
    check = _Check()
    tests = bounds.number_tests()
    for lit in number_literals(bounds.exponent, bounds.magnitude):
        if lit.numerator > 0:
            label = lit.left_length()
        else:
            length = lit.right_length()
            assert length is not None
            label = -length
        assert label is not None
        verdict = equiv_mod(dyadic_game(lit), integer_game(label), tests)
        check.run(
            isinstance(verdict, IndistinguishableUpTo),
            dyadic_game(lit),
            "number distinguished from its length integer over numbers",
            literal=str(lit),
            integer=label,
        )
    check.details["tests"] = tests.descriptor
    return check


def _claim_number_plus_end(bounds: Bounds) -> _Check:
    check = _Check()
    tests = bounds.dead_ending_tests()
    left_ends = [x for x in tests.members if is_left_end(x)]
    literals = number_literals(bounds.exponent, bounds.magnitude)
    games = {lit: dyadic_game(lit) for lit in literals}
    for size in range(1, bounds.terms + 1):
        for combo in itertools.combinations_with_replacement(literals, size):
            if number_sum_outcome(combo) != Outcome.L:
                continue
            built = add_all(games[lit] for lit in combo)
            for x in left_ends:
                check.run(
                    outcome_misere(add(built, x)) == Outcome.L,
                    x,
                    "left end spoils a Left-won number sum",
                    terms=" + ".join(str(l) for l in combo),
                )
    check.details["left_ends"] = len(left_ends)
    return check


def _claim_numbers_invertible(bounds: Bounds) -> _Check:
    check = _Check()
    tests = bounds.dead_ending_tests()
    for lit in number_literals(bounds.exponent, bounds.magnitude):
        verdict = invert_check(dyadic_game(lit), tests)
        check.run(
            isinstance(verdict, IndistinguishableUpTo),
            dyadic_game(lit),
            "number plus conjugate distinguished from zero",
            literal=str(lit),
        )
    check.details["tests"] = tests.descriptor
    return check


def _claim_geq_implies_normal(bounds: Bounds) -> _Check:
    check = _Check()
    tests = bounds.dead_ending_tests()
    pack = bounds.ladder_pack()
    rng = random.Random(bounds.seed)
    pool = [dyadic_game(lit) for lit in number_literals(bounds.exponent, bounds.magnitude)]
    pool += list(tests.members[: 4 * len(pool)])
    pool = sort_games(set(pool))
    pairs = [
        (g, h) for g in pool for h in pool if g != h and not normal_geq(g, h)
    ]
    rng.shuffle(pairs)
    sample = pairs[:60]
    found = 0
    beyond = 0
    for g, h in sample:
        hit = _refutation_witness(g, h, tests.members, pack, conjugate(h))
        check.cases += 1
        if hit is not None:
            witness, route = hit
            if not _verify_refutation(g, h, witness):
                check.failures.append(_witness(witness, "witness fails re-check"))
            found += 1
        else:
            beyond += 1
            check.witnesses.append(
                _witness(g, "witness beyond bound", against=render(h))
            )
    check.details.update(
        {
            "sampled_pairs": len(sample),
            "witness_found": found,
            "witness_beyond_bound": beyond,
            "coverage": round(found / len(sample), 3) if sample else 1.0,
        }
    )
    return check


def _claim_numbers_distinct(bounds: Bounds) -> _Check:
    check = _Check()
    tests = bounds.dead_ending_tests()
    pack = bounds.ladder_pack()
    literals = number_literals(bounds.exponent, bounds.magnitude)
    routes = {"scan": 0, "ladder": 0, "composite": 0}
    for i, a in enumerate(literals):
        for b in literals[i + 1 :]:
            ga, gb = dyadic_game(a), dyadic_game(b)
            hit = _distinguishing_witness(ga, gb, tests.members, pack, conjugate(gb))
            ok = hit is not None
            if ok:
                witness, route = hit
                routes[route] += 1
                ok = is_dead_ending(witness) and outcome_misere(
                    add(ga, witness)
                ) != outcome_misere(add(gb, witness))
            check.run(ok, ga, "no distinguishing context found", pair=f"{a},{b}")
    check.details["routes"] = routes
    check.details["tests"] = tests.descriptor
    return check


def _claim_simplicity_length(bounds: Bounds) -> _Check:
    check = _Check()
    literals = [
        lit
        for lit in number_literals(bounds.struct_exponent, bounds.magnitude)
        if lit.numerator > 0
    ]
    for a in literals:
        a_left = a.left_option()
        if a_left is None:
            continue
        for b in literals:
            if a_left.value < b.value < a.value:
                la, lb = a_left.left_length(), b.left_length()
                assert la is not None and lb is not None
                check.run(
                    la < lb,
                    dyadic_game(b),
                    "option length not below inner number length",
                    pair=f"{a},{b}",
                )
    return check


def _claim_number_order(bounds: Bounds) -> _Check:
    check = _Check()
    tests = bounds.dead_ending_tests()
    pack = bounds.ladder_pack()
    literals = number_literals(bounds.exponent, bounds.magnitude)
    routes = {"scan": 0, "ladder": 0, "composite": 0}
    greater_checked = 0
    incomparable_checked = 0
    for i, a in enumerate(literals):
        for b in literals[i + 1 :]:
            relation = compare_numbers_mod_E(a, b)
            ga, gb = dyadic_game(a), dyadic_game(b)
            if relation in (Comparison.GREATER, Comparison.LESS):
                hi, lo = (ga, gb) if relation == Comparison.GREATER else (gb, ga)
                greater_checked += 1
                stray = _refutation_witness(
                    hi, lo, tests.members, pack, conjugate(lo)
                )
                check.run(
                    stray is None,
                    hi,
                    "closed-form greater direction refuted",
                    pair=f"{a},{b}",
                )
                strict = _refutation_witness(lo, hi, tests.members, pack, conjugate(hi))
                ok = strict is not None and _verify_refutation(lo, hi, strict[0])
                check.run(ok, lo, "strictness witness missing", pair=f"{a},{b}")
            elif relation == Comparison.INCOMPARABLE:
                incomparable_checked += 1
                for x, y in ((a, b), (b, a)):
                    gx, gy = dyadic_game(x), dyadic_game(y)
                    hit = _refutation_witness(gx, gy, tests.members, pack, conjugate(gy))
                    ok = hit is not None and _verify_refutation(gx, gy, hit[0])
                    if hit is not None:
                        routes[hit[1]] += 1
                    check.run(
                        ok,
                        gx,
                        "incomparable direction lacks a witness",
                        pair=f"{x},{y}",
                    )
    check.details.update(
        {
            "tests": tests.descriptor,
            "greater_pairs": greater_checked,
            "incomparable_pairs": incomparable_checked,
            "routes": routes,
        }
    )
    return check


def _claim_non_invertible_family(bounds: Bounds) -> _Check:
    check = _Check()
    values = range(0, bounds.birthday + 1)
    for size in range(1, bounds.options + 1):
        for naturals in itertools.combinations(values, size):
            members = tuple(integer_game(n) for n in naturals)
            mirrored = tuple(conjugate(g) for g in members)
            g = intern(members, mirrored)
            x = intern(members, ())
            check.run(conjugate(g) == g, g, "family member not self-conjugate")
            check.run(outcome_misere(x) == Outcome.R, x, "witness end not R")
            total = add(add(g, g), x)
            check.run(
                outcome_misere(total) in (Outcome.L, Outcome.P),
                total,
                "Left cannot win the doubled sum second",
                family=str(naturals),
            )
            check.run(
                outcome_misere(total) != outcome_misere(x),
                x,
                "witness fails to distinguish doubled game from zero",
                family=str(naturals),
            )
    return check


def _zero_family_hypothesis(g: GameId) -> bool:
    if not is_dead_ending(g):
        return False
    for gl in left_options(g):
        if not is_left_end(gl) or ZERO not in right_options(gl):
            return False
    for gr in right_options(g):
        if not is_right_end(gr) or ZERO not in left_options(gr):
            return False
    return True


def _claim_zero_family(bounds: Bounds) -> _Check:
    check = _Check()
    tests = bounds.dead_ending_tests()
    candidates = set(tests.members)
    ends = gen_dead_ends(bounds.birthday, bounds.options)
    left_sources = [g for g in ends if is_left_end(g) and ZERO in right_options(g)]
    right_sources = [g for g in ends if is_right_end(g) and ZERO in left_options(g)]
    for lsize in range(bounds.options + 1):
        for rsize in range(bounds.options + 1):
            for lsub in itertools.combinations(left_sources, lsize):
                for rsub in itertools.combinations(right_sources, rsize):
                    candidates.add(intern(lsub, rsub))
    matched = [g for g in sort_games(candidates) if _zero_family_hypothesis(g)]
    swap = intern((integer_game(-1),), (integer_game(1),))
    check.run(swap in matched, swap, "the basic swap game escaped the family")
    for g in matched:
        verdict = equiv_mod(g, ZERO, tests)
        check.run(
            isinstance(verdict, IndistinguishableUpTo),
            g,
            "family member distinguished from zero",
        )
    check.details["family_size"] = len(matched)
    check.details["tests"] = tests.descriptor
    return check


def _claim_star_squared(bounds: Bounds) -> _Check:
    check = _Check()
    tests = bounds.dead_ending_tests()
    verdict = invert_check(star(), tests)
    check.cases += 1
    if isinstance(verdict, Distinguished):
        check.witnesses.append(
            _witness(
                verdict.witness,
                "separates star + star from zero",
                outcomes=f"{verdict.first_outcome.value} vs {verdict.second_outcome.value}",
            )
        )
    else:
        check.failures.append(_witness(ZERO, "no witness found in the test set"))
    check.details["tests"] = tests.descriptor
    return check


_REGISTRY: dict[str, Callable[[Bounds], _Check]] = {
    "lemma:follower-closed": _claim_follower_closed,
    "lemma:sum-closed": _claim_sum_closed,
    "lemma:dead-end-outcome": _claim_dead_end_outcome,
    "lemma:end-sum-outcome": _claim_end_sum_outcome,
    "thm:ends-invertible": _claim_ends_invertible,
    "thm:int-total-order": _claim_int_total_order,
    "thm:int-incomparable": _claim_int_incomparable,
    "lemma:end-to-integer": _claim_end_to_integer,
    "thm:int-monoid": _claim_int_monoid,
    "prop:dyadic-options": _claim_dyadic_options,
    "lemma:right-option-length": _claim_right_option_length,
    "lemma:number-sum-outcome": _claim_number_sum_outcome,
    "cor:number-collapses": _claim_number_collapses,
    "thm:number-monoid": _claim_number_monoid,
    "lemma:number-plus-end": _claim_number_plus_end,
    "thm:numbers-invertible": _claim_numbers_invertible,
    "thm:geq-implies-normal": _claim_geq_implies_normal,
    "cor:numbers-distinct": _claim_numbers_distinct,
    "lemma:simplicity-length": _claim_simplicity_length,
    "thm:number-order": _claim_number_order,
    "lemma:non-invertible-family": _claim_non_invertible_family,
    "thm:zero-family": _claim_zero_family,
    "fact:star-squared": _claim_star_squared,
}


def claim_ids() -> list[str]:
    return list(_REGISTRY)


def run_claim(claim: str, bounds: Bounds = Bounds()) -> ClaimReport:
    """Run one registered claim checker; unknown ids raise ValueError."""
    checker = _REGISTRY.get(claim)
    if checker is None:
        raise ValueError(f"unknown claim id {claim!r}")
    started = time.monotonic()
    return checker(bounds).report(claim, bounds, started)


def run_all(
    bounds: Bounds = Bounds(), budget_seconds: Optional[float] = None
) -> list[ClaimReport]:
    """Run every registered claim, skipping the rest once the budget is spent."""
    reports = []
    started = time.monotonic()
    for claim in _REGISTRY:
        if budget_seconds is not None and time.monotonic() - started >= budget_seconds:
            reports.append(
                ClaimReport(
                    claim=claim,
                    status="skipped",
                    bounds=bounds.to_dict(),
                    cases=0,
                    witnesses=[],
                    duration_ms=0,
                    details={"reason": "wall-clock budget exhausted"},
                )
            )
            continue
        reports.append(run_claim(claim, bounds))
    return reports
