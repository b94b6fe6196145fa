"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line; the lines are printed as they
happen and repeated in the terminal summary. Run alone with

    pytest tests/test_acceptance.py -v -s
"""
import itertools
import math
import random
import time
from fractions import Fraction

import pytest

from mzr import hopf
from mzr.arith import zeta_nonpositive
from mzr.closed_forms import closed_form_depth2, closed_form_depth3
from mzr.combination import MzvCombination
from mzr.errors import RegularityViolation
from mzr.index import classify, is_regular
from mzr.numerics import EvalConfig, NumericCache, eval_combination, eval_mzv
from mzr.reduce import bound_check, reduce, stuffle_expand

pytestmark = pytest.mark.slow

RESULTS: dict[int, str] = {}
CFG = EvalConfig(N=10**6)
CACHE = NumericCache()
REDUCED: list[tuple[tuple[int, ...], MzvCombination]] = []
DEPTH3_GRID = [p for p in itertools.product(range(-4, 7), repeat=3) if is_regular(p)]
DEPTH4_SPOT = random.Random(4).sample(
    [p for p in itertools.product(range(-3, 6), repeat=4) if is_regular(p)], 20
)


def report(num: int, ok: bool, detail: str) -> None:
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[num] = line
    print(line)
    assert ok, line


def value(c: MzvCombination) -> float:
    return eval_combination(c, CFG, CACHE).value


def random_letter(rng: random.Random) -> hopf.LinearForm:
    chosen = rng.sample(range(1, 4), rng.randint(1, 3))
    return hopf.LinearForm.of({i: rng.randint(1, 3) for i in chosen})


def random_word(rng: random.Random, lo: int, hi: int) -> hopf.Word:
    return hopf.Word(tuple(random_letter(rng) for _ in range(rng.randint(lo, hi))))


def test_criterion_1_hopf_identity():
    rng = random.Random(101)
    start = time.perf_counter()
    bad = sum(not hopf.hopf_defect(random_word(rng, 1, 4)).is_zero() for _ in range(500))
    elapsed = time.perf_counter() - start
    report(1, bad == 0 and elapsed < 10, f"antipode defect zero on 500 words, {bad} failures, {elapsed:.1f}s")


def test_criterion_2_word_identities():
    rng = random.Random(202)
    start = time.perf_counter()
    bad = 0
    for _ in range(200):
        us = [random_letter(rng) for _ in range(rng.randint(1, 3))]
        bad += not hopf.telescoped_word_sum(us).is_zero()
        w = random_word(rng, 0, 3)
        vs = [random_letter(rng) for _ in range(rng.randint(1, 3))]
        left, right = hopf.prop_1_10_sides(w, random_letter(rng), vs)
        bad += left != right
    elapsed = time.perf_counter() - start
    report(2, bad == 0 and elapsed < 30, f"200 cases, {bad} failures, {elapsed:.1f}s")


def test_criterion_3_depth2_exact():
    points = [p for p in itertools.product(range(-6, 9), repeat=2) if is_regular(p)]
    bad = []
    for p in points:
        for strategy in ("rightmost", "leftmost"):
            combo = reduce(p, strategy)
            REDUCED.append((p, combo))
            if combo != closed_form_depth2(*p):
                bad.append((p, strategy))
    # the box holds 137 regular points; exact equality is required on each
    report(3, not bad and len(points) == 137,
           f"exact equality on all {len(points)} regular points of [-6,8]^2, mismatches {bad[:3]}")


def test_criterion_4_depth3_numeric():
    start = time.perf_counter()
    worst, at = 0.0, "-"
    for p in DEPTH3_GRID:
        combo = reduce(p)
        REDUCED.append((p, combo))
        diff = abs(value(combo) - value(closed_form_depth3(*p)))
        if diff > worst:
            worst, at = diff, p
    elapsed = time.perf_counter() - start
    report(4, worst < 1e-6 and elapsed < 300,
           f"{len(DEPTH3_GRID)} points, max diff {worst:.1e} at {at}, {elapsed:.1f}s at N=10^6")


def test_criterion_5_path_independence():
    worst, at = 0.0, "-"
    for p in DEPTH3_GRID + DEPTH4_SPOT:
        left, right = reduce(p, "leftmost"), reduce(p, "rightmost")
        REDUCED.extend([(p, left), (p, right)])
        diff = abs(value(left) - value(right))
        if diff > worst:
            worst, at = diff, p
    report(5, worst < 1e-6,
           f"{len(DEPTH3_GRID)} depth-3 + {len(DEPTH4_SPOT)} depth-4 points, max diff {worst:.1e} at {at}")


def test_criterion_6_bound_and_no_violation():
    violations = 0
    points = set(p for p, _ in REDUCED)
    for p in points:
        for strategy in ("rightmost", "leftmost"):
            try:
                REDUCED.append((p, reduce(p, strategy)))
            except RegularityViolation:
                violations += 1
    bad = [p for p, c in REDUCED if not bound_check(p, c)]
    report(6, not bad and violations == 0 and len(points) > 0,
           f"{len(REDUCED)} reductions over {len(points)} points, {len(bad)} bound failures, "
           f"{violations} regularity violations")


def test_criterion_7_stated_values():
    box = list(itertools.product(range(-10, 11), repeat=2))
    negative = [p for p in box if p[0] < 0 and p[1] < 0 and is_regular(p)]
    neg_ok = all(reduce(p) == MzvCombination.constant(-zeta_nonpositive(-sum(p)) / 2) for p in negative)
    depth1_ok = (reduce((-1,)) == MzvCombination.constant(Fraction(-1, 12))
                 and reduce((-3,)) == MzvCombination.constant(Fraction(1, 120)))
    zero = [p for p in box if 0 in p and is_regular(p) and sum(p) <= 0]
    wrong = [p for p in zero if reduce(p) != MzvCombination.constant(zeta_nonpositive(-sum(p)))]
    report(7, neg_ok and depth1_ok and not wrong,
           f"all-negative rule on {len(negative)} points {'ok' if neg_ok else 'broken'}; "
           f"zeta(-1), zeta(-3) {'ok' if depth1_ok else 'broken'}; "
           f"zero-entry rule zeta_2 = zeta(n1+n2) fails on {len(wrong)}/{len(zero)} points, "
           f"e.g. (0,-3) reduces to {reduce((0, -3)).to_plain()} "
           f"since zeta_2(0,s) = zeta(s-1) - zeta(s)")


def test_criterion_8_numeric_layer():
    cache = NumericCache()
    start = time.perf_counter()

    def ev(idx):
        return eval_mzv(idx, CFG, cache).value

    errs = [
        abs(ev((2,)) - math.pi**2 / 6),
        abs(ev((1, 2)) - ev((3,))),
        abs(ev((2, 2)) - math.pi**4 / 120),
        abs(ev((2,)) * ev((3,)) - eval_combination(stuffle_expand((2,), (3,)), CFG, cache).value),
    ]
    elapsed = time.perf_counter() - start
    report(8, max(errs) < 1e-6 and elapsed < 5,
           f"max error {max(errs):.1e} over four checks, {elapsed:.2f}s at N=10^6")


def stated_depth2(n1, n2):
    s = n1 + n2
    return n2 != 1 and (s > 2 or (s < 0 and s % 2 == 1))


def stated_depth3(n1, n2, n3):
    return n3 != 1 and stated_depth2(n2, n3) and n1 + n2 + n3 > 3


def test_criterion_9_classifier():
    bad2 = [p for p in itertools.product(range(-10, 11), repeat=2) if is_regular(p) != stated_depth2(*p)]
    bad3 = [p for p in itertools.product(range(-6, 7), repeat=3) if is_regular(p) != stated_depth3(*p)]
    nonpos = [p for p in itertools.product(range(-6, 1), repeat=3) if classify(p)]
    report(9, not (bad2 or bad3 or nonpos),
           f"{len(bad2)} depth-2 and {len(bad3)} depth-3 disagreements, "
           f"{len(nonpos)} all-non-positive depth-3 points marked regular")
