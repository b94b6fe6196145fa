"""Built-in invariant suite behind ``mzr selftest``."""
from __future__ import annotations

import itertools
import math
import random
import sys
from typing import Callable, TextIO

from . import arith, hopf
from .closed_forms import closed_form_depth2, closed_form_depth3
from .index import classify, is_regular
from .numerics import EvalConfig, eval_combination, eval_mzv
from .reduce import bound_check, reduce, reduce_with_trace, stuffle_expand


def _random_word(rng: random.Random, max_len: int = 4) -> hopf.Word:
    letters = []
    for _ in range(rng.randint(1, max_len)):
        coeffs = {i: rng.randint(0, 3) for i in rng.sample(range(1, 4), rng.randint(1, 3))}
        if not any(coeffs.values()):
            coeffs[1] = 1
        letters.append(hopf.LinearForm.of(coeffs))
    return hopf.Word(tuple(letters))


def check_bernoulli() -> bool:
    return all(
        sum(arith.binomial(n + 1, k) * arith.bernoulli(k) for k in range(n + 1)) == 0
        for n in range(1, 31)
    ) and arith.zeta_nonpositive(1) == arith.Rational(-1, 12)


def check_hopf() -> bool:
    rng = random.Random(1)
    return all(hopf.hopf_defect(_random_word(rng)).is_zero() for _ in range(100))


def check_word_identities() -> bool:
    rng = random.Random(2)
    for _ in range(40):
        w = _random_word(rng, 3)
        if not hopf.telescoped_word_sum(w).is_zero():
            return False
        left, right = hopf.prop_1_10_sides(_random_word(rng, 2), w[0], w)
        if left != right:
            return False
    return True


def check_depth2_oracle() -> bool:
    return all(
        reduce(p) == closed_form_depth2(*p)
        for p in itertools.product(range(-6, 9), repeat=2)
        if is_regular(p)
    )


def check_depth3_oracle() -> bool:
    return all(
        reduce(p) == closed_form_depth3(*p)
        for p in itertools.product(range(-3, 5), repeat=3)
        if is_regular(p)
    )


def check_bounds_and_traces() -> bool:
    for p in itertools.product(range(-3, 5), repeat=3):
        if not is_regular(p):
            continue
        for strategy in ("leftmost", "rightmost"):
            combo, trace = reduce_with_trace(p, strategy)
            if not bound_check(p, combo) or trace.replay() != combo:
                return False
    return True


def check_classifier() -> bool:
    for n1, n2 in itertools.product(range(-10, 11), repeat=2):
        s = n1 + n2
        stated = n2 != 1 and (s > 2 or (s < 0 and s % 2))
        if stated != is_regular((n1, n2)):
            return False
    return all(not is_regular(p) for p in itertools.product(range(-4, 1), repeat=3))


def check_numerics() -> bool:
    cfg = EvalConfig(N=10**5)
    ok = abs(eval_mzv((2,), cfg).value - math.pi**2 / 6) < 1e-6
    ok &= abs(eval_mzv((1, 2), cfg).value - eval_mzv((3,), cfg).value) < 1e-6
    prod = eval_mzv((2,), cfg).value * eval_mzv((3,), cfg).value
    ok &= abs(prod - eval_combination(stuffle_expand((2,), (3,)), cfg).value) < 1e-6
    return bool(ok)


CHECKS: dict[str, Callable[[], bool]] = {
    "bernoulli recurrence": check_bernoulli,
    "antipode identity": check_hopf,
    "telescoped sums and product expansion": check_word_identities,
    "depth-2 closed form = reduce": check_depth2_oracle,
    "depth-3 closed form = reduce": check_depth3_oracle,
    "weight/depth bound and trace replay": check_bounds_and_traces,
    "singularity classifier": check_classifier,
    "numeric constants and stuffle": check_numerics,
}


def run_selftest(out: TextIO = sys.stdout) -> bool:
    passed = failed = 0
    for name, check in CHECKS.items():
        try:
            ok = check()
        except Exception as e:  # report, keep going
            print(f"ERROR {name}: {e!r}", file=out)
            ok = False
        else:
            print(f"{'PASS' if ok else 'FAIL'}  {name}", file=out)
        passed += ok
        failed += not ok
    print(f"{passed} passed, {failed} failed", file=out)
    return failed == 0
