import json
import math
import random
from fractions import Fraction as F

import pytest

from mzr.combination import MzvCombination
from mzr.numerics import EvalConfig, NumericCache, eval_combination, eval_mzv, eval_point
from mzr.reduce import stuffle_expand

BIG = EvalConfig(N=10**6)
SMALL = EvalConfig(N=10**5)
ZETA3 = 1.2020569031595942
ZETA4 = math.pi**4 / 90


def test_depth1_and_euler():
    assert abs(eval_mzv((2,), BIG).value - math.pi**2 / 6) < 1e-6
    assert abs(eval_mzv((1, 2), BIG).value - ZETA3) < 1e-6
    assert abs(eval_mzv((1, 2), BIG).value - eval_mzv((3,), BIG).value) < 1e-6
    assert abs(eval_mzv((2, 2), BIG).value - math.pi**4 / 120) < 1e-6


def test_high_accuracy_of_tail_model():
    # sum formulas: zeta(1,1,2) = zeta(4), zeta(1,3) = zeta(4)/4
    assert abs(eval_mzv((1, 1, 2), BIG).value - ZETA4) < 1e-10
    assert abs(eval_mzv((1, 3), BIG).value - ZETA4 / 4) < 1e-11


def test_empty_index_is_one():
    v = eval_mzv((), BIG)
    assert v.value == 1.0 and v.error_bound == 0.0


def test_rejects_non_admissible():
    with pytest.raises(ValueError):
        eval_mzv((2, 1), BIG)


def test_truncation_floor():
    with pytest.raises(ValueError):
        EvalConfig(N=99)


def test_combination_examples():
    assert eval_combination(MzvCombination(), BIG).value == 0.0
    assert eval_combination(MzvCombination({(): F(1, 120)}), BIG).value == 1 / 120
    c = MzvCombination({(2,): F(1, 3), (3,): F(-3, 2), (4,): F(-1, 6)})
    expected = math.pi**2 / 18 - 1.5 * ZETA3 - ZETA4 / 6
    assert abs(eval_combination(c, BIG).value - expected) < 1e-5
    assert round(expected, 3) == -1.435


def test_point_examples():
    assert abs(eval_point((0, -3), cfg=BIG).value + 1 / 120) < 1e-15
    assert abs(eval_point((2, -3), cfg=BIG).value - 0.1803744) < 1e-6
    assert abs(eval_point((1, 2), cfg=BIG).value - 1.2020569) < 1e-6


def _admissible(rng, max_weight):
    while True:
        d = rng.randint(1, 3)
        idx = tuple(rng.randint(1, 3) for _ in range(d - 1)) + (rng.randint(2, 4),)
        if sum(idx) <= max_weight:
            return idx


def test_stuffle_numeric_identity():
    rng = random.Random(7)
    for _ in range(20):
        a, b = _admissible(rng, 4), _admissible(rng, 4)
        lhs = eval_mzv(a, SMALL).value * eval_mzv(b, SMALL).value
        rhs = eval_combination(stuffle_expand(a, b), SMALL).value
        assert abs(lhs - rhs) < 1e-6, (a, b)


@pytest.mark.parametrize("index,exact", [((2,), math.pi**2 / 6), ((3,), ZETA3), ((1, 2), ZETA3),
                                         ((2, 2), math.pi**4 / 120), ((1, 1, 2), ZETA4)])
def test_error_bound_is_honest(index, exact):
    for N in (100, 1000, 10**5):
        for corrected in (True, False):
            v = eval_mzv(index, EvalConfig(N=N, tail_correction=corrected))
            assert abs(v.value - exact) <= v.error_bound + 1e-14, (index, N, corrected)


def test_convergence_in_N():
    lo = eval_mzv((1, 2), EvalConfig(N=10**5))
    hi = eval_mzv((1, 2), EvalConfig(N=10**6))
    assert abs(lo.value - hi.value) <= lo.error_bound + hi.error_bound
    assert hi.error_bound < lo.error_bound


def test_cache_round_trip(tmp_path):
    path = tmp_path / "cache.json"
    cache = NumericCache(path)
    v = eval_mzv((2, 3), SMALL, cache)
    eval_mzv((2, 3), EvalConfig(N=10**5, tail_correction=False), cache)
    cache.save()
    raw = json.loads(path.read_text())
    assert len(raw) == 2
    again = NumericCache(path)
    assert len(again) == 2
    assert again.get((2, 3), SMALL) == v
    assert again.get((2, 3), BIG) is None
