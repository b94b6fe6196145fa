"""Reduction of multiple zeta special values at regular integer points.

A point with a non-positive entry n_j = -m is rewritten as a rational
combination of depth r-1 points by the extended recurrence

    zeta_r(..., -m, ...) =
        - [j>1] 1/(m+1) zeta_{r-1}(..., n_{j-1}-m-1, n_{j+1}, ...)
        + [j<r] 1/(m+1) zeta_{r-1}(..., n_{j-1}, n_{j+1}-m-1, ...)
        + [j>1] sum_k C(m,k) zeta(-k) zeta_{r-1}(..., n_{j-1}-m+k, n_{j+1}, ...)
        - [j<r] sum_k C(m,k) zeta(-k) zeta_{r-1}(..., n_{j-1}, n_{j+1}-m+k, ...)
        + [j=1<r] zeta(-m) zeta_{r-1}(n_2, ..., n_r)
        - [j<r] zeta_{r-1}(..., n_{j-1}, n_{j+1}-m, ...)

and recursion bottoms out at admissible indices (kept as symbols) and at
zeta(-k) (exact rationals).
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .arith import binomial, zeta_nonpositive
from .combination import MzvCombination, MzvIndex, check_mzv_index
from .errors import RegularityViolation, SingularInput
from .hopf import quasi_shuffle
from .index import IndexPoint, as_point, classify, positive_part_stats

__all__ = [
    "PivotStrategy",
    "TraceTerm",
    "TraceStep",
    "ReductionTrace",
    "Reducer",
    "recurrence_terms",
    "reduce",
    "reduce_with_trace",
    "bound_check",
    "stuffle_expand",
    "parse_pivot",
]

PivotStrategy = Union[str, int]  # "rightmost", "leftmost" or a 1-based position
STRATEGIES = ("rightmost", "leftmost")


def parse_pivot(text: str) -> PivotStrategy:
    """Parse ``leftmost``, ``rightmost`` or ``j=K``."""
    if text in STRATEGIES:
        return text
    if text.startswith("j="):
        return int(text[2:])
    raise ValueError(f"unknown pivot strategy {text!r}")


def choose_pivot(p: IndexPoint, strategy: PivotStrategy) -> int:
    candidates = [j for j, n in enumerate(p, 1) if n <= 0]
    if not candidates:
        raise ValueError(f"{p} has no non-positive entry to pivot on")
    if strategy == "rightmost":
        return candidates[-1]
    if strategy == "leftmost":
        return candidates[0]
    if isinstance(strategy, int):
        if strategy not in candidates:
            raise ValueError(f"pivot j={strategy} is not a non-positive entry of {p}")
        return strategy
    raise ValueError(f"unknown pivot strategy {strategy!r}")


@dataclass(frozen=True)
class TraceTerm:
    label: str
    child: IndexPoint
    multiplier: Fraction


@dataclass(frozen=True)
class TraceStep:
    point: IndexPoint
    pivot: int
    terms: tuple[TraceTerm, ...]

    def to_json_obj(self) -> dict:
        return {
            "point": list(self.point),
            "pivot": self.pivot,
            "terms": [
                {"label": t.label, "child": list(t.child), "multiplier": str(t.multiplier)}
                for t in self.terms
            ],
        }


@dataclass
class ReductionTrace:
    """Recurrence applications reachable from ``root``, keyed by point.

    Points with no step are terminals: an admissible index or a depth-1
    non-positive argument.
    """

    root: IndexPoint
    steps: dict[IndexPoint, TraceStep] = field(default_factory=dict)

    def replay(self) -> MzvCombination:
        memo: dict[IndexPoint, MzvCombination] = {}

        def value(p: IndexPoint) -> MzvCombination:
            if p not in memo:
                step = self.steps.get(p)
                if step is None:
                    memo[p] = terminal_value(p)
                else:
                    acc = MzvCombination()
                    for t in step.terms:
                        acc.iadd_scaled(value(t.child), t.multiplier)
                    memo[p] = acc
            return memo[p]

        return value(self.root)

    def to_json_obj(self) -> dict:
        return {
            "root": list(self.root),
            "steps": [self.steps[p].to_json_obj() for p in sorted(self.steps)],
        }


def is_terminal(p: IndexPoint) -> bool:
    return len(p) == 1 or all(n > 0 for n in p)


def terminal_value(p: IndexPoint) -> MzvCombination:
    if len(p) == 1 and p[0] <= 0:
        return MzvCombination.constant(zeta_nonpositive(-p[0]))
    return MzvCombination.symbol(p)


def recurrence_terms(p: Sequence[int], j: int) -> list[TraceTerm]:
    """Children and multipliers of one recurrence step at pivot j (1-based).

    Zero-multiplier terms are kept here; callers must prune them before
    recursing, since some of those children sit on the singular set.
    """
    p = tuple(p)
    r = len(p)
    m = -p[j - 1]
    if r < 2 or m < 0:
        raise ValueError(f"cannot pivot {p} at j={j}")
    zk = [zeta_nonpositive(k) for k in range(m + 1)]
    terms: list[TraceTerm] = []
    if j > 1:
        head, prev, rest = p[: j - 2], p[j - 2], p[j:]
        terms.append(TraceTerm("left-boundary", head + (prev - m - 1,) + rest, Fraction(-1, m + 1)))
        for k in range(m + 1):
            terms.append(
                TraceTerm(f"left-sum k={k}", head + (prev - m + k,) + rest, binomial(m, k) * zk[k])
            )
    if j < r:
        head, nxt, rest = p[: j - 1], p[j], p[j + 1:]
        terms.append(TraceTerm("right-boundary", head + (nxt - m - 1,) + rest, Fraction(1, m + 1)))
        for k in range(m + 1):
            terms.append(
                TraceTerm(f"right-sum k={k}", head + (nxt - m + k,) + rest, -binomial(m, k) * zk[k])
            )
        if j == 1:
            terms.append(TraceTerm("product", p[1:], zk[m]))
        terms.append(TraceTerm("merge", head + (nxt - m,) + rest, Fraction(-1)))
    return terms


class Reducer:
    """Memoizing reduction engine; the memo is guarded by a lock."""

    def __init__(self) -> None:
        self._values: dict[tuple[IndexPoint, PivotStrategy], MzvCombination] = {}
        self._steps: dict[tuple[IndexPoint, PivotStrategy], TraceStep] = {}
        self._lock = threading.RLock()

    def clear(self) -> None:
        with self._lock:
            self._values.clear()
            self._steps.clear()

    def reduce(self, p: Iterable[int], strategy: PivotStrategy = "rightmost") -> MzvCombination:
        p = as_point(p)
        verdict = classify(p)
        if not verdict:
            raise SingularInput(p, verdict)
        with self._lock:
            return self._reduce(p, strategy, (p,)).copy()

    def reduce_with_trace(
        self, p: Iterable[int], strategy: PivotStrategy = "rightmost"
    ) -> tuple[MzvCombination, ReductionTrace]:
        p = as_point(p)
        combo = self.reduce(p, strategy)
        trace = ReductionTrace(p)
        stack = [(p, strategy)]
        with self._lock:
            while stack:
                q, strat = stack.pop()
                step = self._steps.get((q, strat))
                if step is None or q in trace.steps:
                    continue
                trace.steps[q] = step
                for t in step.terms:
                    stack.append((t.child, _child_strategy(strat)))
        return combo, trace

    def _reduce(self, p: IndexPoint, strategy: PivotStrategy, path: tuple) -> MzvCombination:
        key = (p, strategy)
        cached = self._values.get(key)
        if cached is not None:
            return cached
        if is_terminal(p):
            out = terminal_value(p)
            self._values[key] = out
            return out
        j = choose_pivot(p, strategy)
        live = tuple(t for t in recurrence_terms(p, j) if t.multiplier)
        step = TraceStep(p, j, live)
        out = MzvCombination()
        for t in live:
            verdict = classify(t.child)
            if not verdict:
                partial = ReductionTrace(path[0], {q: s for (q, _), s in self._steps.items() if q in path})
                partial.steps[p] = step
                raise RegularityViolation(p, t.child, verdict, partial)
            sub = self._reduce(t.child, _child_strategy(strategy), path + (t.child,))
            out.iadd_scaled(sub, t.multiplier)
        self._steps[key] = step
        self._values[key] = out
        return out


def _child_strategy(strategy: PivotStrategy) -> PivotStrategy:
    # an explicit pivot only applies at the top level
    return strategy if strategy in STRATEGIES else "rightmost"


_DEFAULT = Reducer()


def reduce(p: Iterable[int], strategy: PivotStrategy = "rightmost") -> MzvCombination:
    """Reduce zeta_r(p) at a regular integer point to a combination of MZVs."""
    return _DEFAULT.reduce(p, strategy)


def reduce_with_trace(
    p: Iterable[int], strategy: PivotStrategy = "rightmost"
) -> tuple[MzvCombination, ReductionTrace]:
    return _DEFAULT.reduce_with_trace(p, strategy)


def bound_check(p: Sequence[int], c: MzvCombination) -> bool:
    """True iff every symbol in c has depth <= dp(p+) and weight <= wt(p+)."""
    d, w = positive_part_stats(p)
    return all(len(index) <= d and sum(index) <= w for index in c.terms)


def stuffle_expand(a: Iterable[int], b: Iterable[int]) -> MzvCombination:
    """zeta(a) * zeta(b) written as a sum of MZVs via the harmonic product."""
    a, b = check_mzv_index(a), check_mzv_index(b)
    return MzvCombination(quasi_shuffle(a, b))
