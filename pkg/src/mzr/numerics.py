"""Floating-point evaluation of multiple zeta values and their combinations."""
from __future__ import annotations

import json
import math
import os
import threading
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Optional

import numpy as np

from .combination import MzvCombination, check_mzv_index
from .reduce import PivotStrategy, reduce

__all__ = [
    "EvalConfig",
    "NumericValue",
    "NumericCache",
    "eval_mzv",
    "eval_combination",
    "eval_point",
    "CACHE_ENV",
]

CACHE_ENV = "MZR_CACHE"


@dataclass(frozen=True)
class EvalConfig:
    N: int = 10**6
    tail_correction: bool = True

    def __post_init__(self) -> None:
        if self.N < 100:
            raise ValueError(f"truncation N must be at least 100, got {self.N}")


@dataclass(frozen=True)
class NumericValue:
    value: float
    error_bound: float

    def to_json_obj(self) -> dict:
        return asdict(self)


class NumericCache:
    """Thread-safe map (index, N) -> NumericValue, optionally backed by JSON.

    The file maps "i1,i2,...|N" to {"value": float, "bound": float}.
    """

    def __init__(self, path: Optional[os.PathLike | str] = None) -> None:
        self.path = Path(path) if path else None
        self._data: dict[str, NumericValue] = {}
        self._lock = threading.Lock()
        if self.path and self.path.exists():
            raw = json.loads(self.path.read_text(encoding="utf-8"))
            self._data = {k: NumericValue(v["value"], v["bound"]) for k, v in raw.items()}

    @staticmethod
    def key(index: tuple[int, ...], cfg: EvalConfig) -> str:
        k = ",".join(map(str, index)) + f"|{cfg.N}"
        return k if cfg.tail_correction else k + "|raw"

    def get(self, index, cfg: EvalConfig) -> Optional[NumericValue]:
        with self._lock:
            return self._data.get(self.key(index, cfg))

    def put(self, index, cfg: EvalConfig, v: NumericValue) -> None:
        with self._lock:
            self._data[self.key(index, cfg)] = v

    def __len__(self) -> int:
        return len(self._data)

    def save(self) -> None:
        if self.path is None:
            return
        with self._lock:
            payload = {k: {"value": v.value, "bound": v.error_bound} for k, v in sorted(self._data.items())}
        self.path.parent.mkdir(parents=True, exist_ok=True)
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        tmp.write_text(json.dumps(payload, indent=1), encoding="utf-8")
        tmp.replace(self.path)


_MEMORY_CACHE = NumericCache()


def _tail(index: tuple[int, ...], anchors: list[float], N: int) -> float:
    """Estimate sum_{n > N} P_{d-1}(n) n^{-m_d}.

    Beyond N each inner prefix sum is modelled as a polynomial in
    u = log(x / x0): an entry equal to 1 integrates the previous level,
    larger entries only add O(N^{1-m}) and are frozen at their value at N.
    """
    x0 = N + 0.5
    poly = [1.0]  # coefficients in u
    for m, anchor in zip(index[:-1], anchors):
        if m == 1:
            poly = [anchor] + [c / (q + 1) for q, c in enumerate(poly)]
        else:
            poly = [anchor]
    m = index[-1]
    # int_{x0}^inf u^q x^{-m} dx = q! x0^{1-m} / (m-1)^{q+1}
    scale = x0 ** (1 - m)
    return sum(c * math.factorial(q) * scale / (m - 1) ** (q + 1) for q, c in enumerate(poly))


def eval_mzv(
    index: Iterable[int],
    cfg: EvalConfig = EvalConfig(),
    cache: Optional[NumericCache] = None,
) -> NumericValue:
    """Evaluate zeta(m_1, ..., m_d) = sum_{0<n_1<...<n_d} prod n_i^{-m_i}.

    Uses nested prefix sums over n <= N (cost O(d N)) plus an estimate of
    the remaining tail.
    """
    index = check_mzv_index(index)
    if not index:
        return NumericValue(1.0, 0.0)
    cache = _MEMORY_CACHE if cache is None else cache
    hit = cache.get(index, cfg)
    if hit is not None:
        return hit

    N = cfg.N
    n = np.arange(1, N + 1, dtype=np.float64)
    prefix = np.ones(N)  # P_{t-1}(n): sum over n' < n at the previous level
    anchors: list[float] = []
    for m in index[:-1]:
        terms = prefix * n ** (-float(m))
        running = np.cumsum(terms)
        anchors.append(float(running[-1]))
        prefix = np.concatenate(([0.0], running[:-1]))
    last = prefix * n ** (-float(index[-1]))
    head = math.fsum(last[::-1])

    tail = _tail(index, anchors, N)
    value = head + tail if cfg.tail_correction else head
    result = NumericValue(value, 2.0 * abs(tail))
    cache.put(index, cfg, result)
    return result


def eval_combination(
    c: MzvCombination,
    cfg: EvalConfig = EvalConfig(),
    cache: Optional[NumericCache] = None,
) -> NumericValue:
    parts = []
    bound = 0.0
    for index, coeff in c.items():
        v = eval_mzv(index, cfg, cache)
        parts.append(float(coeff) * v.value)
        bound += abs(float(coeff)) * v.error_bound
    parts.sort(key=abs)
    return NumericValue(math.fsum(parts), bound)


def eval_point(
    p: Iterable[int],
    strategy: PivotStrategy = "rightmost",
    cfg: EvalConfig = EvalConfig(),
    cache: Optional[NumericCache] = None,
) -> NumericValue:
    return eval_combination(reduce(p, strategy), cfg, cache)
