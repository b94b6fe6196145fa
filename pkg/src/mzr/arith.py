"""Exact rational arithmetic helpers: Bernoulli numbers, binomials, zeta(-n)."""
from __future__ import annotations

import math
import threading
from fractions import Fraction

__all__ = [
    "Rational",
    "BernoulliTable",
    "bernoulli",
    "binomial",
    "zeta_nonpositive",
    "format_rational",
    "parse_rational",
]

Rational = Fraction


class BernoulliTable:
    """Monotone, lock-guarded cache of B_0, B_1, ... with B_1 = -1/2."""

    def __init__(self) -> None:
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"Bernoulli index must be non-negative, got {n}")
        if n >= len(self._values):
            self._extend(n)
        return self._values[n]

    def _extend(self, n: int) -> None:
        with self._lock:
            values = self._values
            for m in range(len(values), n + 1):
                if m >= 3 and m % 2:
                    values.append(Fraction(0))
                    continue
                # sum_{k=0}^{m} C(m+1, k) B_k = 0
                s = sum(math.comb(m + 1, k) * values[k] for k in range(m))
                values.append(-s / (m + 1))


_TABLE = BernoulliTable()


def bernoulli(n: int) -> Fraction:
    """Return B_n from the generating function t/(e^t - 1), so B_1 = -1/2."""
    return _TABLE[n]


def binomial(n: int, k: int) -> Fraction:
    if n < 0 or k < 0:
        raise ValueError(f"binomial({n}, {k}): arguments must be non-negative")
    if k > n:
        raise ValueError(f"binomial({n}, {k}): k exceeds n")
    return Fraction(math.comb(n, k))


def zeta_nonpositive(n: int) -> Fraction:
    """Value of the Riemann zeta function at -n for n >= 0.

    zeta(0) is pinned to -1/2. Plugging B_1 = -1/2 into -B_{n+1}/(n+1)
    would give +1/2 there, which is the wrong analytic value.
    """
    if n < 0:
        raise ValueError(f"zeta_nonpositive expects n >= 0, got {n}")
    if n == 0:
        return Fraction(-1, 2)
    return -bernoulli(n + 1) / (n + 1)


def format_rational(q: Fraction | int) -> str:
    """Render as "p/q" in lowest terms, or "p" for integers."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)
