"""Explicit formulas for zeta_2 and zeta_3 at regular integer points.

These are written out case by case, sign pattern by sign pattern, and are
kept independent of the recursive engine in ``reduce``.  Every quotient
B_{k+1}/(k+1) of the classical formulas is taken as -zeta(-k); with that
reading zeta(0) = -1/2 enters through k = 0.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .arith import zeta_nonpositive
from .combination import MzvCombination
from .errors import SingularInput
from .index import classify

__all__ = ["closed_form_depth2", "closed_form_depth3"]


def beta(k: int) -> Fraction:
    """B_{k+1}/(k+1), read as -zeta(-k)."""
    return -zeta_nonpositive(k)


def zeta1(n: int) -> MzvCombination:
    if n <= 0:
        return MzvCombination.constant(zeta_nonpositive(-n))
    if n == 1:
        raise SingularInput((1,), classify((1,)))
    return MzvCombination.symbol((n,))


class _Acc:
    """Accumulator that never evaluates a term whose coefficient is zero."""

    def __init__(self) -> None:
        self.out = MzvCombination()

    def add(self, coeff, fn, *args) -> None:
        if coeff:
            self.out.iadd_scaled(fn(*args), coeff)


def _check(p) -> None:
    verdict = classify(p)
    if not verdict:
        raise SingularInput(p, verdict)


def closed_form_depth2(n1: int, n2: int) -> MzvCombination:
    _check((n1, n2))
    acc = _Acc()
    z = zeta1
    if n1 >= 1 and n2 >= 2:
        return MzvCombination.symbol((n1, n2))
    if n1 >= 1:  # n2 <= 0
        m = -n2
        acc.add(Fraction(-1, m + 1), z, n1 + n2 - 1)
        for k in range(m + 1):
            acc.add(-comb(m, k) * beta(k), z, n1 + n2 + k)
    elif n2 >= 2:  # n1 <= 0
        m = -n1
        acc.add(Fraction(1, m + 1), z, n1 + n2 - 1)
        for k in range(m + 1):
            acc.add(comb(m, k) * beta(k), z, n1 + n2 + k)
        acc.add(zeta_nonpositive(m), z, n2)
        acc.add(-1, z, n1 + n2)
    elif n1 * n2 != 0:  # both negative
        acc.add(Fraction(-1, 2), z, n1 + n2)
    elif n1 == 0:
        # zeta_2(0, s) = zeta(s-1) - zeta(s); zeta(n2-1) vanishes for odd n2 < 0
        acc.add(-1, z, n2)
    else:  # n2 == 0
        acc.add(Fraction(-1, 2), z, n1)
    return acc.out


def closed_form_depth3(n1: int, n2: int, n3: int) -> MzvCombination:
    _check((n1, n2, n3))
    acc = _Acc()
    z, z2 = zeta1, closed_form_depth2
    N = n1 + n2 + n3

    if n1 >= 1 and n2 >= 1 and n3 >= 2:  # (i)
        return MzvCombination.symbol((n1, n2, n3))

    if n1 >= 1 and n2 >= 1:  # (ii) n3 <= 0
        m = -n3
        acc.add(Fraction(-1, m + 1), z2, n1, n2 + n3 - 1)
        for k in range(m + 1):
            acc.add(-comb(m, k) * beta(k), z2, n1, n2 + n3 + k)
        return acc.out

    if n1 >= 1 and n3 >= 2:  # (iii) n2 <= 0
        m = -n2
        c = Fraction(-1, m + 1)
        acc.add(c, z2, n1 + n2 - 1, n3)
        acc.add(-c, z2, n1, n2 + n3 - 1)
        for k in range(m + 1):
            ck = -comb(m, k) * beta(k)
            acc.add(ck, z2, n1 + n2 + k, n3)
            acc.add(-ck, z2, n1, n2 + n3 + k)
        acc.add(-1, z2, n1, n2 + n3)
        return acc.out

    if n2 >= 1 and n3 >= 2:  # (iv) n1 <= 0
        m = -n1
        acc.add(Fraction(1, m + 1), z2, n1 + n2 - 1, n3)
        for k in range(m + 1):
            acc.add(comb(m, k) * beta(k), z2, n1 + n2 + k, n3)
        acc.add(-beta(m), z2, n2, n3)
        acc.add(-1, z2, n1 + n2, n3)
        return acc.out

    if n1 >= 1:  # (v) n2 <= 0, n3 <= 0
        m, t = -n3, -n2 - n3
        acc.add(Fraction(1, (m + 1) * (t + 2)), z, N - 2)
        for l in range(t + 2):
            acc.add(Fraction(comb(t + 1, l), m + 1) * beta(l), z, N - 1 + l)
        for k in range(m + 1):
            acc.add(Fraction(comb(m, k), t - k + 1) * beta(k), z, N - 1 + k)
            for l in range(t - k + 1):
                acc.add(comb(m, k) * comb(t - k, l) * beta(k) * beta(l), z, N + k + l)
        return acc.out

    if n2 >= 1:  # (vi) n1 <= 0, n3 <= 0
        a, m = -n1, -n3
        acc.add(Fraction(-1, (m + 1) * (a + 1)), z, N - 2)
        acc.add(Fraction(1, m + 1), z, N - 1)
        for l in range(a + 1):
            acc.add(Fraction(-comb(a, l), m + 1) * beta(l), z, N - 1 + l)
        for k in range(m + 1):
            acc.add(Fraction(-comb(m, k), a + 1) * beta(k), z, N + k - 1)
            acc.add(comb(m, k) * beta(k), z, N + k)
            for l in range(a + 1):
                acc.add(-comb(m, k) * comb(a, l) * beta(l) * beta(k), z, N + k + l)
        # product term zeta(n1) * zeta_2(n2, n3)
        acc.add(-beta(a), z2, n2, n3)
        return acc.out

    if n3 >= 2:  # (vii) n1 <= 0, n2 <= 0
        a, b = -n1, -n2
        acc.add(Fraction(1, (a + 1) * (a + b + 2)), z, N - 2)
        acc.add(-beta(a) * Fraction(1, b + 1), z, n2 + n3 - 1)
        acc.add(-(Fraction(1, a + b + 1) + Fraction(1, a + 1)), z, N - 1)
        acc.add(beta(a), z, n2 + n3)
        acc.add(beta(a + b) + beta(a) * beta(b) - Fraction(1, a + 1) * beta(a + b + 1), z, n3)
        acc.add(1, z, N)
        for l in range(a + b + 2):
            acc.add(Fraction(comb(a + b + 1, l), a + 1) * beta(l), z, N - 1 + l)
        for k in range(a + 1):
            bk = comb(a, k) * beta(k)
            acc.add(bk * Fraction(1, a + b - k + 1), z, N - 1 + k)
            for l in range(a + b - k + 1):
                acc.add(bk * comb(a + b - k, l) * beta(l), z, N + k + l)
            acc.add(-bk * beta(a + b - k), z, n3)
            acc.add(-bk, z, N + k)
        for l in range(b + 1):
            acc.add(-beta(a) * comb(b, l) * beta(l), z, n2 + n3 + l)
        for l in range(a + b + 1):
            acc.add(-comb(a + b, l) * beta(l), z, N + l)
        return acc.out

    raise AssertionError(f"unreachable: {(n1, n2, n3)} passed the regularity check")
