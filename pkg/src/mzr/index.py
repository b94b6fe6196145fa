"""Integer argument tuples: singularity classification and admissibility."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

__all__ = [
    "IndexPoint",
    "RegularityVerdict",
    "classify",
    "is_regular",
    "is_admissible_mzv",
    "positive_part_stats",
]

IndexPoint = tuple[int, ...]


def as_point(entries: Iterable[int]) -> IndexPoint:
    p = tuple(int(n) for n in entries)
    if not p:
        raise ValueError("an index point needs at least one entry")
    return p


@dataclass(frozen=True)
class RegularityVerdict:
    regular: bool
    condition: Optional[str] = None  # "a", "b" or "c"
    k: Optional[int] = None  # number of trailing entries in the violated sum

    def to_json(self) -> dict:
        if self.regular:
            return {"status": "regular"}
        return {"status": "singular", "condition": self.condition, "k": self.k}

    def describe(self) -> str:
        if self.regular:
            return "regular"
        return f"condition ({self.condition}), k={self.k}"

    def __bool__(self) -> bool:
        return self.regular


REGULAR = RegularityVerdict(True)


def classify(p: Sequence[int]) -> RegularityVerdict:
    """Locate p relative to the singular set of the multiple zeta function.

    The singular set is
        (a) n_r = 1,
        (b) n_{r-1} + n_r in {2, 1, 0, -2, -4, ...},
        (c) n_{r-k+1} + ... + n_r <= k for some 3 <= k <= r.
    The first violated condition is reported, scanning (a), (b), (c) with k
    increasing.
    """
    p = as_point(p)
    r = len(p)
    if p[-1] == 1:
        return RegularityVerdict(False, "a", 1)
    if r >= 2:
        s = p[-2] + p[-1]
        if s in (0, 1, 2) or (s < 0 and s % 2 == 0):
            return RegularityVerdict(False, "b", 2)
    s = p[-1] + (p[-2] if r >= 2 else 0)
    for k in range(3, r + 1):
        s += p[-k]
        if s <= k:
            return RegularityVerdict(False, "c", k)
    return REGULAR


def is_regular(p: Sequence[int]) -> bool:
    return classify(p).regular


def is_admissible_mzv(p: Sequence[int]) -> bool:
    p = tuple(p)
    return bool(p) and all(n >= 1 for n in p) and p[-1] >= 2


def positive_part_stats(p: Sequence[int]) -> tuple[int, int]:
    """(depth, weight) of the strictly positive entries of p."""
    pos = [n for n in p if n > 0]
    return len(pos), sum(pos)
