"""Rational linear combinations of multiple zeta values."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .arith import format_rational
from .errors import NotAdmissible

__all__ = ["MzvIndex", "MzvCombination", "check_mzv_index"]

MzvIndex = tuple[int, ...]


def check_mzv_index(index: Iterable[int]) -> MzvIndex:
    """Validate an admissible index; the empty index stands for the unit."""
    index = tuple(int(m) for m in index)
    if index and (any(m < 1 for m in index) or index[-1] < 2):
        raise NotAdmissible(f"{index} is not an admissible index")
    return index


class MzvCombination:
    """Finite map from admissible indices to nonzero rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Iterable[int], Fraction | int] | None = None) -> None:
        self.terms: dict[MzvIndex, Fraction] = {}
        for index, c in (terms or {}).items():
            self.add_term(check_mzv_index(index), c)

    @classmethod
    def constant(cls, c: Fraction | int) -> "MzvCombination":
        return cls({(): c})

    @classmethod
    def symbol(cls, index: Iterable[int]) -> "MzvCombination":
        return cls({tuple(index): 1})

    def add_term(self, index: MzvIndex, c: Fraction | int) -> None:
        v = self.terms.get(index, 0) + c
        if v:
            self.terms[index] = Fraction(v)
        else:
            self.terms.pop(index, None)

    def iadd_scaled(self, other: "MzvCombination", c: Fraction | int = 1) -> "MzvCombination":
        """In-place self += c * other."""
        if c:
            for index, v in other.terms.items():
                self.add_term(index, c * v)
        return self

    def __add__(self, other: "MzvCombination") -> "MzvCombination":
        return self.copy().iadd_scaled(other)

    def __sub__(self, other: "MzvCombination") -> "MzvCombination":
        return self.copy().iadd_scaled(other, -1)

    def __neg__(self) -> "MzvCombination":
        return self.scaled(-1)

    def scaled(self, c: Fraction | int) -> "MzvCombination":
        return MzvCombination().iadd_scaled(self, c)

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scaled(c)
        return NotImplemented

    __rmul__ = __mul__

    def copy(self) -> "MzvCombination":
        out = MzvCombination()
        out.terms = dict(self.terms)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MzvCombination):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[MzvIndex, Fraction]]:
        return iter(self.items())

    def items(self) -> list[tuple[MzvIndex, Fraction]]:
        # lexicographic on entries; the empty index sorts first
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        return f"MzvCombination({self.to_plain()})"

    # --- serialization ----------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"index": list(index), "coeff": format_rational(c)}
                for index, c in self.items()
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "MzvCombination":
        out = cls()
        for term in obj["terms"]:
            out.add_term(check_mzv_index(term["index"]), Fraction(term["coeff"]))
        return out

    @classmethod
    def from_json(cls, text: str) -> "MzvCombination":
        return cls.from_json_obj(json.loads(text))

    def to_plain(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for index, c in self.items():
            if not index:
                parts.append(format_rational(c))
                continue
            sym = "zeta(" + ",".join(map(str, index)) + ")"
            if c == 1:
                parts.append(sym)
            elif c == -1:
                parts.append("-" + sym)
            else:
                parts.append(f"{format_rational(c)}*{sym}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_latex(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for i, (index, c) in enumerate(self.items()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if a.denominator == 1:
                mag = str(a.numerator)
            else:
                mag = f"\\frac{{{a.numerator}}}{{{a.denominator}}}"
            if index:
                if a == 1:
                    mag = ""
                mag += "\\zeta(" + ",".join(map(str, index)) + ")"
            if i == 0:
                out = ("-" if sign == "-" else "") + mag
            else:
                out += f" {sign} {mag}"
        return out
