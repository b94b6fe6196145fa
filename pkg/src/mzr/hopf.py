"""The harmonic (stuffle) algebra over words of formal linear forms.

Letters are non-negative integer combinations a_1 s_1 + a_2 s_2 + ... of
formal variables; words are finite sequences of letters; an ``HPoly`` is a
Q-linear combination of words.  The harmonic product, deconcatenation
coproduct and antipode make this a Hopf algebra, and the identity builders
at the bottom of the module produce expressions that must vanish (or agree)
in it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence, TypeVar

__all__ = [
    "LinearForm",
    "Word",
    "HPoly",
    "TensorPoly",
    "var",
    "word",
    "quasi_shuffle",
    "harmonic_product",
    "coproduct",
    "antipode",
    "f_map",
    "hopf_defect",
    "telescoped_word_sum",
    "prop_1_10_sides",
]

L = TypeVar("L")


@dataclass(frozen=True, order=True)
class LinearForm:
    """A nonzero element a_1 s_1 + ... + a_k s_k with a_i >= 0."""

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("a linear form needs at least one nonzero coefficient")
        for i, a in self.terms:
            if i < 1 or a < 1:
                raise ValueError(f"invalid term {a}*s{i}")
        if list(self.terms) != sorted(dict(self.terms).items()):
            raise ValueError("terms must be sorted with distinct variables")

    @classmethod
    def of(cls, coefficients: Mapping[int, int]) -> "LinearForm":
        return cls(tuple(sorted((i, a) for i, a in coefficients.items() if a)))

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self.terms)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        if not isinstance(other, LinearForm):
            return NotImplemented
        acc = dict(self.terms)
        for i, a in other.terms:
            acc[i] = acc.get(i, 0) + a
        return LinearForm.of(acc)

    def evaluate(self, values: Mapping[int, int]) -> int:
        return sum(a * values[i] for i, a in self.terms)

    def __str__(self) -> str:
        return "+".join(f"s{i}" if a == 1 else f"{a}s{i}" for i, a in self.terms)


def var(i: int, a: int = 1) -> LinearForm:
    """The letter a*s_i."""
    return LinearForm(((i, a),))


@dataclass(frozen=True, order=True)
class Word:
    letters: tuple[LinearForm, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[LinearForm]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item])
        return self.letters[item]

    def __add__(self, other: "Word") -> "Word":
        """Concatenation."""
        return Word(self.letters + other.letters)

    @property
    def weight(self) -> LinearForm:
        if not self.letters:
            raise ValueError("the empty word has no weight")
        total = self.letters[0]
        for u in self.letters[1:]:
            total = total + u
        return total

    def rev(self) -> "Word":
        return Word(self.letters[::-1])

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "(" + ", ".join(str(u) for u in self.letters) + ")"


def word(*letters: LinearForm) -> Word:
    return Word(tuple(letters))


ONE = Word()


def _sort_key(item):
    w = item[0]
    return (len(w), w) if isinstance(w, Word) else w


class HPoly:
    """Finite Q-linear combination of words, kept in canonical form.

    ``a * b`` is the harmonic product when both sides are HPoly and scaling
    when one side is a number.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Fraction | int] | None = None) -> None:
        self.terms: dict[Word, Fraction] = {}
        for w, c in (terms or {}).items():
            if c:
                self.terms[w] = Fraction(c)

    @classmethod
    def one(cls) -> "HPoly":
        return cls({ONE: 1})

    @classmethod
    def zero(cls) -> "HPoly":
        return cls()

    @classmethod
    def from_word(cls, w: Word | Sequence[LinearForm], c: Fraction | int = 1) -> "HPoly":
        if not isinstance(w, Word):
            w = Word(tuple(w))
        return cls({w: c})

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return sorted(self.terms.items(), key=_sort_key)

    def _accumulate(self, w: Word, c: Fraction | int) -> None:
        v = self.terms.get(w, 0) + c
        if v:
            self.terms[w] = Fraction(v)
        else:
            self.terms.pop(w, None)

    def __add__(self, other: "HPoly") -> "HPoly":
        out = HPoly(self.terms)
        for w, c in other.terms.items():
            out._accumulate(w, c)
        return out

    def __neg__(self) -> "HPoly":
        return HPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "HPoly") -> "HPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HPoly):
            return harmonic_product(self, other)
        if isinstance(other, (int, Fraction)):
            return HPoly({w: c * other for w, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def append(self, u: LinearForm) -> "HPoly":
        """Linear extension of w -> (w, u)."""
        return HPoly({w + Word((u,)): c for w, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == HPoly({ONE: other}).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"HPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items():
            coeff = "" if c == 1 else "-" if c == -1 else f"{c}*"
            parts.append(f"{coeff}{w}")
        return " + ".join(parts).replace("+ -", "- ")


class TensorPoly:
    """Finite Q-linear combination of pairs of words (elements of H ⊗ H)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[Word, Word], Fraction | int] | None = None) -> None:
        self.terms: dict[tuple[Word, Word], Fraction] = {
            k: Fraction(c) for k, c in (terms or {}).items() if c
        }

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0][0]), kv[0]))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TensorPoly) and self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"{'' if c == 1 else f'{c}*'}{a}⊗{b}" for (a, b), c in self.items()
        )

    __repr__ = __str__


# --- the harmonic product -------------------------------------------------

@lru_cache(maxsize=None)
def _qsh_add(a: tuple, b: tuple) -> tuple[tuple[tuple, int], ...]:
    return tuple(_quasi_shuffle(a, b).items())


def _quasi_shuffle(a: tuple, b: tuple) -> dict[tuple, int]:
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    *a0, u1 = a
    *b0, u2 = b
    a0, b0 = tuple(a0), tuple(b0)
    out: dict[tuple, int] = {}
    for prefix, last in (((a0, b), u1), ((a, b0), u2), ((a0, b0), u1 + u2)):
        for w, c in _qsh_add(*prefix):
            key = w + (last,)
            out[key] = out.get(key, 0) + c
    return out


def quasi_shuffle(a: Sequence[L], b: Sequence[L]) -> dict[tuple[L, ...], int]:
    """Harmonic product of two words over any additive alphabet.

    Follows the recursion on last letters:
    (w1,u1)*(w2,u2) = (w1*(w2,u2),u1) + ((w1,u1)*w2,u2) + (w1*w2,u1+u2).
    Works for LinearForm letters and for plain positive integers.
    """
    return dict(_qsh_add(tuple(a), tuple(b)))


def harmonic_product(a: HPoly, b: HPoly) -> HPoly:
    out = HPoly()
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            for letters, n in _qsh_add(w1.letters, w2.letters):
                out._accumulate(Word(letters), c1 * c2 * n)
    return out


# --- coproduct and antipode -----------------------------------------------

def coproduct(w: Word) -> TensorPoly:
    """Deconcatenation: one term w[:i] ⊗ w[i:] per cut position."""
    out: dict[tuple[Word, Word], int] = {}
    for i in range(len(w) + 1):
        key = (w[:i], w[i:])
        out[key] = out.get(key, 0) + 1
    return TensorPoly(out)


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Block lengths of every split of n >= 1 items into consecutive nonempty blocks."""
    for mask in range(1 << (n - 1)):
        sizes, run = [], 1
        for bit in range(n - 1):
            if mask >> bit & 1:
                sizes.append(run)
                run = 1
            else:
                run += 1
        sizes.append(run)
        yield tuple(sizes)


def _block_sums(w: Word) -> Iterator[Word]:
    for sizes in compositions(len(w)):
        pos, blocks = 0, []
        for size in sizes:
            blocks.append(w[pos:pos + size].weight)
            pos += size
        yield Word(tuple(reversed(blocks)))


def f_map(w: Word) -> HPoly:
    """Unsigned reversed block-sum map; f(1) = 1."""
    if not len(w):
        return HPoly.one()
    out = HPoly()
    for v in _block_sums(w):
        out._accumulate(v, 1)
    return out


def antipode(w: Word) -> HPoly:
    return f_map(w) * (-1) ** len(w)


def hopf_defect(w: Word) -> HPoly:
    """The composite  * ∘ (S ⊗ id) ∘ Δ  applied to w.

    Equals the counit image: 1 for the empty word and 0 otherwise.
    """
    out = HPoly()
    for (a1, a2), c in coproduct(w).terms.items():
        out = out + antipode(a1) * HPoly.from_word(a2) * c
    return out


# --- identity builders ----------------------------------------------------

def bullet_words(letters: Sequence[LinearForm]) -> Iterator[Word]:
    """All words obtained by joining consecutive letters with ',' or '+'."""
    n = len(letters)
    for mask in range(1 << max(n - 1, 0)):
        out = [letters[0]]
        for k in range(1, n):
            if mask >> (k - 1) & 1:
                out[-1] = out[-1] + letters[k]
            else:
                out.append(letters[k])
        yield Word(tuple(out))


def _as_letters(us: Iterable[LinearForm] | Word) -> tuple[LinearForm, ...]:
    return us.letters if isinstance(us, Word) else tuple(us)


def telescoped_word_sum(us: Sequence[LinearForm] | Word) -> HPoly:
    """(u_1,...,u_r) + sum_i (-1)^i sum_bullets (u_i • ... • u_1) * (u_{i+1},...,u_r).

    Vanishes identically in the harmonic algebra.
    """
    us = _as_letters(us)
    if not us:
        raise ValueError("need at least one letter")
    r = len(us)
    total = HPoly.from_word(us)
    for i in range(1, r + 1):
        tail = HPoly.from_word(us[i:])
        head = HPoly()
        for v in bullet_words(us[:i][::-1]):
            head._accumulate(v, 1)
        total = total + head * tail * (-1) ** i
    return total


def prop_1_10_sides(
    w: Word | Sequence[LinearForm], u: LinearForm, vs: Sequence[LinearForm] | Word
) -> tuple[HPoly, HPoly]:
    """Both sides of the expansion of (w, u) * (v_1, ..., v_n).

    The right side is
        (w,u,v_1,...,v_n) + (w,u+v_1,v_2,...,v_n)
        + sum_i (-1)^(i-1) sum_bullets ({w * (v_i • ... • v_1)}, u) * (v_{i+1},...,v_n).
    """
    w = w if isinstance(w, Word) else Word(tuple(w))
    vs = _as_letters(vs)
    if not vs:
        raise ValueError("need n >= 1")
    n = len(vs)
    left = HPoly.from_word(w + Word((u,))) * HPoly.from_word(vs)

    right = HPoly.from_word(w + Word((u,) + vs))
    right = right + HPoly.from_word(w + Word((u + vs[0],) + vs[1:]))
    base = HPoly.from_word(w)
    for i in range(1, n + 1):
        inner = HPoly()
        for v in bullet_words(vs[:i][::-1]):
            inner = inner + (base * HPoly.from_word(v)).append(u)
        right = right + inner * HPoly.from_word(vs[i:]) * (-1) ** (i - 1)
    return left, right
