"""Non-unital free product of m copies of C(S^1).

A word is a tuple of letters ``(x, k)`` meaning u_x^k, with adjacent letters
from distinct factors.  ``(x, 0)`` is the local unit 1_x; it is a genuine
letter and is never removed from a word.  There is no global unit.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ValidationError
from .core import WordAlgebra, WordElement

Letter = tuple[int, int]


@dataclass(frozen=True)
class FreeCircleProduct(WordAlgebra):
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValidationError("free product needs at least one factor")

    @property
    def tag(self) -> str:
        return f"freeword[{self.m}]"

    def mul_words(self, w1: tuple[Letter, ...], w2: tuple[Letter, ...]):
        (x1, k1), (x2, k2) = w1[-1], w2[0]
        if x1 != x2:
            return ((w1 + w2, 1),)
        return ((w1[:-1] + ((x1, k1 + k2),) + w2[1:], 1),)

    def adjoint_word(self, w: tuple[Letter, ...]):
        return ((tuple((x, -k) for x, k in reversed(w)), 1),)

    def format_word(self, w: tuple[Letter, ...]) -> str:
        out = []
        for x, k in w:
            out.append(f"1_{x}" if k == 0 else (f"u_{x}" if k == 1 else f"u_{x}^{k}"))
        return "·".join(out)

    def generator(self, x: int) -> WordElement:
        if not 1 <= x <= self.m:
            raise ValidationError(f"factor label {x} outside 1..{self.m}")
        return self.word(((x, 1),))

    def local_unit(self, x: int) -> WordElement:
        if not 1 <= x <= self.m:
            raise ValidationError(f"factor label {x} outside 1..{self.m}")
        return self.word(((x, 0),))


def free_word_generator(m: int, x: int) -> WordElement:
    return FreeCircleProduct(m).generator(x)


def is_alternating(word: tuple[Letter, ...]) -> bool:
    return len(word) > 0 and all(a[0] != b[0] for a, b in zip(word, word[1:]))
