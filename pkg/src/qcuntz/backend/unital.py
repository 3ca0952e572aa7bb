"""Unital free products of finite-dimensional or Laurent-type factors.

Each factor has a unit and a fixed complement of the scalars.  Words
alternate between factors and use only complement letters; the empty word
is the unit.  Multiplying two words merges the boundary letters with the
factor multiplication, then the scalar part of that product is spliced out
and the merge repeats one level further in.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Hashable

import numpy as np

from ..errors import ValidationError
from .core import WordAlgebra, WordElement, accumulate


class Factor:
    """A unital factor given by its multiplication on complement letters."""

    name = "factor"

    def check_letter(self, letter: Hashable) -> None:
        raise NotImplementedError

    def multiply(self, l1, l2) -> tuple[Any, dict]:
        """Return (scalar part, {complement letter: coefficient})."""
        raise NotImplementedError

    def adjoint(self, letter) -> dict:
        raise NotImplementedError

    def format(self, letter) -> str:
        return repr(letter)


@dataclass(frozen=True)
class MatrixFactor(Factor):
    """M_N with complement basis {e_ij : (i, j) != (N, N)}.

    e_NN is rewritten as unit - sum_{i<N} e_ii.
    """

    n: int

    @property
    def name(self) -> str:
        return f"M{self.n}"

    def check_letter(self, letter) -> None:
        i, j = letter
        if not (1 <= i <= self.n and 1 <= j <= self.n) or (i, j) == (self.n, self.n):
            raise ValidationError(f"{letter} is not a complement letter of M_{self.n}")

    def unit_decomposition(self, i: int, j: int) -> tuple[int, dict]:
        if (i, j) == (self.n, self.n):
            return 1, {(k, k): -1 for k in range(1, self.n)}
        return 0, {(i, j): 1}

    def multiply(self, l1, l2):
        (i, j), (k, l) = l1, l2
        if j != k:
            return 0, {}
        return self.unit_decomposition(i, l)

    def adjoint(self, letter) -> dict:
        i, j = letter
        return {(j, i): 1}

    def format(self, letter) -> str:
        return f"e{letter[0]}{letter[1]}"


@dataclass(frozen=True)
class LaurentFactor(Factor):
    """C(S^1) ⊕ C with unit (1, 1) and complement letters k = (z^k, 0)."""

    @property
    def name(self) -> str:
        return "L"

    def check_letter(self, letter) -> None:
        if not isinstance(letter, (int, np.integer)):
            raise ValidationError(f"{letter!r} is not a Laurent letter")

    def multiply(self, l1, l2):
        return 0, {l1 + l2: 1}

    def adjoint(self, letter) -> dict:
        return {-letter: 1}

    def format(self, letter) -> str:
        return "S" if letter == 1 else ("S*" if letter == -1 else f"(z^{letter},0)")


@dataclass(frozen=True)
class UnitalFreeProduct(WordAlgebra):
    factors: tuple

    @property
    def tag(self) -> str:
        return "unital[" + "*".join(f.name for f in self.factors) + "]"

    def _mul_into(self, out: dict, w1: tuple, w2: tuple, coeff) -> None:
        if not w1 or not w2 or w1[-1][0] != w2[0][0]:
            accumulate(out, w1 + w2, coeff)
            return
        f = w1[-1][0]
        scalar, parts = self.factors[f].multiply(w1[-1][1], w2[0][1])
        for letter, c in parts.items():
            accumulate(out, w1[:-1] + ((f, letter),) + w2[1:], coeff * c)
        if scalar != 0:
            self._mul_into(out, w1[:-1], w2[1:], coeff * scalar)

    def mul_words(self, w1, w2):
        out: dict = {}
        self._mul_into(out, w1, w2, 1)
        return out.items()

    def adjoint_word(self, w):
        result = {(): 1}
        for f, letter in reversed(w):
            step = {((f, l),): c for l, c in self.factors[f].adjoint(letter).items()}
            nxt: dict = {}
            for a, ca in result.items():
                for b, cb in step.items():
                    for wd, s in self.mul_words(a, b):
                        accumulate(nxt, wd, ca * cb * s)
            result = nxt
        return result.items()

    def unit_word(self):
        return ()

    def format_word(self, w) -> str:
        if not w:
            return "1"
        return "·".join(self.factors[f].format(l) for f, l in w)

    def letter(self, f: int, letter, coeff=1) -> WordElement:
        self.factors[f].check_letter(letter)
        return self.word(((f, letter),), coeff)

    def from_parts(self, f: int, scalar, parts: dict) -> WordElement:
        terms = {((f, l),): c for l, c in parts.items()}
        if scalar != 0:
            terms[()] = scalar
        return self.element(terms)

    def matrix_unit(self, f: int, i: int, j: int) -> WordElement:
        fac = self.factors[f]
        if not isinstance(fac, MatrixFactor):
            raise ValidationError(f"factor {f} is not a matrix factor")
        if not (1 <= i <= fac.n and 1 <= j <= fac.n):
            raise ValidationError(f"matrix unit ({i},{j}) outside M_{fac.n}")
        return self.from_parts(f, *fac.unit_decomposition(i, j))

    def from_matrix(self, f: int, m: np.ndarray) -> WordElement:
        """Embed sum_ij m_ij e_ij from the matrix factor ``f``."""
        out = self.zero()
        n = self.factors[f].n
        for i in range(n):
            for j in range(n):
                if m[i, j] != 0:
                    out = out + self.matrix_unit(f, i + 1, j + 1) * complex(m[i, j])
        return out


def amplification_algebra(n: int) -> UnitalFreeProduct:
    """M_N *_1 (C(S^1) ⊕ C); factor 0 is the matrix factor."""
    return UnitalFreeProduct((MatrixFactor(n), LaurentFactor()))
