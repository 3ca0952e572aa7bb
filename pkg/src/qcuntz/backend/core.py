"""Coefficient helpers and the generic word-indexed element.

A word backend stores an element as a finite map ``word -> coefficient``.
The algebra object supplies word multiplication, word adjoint, an optional
unit word and an optional normal form used by the zero test.  Coefficients
may be Python or numpy scalars, sympy expressions (exact mode) or square
numpy arrays (elements of ``backend ⊗ M_k``).
"""

from __future__ import annotations

import numbers
from typing import Any, Hashable, Iterable, Iterator

import numpy as np
import sympy

from ..errors import BackendMismatchError, NoUnitError

Word = Hashable


def is_scalar(c: Any) -> bool:
    return isinstance(c, (numbers.Number, np.number, sympy.Basic))


def cmul(a: Any, b: Any) -> Any:
    if isinstance(a, np.ndarray) and isinstance(b, np.ndarray):
        return a @ b
    return a * b


def cadj(c: Any) -> Any:
    if isinstance(c, np.ndarray):
        return c.conj().T
    if isinstance(c, sympy.Basic):
        return sympy.conjugate(c)
    return np.conj(c) if isinstance(c, np.number) else c.conjugate()


def cabs(c: Any) -> float:
    if isinstance(c, np.ndarray):
        return float(np.abs(c).max()) if c.size else 0.0
    if isinstance(c, sympy.Basic):
        return float(abs(complex(sympy.N(c, 30))))
    return float(abs(c))


def literal_zero(c: Any) -> bool:
    """Cheap zero test used to prune terms during arithmetic."""
    if isinstance(c, np.ndarray):
        return not c.any()
    if isinstance(c, sympy.Basic):
        return c.is_zero is True or c == 0
    return c == 0


def exact_zero(c: Any) -> bool:
    """Zero test that simplifies symbolic coefficients."""
    if isinstance(c, sympy.Basic):
        if c == 0:
            return True
        return sympy.simplify(sympy.expand(c)) == 0
    return literal_zero(c)


def nonzero(c: Any, tol: float) -> bool:
    if isinstance(c, sympy.Basic):
        return not exact_zero(c)
    return cabs(c) > tol


def accumulate(target: dict, word: Word, coeff: Any) -> None:
    if word in target:
        target[word] = target[word] + coeff
    else:
        target[word] = coeff


def prune(terms: dict) -> dict:
    out = {}
    for w, c in terms.items():
        if isinstance(c, sympy.Basic):
            c = sympy.expand(c)
        if not literal_zero(c):
            out[w] = c
    return out


class WordAlgebra:
    """Interface implemented by every word backend."""

    tag = "words"

    def mul_words(self, w1: Word, w2: Word) -> Iterable[tuple[Word, Any]]:
        raise NotImplementedError

    def adjoint_word(self, w: Word) -> Iterable[tuple[Word, Any]]:
        raise NotImplementedError

    def unit_word(self) -> Word:
        raise NoUnitError(f"{self!r} has no global unit")

    def normal_form(self, terms: dict, depth: int | None = None) -> dict:
        return terms

    def format_word(self, w: Word) -> str:
        return repr(w)

    # element constructors
    def element(self, terms: dict | None = None) -> "WordElement":
        return WordElement(self, terms or {})

    def zero(self) -> "WordElement":
        return WordElement(self, {})

    def one(self) -> "WordElement":
        return WordElement(self, {self.unit_word(): 1})

    def word(self, w: Word, coeff: Any = 1) -> "WordElement":
        return WordElement(self, {w: coeff})


class WordElement:
    """A finite linear combination of backend words."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: WordAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = prune(terms)

    @property
    def backend_tag(self) -> str:
        return self.algebra.tag

    def _check(self, other: "WordElement") -> None:
        if not isinstance(other, WordElement) or other.algebra != self.algebra:
            raise BackendMismatchError(
                f"cannot combine elements of {self.algebra!r} and "
                f"{getattr(other, 'algebra', type(other).__name__)!r}")

    def _new(self, terms: dict) -> "WordElement":
        return WordElement(self.algebra, terms)

    def __add__(self, other):
        if isinstance(other, (int, float)) and other == 0:
            return self
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            accumulate(out, w, c)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Any) -> "WordElement":
        return self._new({w: cmul(c, v) for w, v in self.terms.items()})

    def __mul__(self, other):
        if is_scalar(other):
            return self._new({w: cmul(v, other) for w, v in self.terms.items()})
        self._check(other)
        out: dict = {}
        mul = self.algebra.mul_words
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c = cmul(c1, c2)
                for w, s in mul(w1, w2):
                    accumulate(out, w, c if s == 1 else c * s)
        return self._new(out)

    def __rmul__(self, other):
        if is_scalar(other):
            return self._new({w: cmul(other, v) for w, v in self.terms.items()})
        return NotImplemented

    def adjoint(self) -> "WordElement":
        out: dict = {}
        for w, c in self.terms.items():
            cc = cadj(c)
            for wa, s in self.algebra.adjoint_word(w):
                accumulate(out, wa, cc if s == 1 else cc * np.conj(s))
        return self._new(out)

    def zero(self) -> "WordElement":
        return self.algebra.zero()

    def one(self) -> "WordElement":
        return self.algebra.one()

    def map_coefficients(self, fn) -> "WordElement":
        return self._new({w: fn(c) for w, c in self.terms.items()})

    def normal_form(self, depth: int | None = None) -> dict:
        return prune(self.algebra.normal_form(self.terms, depth))

    def residual(self) -> float:
        """Max coefficient magnitude in normal form (0 for the zero element)."""
        nf = self.normal_form()
        return max((cabs(c) for c in nf.values()), default=0.0)

    def support(self, tol: float = 0.0, depth: int | None = None) -> int:
        """Number of normal-form words with a nonzero coefficient.

        Symbolic coefficients are tested exactly; numeric ones against ``tol``.
        """
        return sum(1 for c in self.normal_form(depth).values() if nonzero(c, tol))

    def is_zero(self, tol: float = 1e-9) -> bool:
        return self.support(tol) == 0

    def __iter__(self) -> Iterator[tuple[Word, Any]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.terms.items():
            cs = "M" if isinstance(c, np.ndarray) else str(c)
            parts.append(f"{cs} * {self.algebra.format_word(w)}")
        return " + ".join(parts)
