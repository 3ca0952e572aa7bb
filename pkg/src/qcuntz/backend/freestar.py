"""Formal *-polynomials: the free unital *-algebra on a set of labels.

Words are tuples of ``(label, starred)`` letters and the empty word is the
unit.  These elements serve as relation polynomials and as the formal
algebra on which generator-level identities are checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Hashable, Mapping

from .core import WordAlgebra, WordElement


@dataclass(frozen=True)
class FreeStarAlgebra(WordAlgebra):
    @property
    def tag(self) -> str:
        return "freestar"

    def mul_words(self, w1, w2):
        return ((w1 + w2, 1),)

    def adjoint_word(self, w):
        return ((tuple((g, not s) for g, s in reversed(w)), 1),)

    def unit_word(self):
        return ()

    def format_word(self, w) -> str:
        if not w:
            return "1"
        return " ".join(f"{g}*" if s else f"{g}" for g, s in w)

    def gen(self, label: Hashable, coeff: Any = 1) -> WordElement:
        return self.word(((label, False),), coeff)


FREE = FreeStarAlgebra()


def gen(label: Hashable) -> WordElement:
    return FREE.gen(label)


def labels_of(poly: WordElement) -> set:
    return {g for w in poly.terms for g, _ in w}


def substitute(poly: WordElement, images: Mapping[Hashable, Any],
               one: Any = None, coeff_map: Callable[[Any], Any] | None = None):
    """Evaluate a formal polynomial at ``images``.

    ``images`` maps labels to elements of any backend that supports ``+``,
    ``*`` with scalars and ``adjoint``.  ``one`` is required only when the
    polynomial has a constant term.
    """
    adj_cache: dict = {}

    def letter(g, starred):
        img = images[g]
        if not starred:
            return img
        if g not in adj_cache:
            adj_cache[g] = img.adjoint()
        return adj_cache[g]

    total = None
    for w, c in poly.terms.items():
        if coeff_map is not None:
            c = coeff_map(c)
        if not w:
            if one is None:
                raise ValueError("polynomial has a constant term but no unit was given")
            term = one * c
        else:
            term = letter(*w[0])
            for g, s in w[1:]:
                term = term * letter(g, s)
            term = c * term if not _is_matrix(c) else term.scale(c)
        total = term if total is None else total + term
    return total


def _is_matrix(c) -> bool:
    return hasattr(c, "shape") and getattr(c, "ndim", 0) == 2


def word_map(poly: WordElement, fn: Callable[[tuple], WordElement], one: WordElement):
    """Linear extension of a word-level map, used for formal homomorphisms."""
    out = None
    for w, c in poly.terms.items():
        img = fn(w)
        term = img.scale(c) if _is_matrix(c) else c * img
        out = term if out is None else out + term
    return out if out is not None else one.zero()


def multiply_all(factors, one):
    out = one
    for f in factors:
        out = out * f
    return out


__all__ = ["FREE", "FreeStarAlgebra", "gen", "labels_of", "substitute", "word_map", "multiply_all"]
