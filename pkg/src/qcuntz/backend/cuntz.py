"""Cuntz algebra O_n on words s_mu s_nu^*."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..errors import ValidationError
from .core import WordAlgebra, WordElement, accumulate

CuntzWord = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class CuntzAlgebra(WordAlgebra):
    """O_n with generators s_1..s_n (1-based). Words are pairs (mu, nu)."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValidationError("Cuntz backend requires n >= 2")

    @property
    def tag(self) -> str:
        return f"cuntz[{self.n}]"

    def mul_words(self, w1: CuntzWord, w2: CuntzWord):
        mu, nu = w1
        alpha, beta = w2
        ln, la = len(nu), len(alpha)
        if la >= ln:
            if alpha[:ln] == nu:
                return (((mu + alpha[ln:], beta), 1),)
            return ()
        if nu[:la] == alpha:
            return (((mu, beta + nu[la:]), 1),)
        return ()

    def adjoint_word(self, w: CuntzWord):
        return (((w[1], w[0]), 1),)

    def unit_word(self) -> CuntzWord:
        return ((), ())

    def expansion_depth(self, terms: dict) -> int:
        return max((min(len(m), len(v)) for m, v in terms), default=0)

    def normal_form(self, terms: dict, depth: int | None = None) -> dict:
        """Expand s_mu s_nu^* = sum_i s_{mu i} s_{nu i}^* to a common depth.

        The default depth is the largest min(|mu|, |nu|) present.
        """
        target = self.expansion_depth(terms) if depth is None else depth
        out: dict = {}
        letters = range(1, self.n + 1)
        for (mu, nu), c in terms.items():
            m = min(len(mu), len(nu))
            if m >= target:
                accumulate(out, (mu, nu), c)
                continue
            for tail in product(letters, repeat=target - m):
                accumulate(out, (mu + tail, nu + tail), c)
        return out

    def format_word(self, w: CuntzWord) -> str:
        mu, nu = w
        if not mu and not nu:
            return "1"
        left = f"s[{''.join(map(str, mu))}]" if mu else ""
        right = f"s*[{''.join(map(str, nu))}]" if nu else ""
        return f"{left} {right}".strip()

    def generator(self, i: int) -> WordElement:
        if not 1 <= i <= self.n:
            raise ValidationError(f"generator index {i} outside 1..{self.n}")
        return self.word(((i,), ()))

    def generators(self) -> list[WordElement]:
        return [self.generator(i) for i in range(1, self.n + 1)]


def cuntz_generator(n: int, i: int) -> WordElement:
    return CuntzAlgebra(n).generator(i)


def cuntz_relation_residuals(gens: list, one) -> dict[str, float]:
    """Residuals of s_i^* s_j = delta_ij 1 and sum_i s_i s_i^* = 1."""
    worst_iso = 0.0
    adj = [g.adjoint() for g in gens]
    for i, gi in enumerate(adj):
        for j, gj in enumerate(gens):
            d = gi * gj
            if i == j:
                d = d - one
            worst_iso = max(worst_iso, d.residual())
    total = -one
    for g, ga in zip(gens, adj):
        total = total + g * ga
    return {"isometries": worst_iso, "ranges_sum_to_one": total.residual()}
