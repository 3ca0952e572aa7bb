"""Matrices over a backend, and tensoring word elements with M_k."""

from __future__ import annotations

from typing import Any, Sequence

import numpy as np

from ..errors import BackendMismatchError
from .core import WordAlgebra, WordElement, is_scalar


class MatrixOver:
    """A k x k matrix whose entries are elements of one backend."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[Sequence[Any]]):
        rows = [list(r) for r in entries]
        k = len(rows)
        if k == 0 or any(len(r) != k for r in rows):
            raise BackendMismatchError("MatrixOver needs a non-empty square layout")
        self.entries = rows

    @classmethod
    def diagonal(cls, diag: Sequence[Any], zero: Any) -> "MatrixOver":
        k = len(diag)
        return cls([[diag[i] if i == j else zero for j in range(k)] for i in range(k)])

    @classmethod
    def single(cls, k: int, i: int, j: int, value: Any, zero: Any) -> "MatrixOver":
        """Matrix with ``value`` at (i, j) (0-based) and ``zero`` elsewhere."""
        return cls([[value if (r, c) == (i, j) else zero for c in range(k)] for r in range(k)])

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def backend_tag(self) -> str:
        inner = getattr(self.entries[0][0], "backend_tag", "?")
        return f"matrix[{self.size}]({inner})"

    def _check(self, other) -> None:
        if not isinstance(other, MatrixOver) or other.size != self.size:
            raise BackendMismatchError("shape mismatch in MatrixOver arithmetic")

    def _map(self, fn) -> "MatrixOver":
        return MatrixOver([[fn(x) for x in row] for row in self.entries])

    def __add__(self, other):
        if isinstance(other, (int, float)) and other == 0:
            return self
        self._check(other)
        return MatrixOver([[a + b for a, b in zip(r1, r2)]
                           for r1, r2 in zip(self.entries, other.entries)])

    __radd__ = __add__

    def __neg__(self):
        return self._map(lambda x: -x)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if is_scalar(other):
            return self._map(lambda x: x * other)
        self._check(other)
        k = self.size
        out = []
        for i in range(k):
            row = []
            for j in range(k):
                acc = self.entries[i][0] * other.entries[0][j]
                for t in range(1, k):
                    acc = acc + self.entries[i][t] * other.entries[t][j]
                row.append(acc)
            out.append(row)
        return MatrixOver(out)

    def __rmul__(self, other):
        if is_scalar(other):
            return self._map(lambda x: other * x)
        return NotImplemented

    def scale(self, c):
        return self * c

    def adjoint(self) -> "MatrixOver":
        k = self.size
        return MatrixOver([[self.entries[j][i].adjoint() for j in range(k)] for i in range(k)])

    def zero(self) -> "MatrixOver":
        z = self.entries[0][0].zero()
        return MatrixOver([[z] * self.size for _ in range(self.size)])

    def one(self) -> "MatrixOver":
        e = self.entries[0][0]
        return MatrixOver.diagonal([e.one()] * self.size, e.zero())

    def residual(self) -> float:
        return max(x.residual() for row in self.entries for x in row)

    def support(self, tol: float = 0.0) -> int:
        return sum(x.support(tol) for row in self.entries for x in row)

    def is_zero(self, tol: float = 1e-9) -> bool:
        return all(x.is_zero(tol) for row in self.entries for x in row)

    def __repr__(self) -> str:
        return f"MatrixOver({self.entries!r})"


def tensor(elem: WordElement, m: np.ndarray) -> WordElement:
    """elem ⊗ m; matrix coefficients already present are Kronecker-extended."""
    m = np.asarray(m, dtype=complex)

    def f(c):
        return np.kron(c, m) if isinstance(c, np.ndarray) else c * m

    return elem.map_coefficients(f)


def unit_tensor(algebra: WordAlgebra, m: np.ndarray) -> WordElement:
    return algebra.word(algebra.unit_word(), np.asarray(m, dtype=complex))


def left_leg(m: np.ndarray, elem: WordElement) -> WordElement:
    """(1 ⊗ m) · elem without needing a unit in the backend."""
    return elem.map_coefficients(lambda c: m @ c)


def right_leg(elem: WordElement, m: np.ndarray) -> WordElement:
    """elem · (1 ⊗ m)."""
    return elem.map_coefficients(lambda c: c @ m)


def conjugate_leg(m: np.ndarray, elem: WordElement) -> WordElement:
    """(1 ⊗ m) elem (1 ⊗ m)^*."""
    mh = np.asarray(m).conj().T
    return elem.map_coefficients(lambda c: m @ c @ mh)
