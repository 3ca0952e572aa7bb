"""Dense complex matrices with the common element interface."""

from __future__ import annotations

import numpy as np

from ..errors import BackendMismatchError
from .core import is_scalar


class NumericElement:
    __slots__ = ("matrix",)

    def __init__(self, matrix):
        m = np.asarray(matrix, dtype=complex)
        if m.ndim == 0:
            m = m.reshape(1, 1)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise BackendMismatchError(f"numeric elements are square matrices, got shape {m.shape}")
        self.matrix = m

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    @property
    def backend_tag(self) -> str:
        return f"numeric[{self.size}]"

    def _check(self, other) -> None:
        if not isinstance(other, NumericElement) or other.size != self.size:
            raise BackendMismatchError(f"cannot combine {self.backend_tag} with {other!r}")

    def __add__(self, other):
        if isinstance(other, (int, float)) and other == 0:
            return self
        self._check(other)
        return NumericElement(self.matrix + other.matrix)

    __radd__ = __add__

    def __neg__(self):
        return NumericElement(-self.matrix)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if is_scalar(other):
            return NumericElement(self.matrix * complex(other))
        self._check(other)
        return NumericElement(self.matrix @ other.matrix)

    def __rmul__(self, other):
        if is_scalar(other):
            return NumericElement(complex(other) * self.matrix)
        return NotImplemented

    def scale(self, c):
        return self * c

    def adjoint(self):
        return NumericElement(self.matrix.conj().T)

    def zero(self):
        return NumericElement(np.zeros_like(self.matrix))

    def one(self):
        return NumericElement(np.eye(self.size, dtype=complex))

    def residual(self) -> float:
        return float(np.abs(self.matrix).max()) if self.matrix.size else 0.0

    def support(self, tol: float = 0.0) -> int:
        return int((np.abs(self.matrix) > tol).sum())

    def is_zero(self, tol: float = 1e-9) -> bool:
        return self.residual() <= tol

    def __repr__(self) -> str:
        return f"NumericElement({np.array2string(self.matrix, precision=4)})"


def numeric(matrix) -> NumericElement:
    return NumericElement(matrix)
