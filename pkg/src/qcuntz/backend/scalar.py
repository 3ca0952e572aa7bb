"""The scalar algebra C, with exact (sympy) or floating values."""

from __future__ import annotations

import sympy

from ..errors import BackendMismatchError
from .core import cabs, exact_zero, is_scalar


class ScalarElement:
    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value

    backend_tag = "scalar"

    def _v(self, other):
        if not isinstance(other, ScalarElement):
            raise BackendMismatchError(f"cannot combine a scalar element with {other!r}")
        return other.value

    def __add__(self, other):
        if isinstance(other, (int, float)) and other == 0:
            return self
        return ScalarElement(self.value + self._v(other))

    __radd__ = __add__

    def __neg__(self):
        return ScalarElement(-self.value)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if is_scalar(other):
            return ScalarElement(self.value * other)
        return ScalarElement(self.value * self._v(other))

    def __rmul__(self, other):
        if is_scalar(other):
            return ScalarElement(other * self.value)
        return NotImplemented

    def scale(self, c):
        return self * c

    def adjoint(self):
        v = self.value
        return ScalarElement(sympy.conjugate(v) if isinstance(v, sympy.Basic) else complex(v).conjugate())

    def zero(self):
        return ScalarElement(0)

    def one(self):
        return ScalarElement(1)

    def _simplified(self):
        v = self.value
        return sympy.simplify(sympy.expand(v)) if isinstance(v, sympy.Basic) else v

    def residual(self) -> float:
        return cabs(self._simplified())

    def support(self, tol: float = 0.0) -> int:
        v = self.value
        if isinstance(v, sympy.Basic):
            return 0 if exact_zero(v) else 1
        return int(abs(v) > tol)

    def is_zero(self, tol: float = 1e-9) -> bool:
        return self.support(tol) == 0

    def __repr__(self) -> str:
        return f"ScalarElement({self.value})"
