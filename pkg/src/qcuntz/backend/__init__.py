"""Computable *-algebra backends sharing one element interface.

Every element supports ``+``, ``-``, ``*`` (by elements or scalars),
``adjoint()``, ``zero()``, ``residual()`` and ``is_zero(tol)``; backends with
a unit also support ``one()``.
"""

from .combinators import MatrixOver, conjugate_leg, left_leg, right_leg, tensor, unit_tensor
from .core import WordAlgebra, WordElement, cabs, exact_zero
from .cuntz import CuntzAlgebra, cuntz_generator, cuntz_relation_residuals
from .freestar import FREE, FreeStarAlgebra, gen, substitute
from .freeword import FreeCircleProduct, free_word_generator, is_alternating
from .numeric import NumericElement, numeric
from .scalar import ScalarElement
from .unital import LaurentFactor, MatrixFactor, UnitalFreeProduct, amplification_algebra

__all__ = [
    "CuntzAlgebra", "FREE", "FreeCircleProduct", "FreeStarAlgebra", "LaurentFactor",
    "MatrixFactor", "MatrixOver", "NumericElement", "ScalarElement", "UnitalFreeProduct", "WordAlgebra",
    "WordElement", "amplification_algebra", "cabs", "conjugate_leg", "cuntz_generator",
    "cuntz_relation_residuals", "exact_zero", "free_word_generator", "gen",
    "is_alternating", "left_leg", "numeric", "right_leg", "substitute", "tensor",
    "unit_tensor",
]
