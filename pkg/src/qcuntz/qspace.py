"""Finite quantum spaces B = ⊕_a M_{N_a} with a diagonal state.

The state is psi(x) = sum_a Tr(Q_a x_a) with Q_a = diag(q_a).  It is a
delta-form when every block satisfies Tr(Q_a^{-1}) = delta^2 and the weights
sum to one.  Elements are coefficient vectors over the flat basis of matrix
units, ordered lexicographically in (a, i, j).  The adapted units are
f^a_ij = q_ai^{-1/2} e^a_ij q_aj^{-1/2}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import ValidationError
from .tolerance import resolve

STANDARD = "standard"
ADAPTED = "adapted"
BASES = (STANDARD, ADAPTED)


@dataclass(frozen=True, order=True)
class BlockIndex:
    """1-based index of the matrix unit (i, j) in block a."""

    a: int
    i: int
    j: int

    def __str__(self) -> str:
        return f"({self.a},{self.i},{self.j})"


def _block_sums(q_weights: Sequence[Sequence[float]]) -> np.ndarray:
    return np.array([np.sum(1.0 / np.asarray(q, dtype=float)) for q in q_weights])


def delta_form_defect(block_dims: Sequence[int], q_weights: Sequence[Sequence[float]]) -> float:
    """max(|Tr(Q_a^{-1}) - mean|, |sum of weights - 1|); zero exactly for delta-forms."""
    _check_shapes(block_dims, q_weights)
    sums = _block_sums(q_weights)
    total = sum(float(np.sum(q)) for q in q_weights)
    return float(max(np.abs(sums - sums.mean()).max(), abs(total - 1.0)))


def _check_shapes(block_dims, q_weights) -> None:
    if len(block_dims) == 0:
        raise ValidationError("a quantum space needs at least one block")
    if len(block_dims) != len(q_weights):
        raise ValidationError("one weight list per block is required")
    for a, (n, q) in enumerate(zip(block_dims, q_weights), start=1):
        if int(n) != n or n < 1:
            raise ValidationError(f"block {a}: dimension must be a positive integer, got {n}")
        if len(q) != n:
            raise ValidationError(f"block {a}: expected {n} weights, got {len(q)}")
        if any(not np.isfinite(x) or x <= 0 for x in q):
            raise ValidationError(f"block {a}: weights must be strictly positive")


def validate_delta_form(block_dims: Sequence[int], q_weights: Sequence[Sequence[float]],
                        tol: float | None = None) -> float:
    """Return delta^2 if (block_dims, q_weights) is a delta-form, else raise."""
    tol = resolve(tol)
    _check_shapes(block_dims, q_weights)
    total = sum(float(np.sum(q)) for q in q_weights)
    if abs(total - 1.0) > tol:
        raise ValidationError(f"weights sum to {total:.12g}, not 1")
    sums = _block_sums(q_weights)
    if np.abs(sums - sums.mean()).max() > tol:
        raise ValidationError(f"Tr(Q_a^-1) differs across blocks: {sums.tolist()}")
    return float(sums.mean())


@dataclass(frozen=True)
class FiniteQuantumSpace:
    block_dims: tuple[int, ...]
    q_weights: tuple[tuple[float, ...], ...]
    delta_sq: float

    @classmethod
    def from_weights(cls, block_dims: Sequence[int], q_weights: Sequence[Sequence[float]],
                     *, validate: bool = True, tol: float | None = None) -> "FiniteQuantumSpace":
        """Build a space; with ``validate=False`` non-delta-forms are allowed (for testing)."""
        dims = tuple(int(n) for n in block_dims)
        qs = tuple(tuple(float(x) for x in q) for q in q_weights)
        if validate:
            d2 = validate_delta_form(dims, qs, tol)
        else:
            _check_shapes(dims, qs)
            d2 = float(_block_sums(qs).mean())
        return cls(dims, qs, d2)

    # basic shape data
    @property
    def num_blocks(self) -> int:
        return len(self.block_dims)

    @cached_property
    def dim(self) -> int:
        return sum(n * n for n in self.block_dims)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for n in self.block_dims:
            out.append(acc)
            acc += n * n
        return tuple(out)

    @cached_property
    def basis(self) -> tuple[BlockIndex, ...]:
        return tuple(BlockIndex(a + 1, i + 1, j + 1)
                     for a, n in enumerate(self.block_dims)
                     for i in range(n) for j in range(n))

    def index(self, bi: BlockIndex) -> int:
        self.check_index(bi)
        n = self.block_dims[bi.a - 1]
        return self.offsets[bi.a - 1] + (bi.i - 1) * n + (bi.j - 1)

    def check_index(self, bi: BlockIndex) -> None:
        if not 1 <= bi.a <= self.num_blocks:
            raise ValidationError(f"block {bi.a} out of range 1..{self.num_blocks}")
        n = self.block_dims[bi.a - 1]
        if not (1 <= bi.i <= n and 1 <= bi.j <= n):
            raise ValidationError(f"index {bi} out of range for block of size {n}")

    @cached_property
    def delta(self) -> float:
        return float(np.sqrt(self.delta_sq))

    @cached_property
    def q_row(self) -> np.ndarray:
        """Q_ii for the row index of each flat basis element."""
        return np.array([self.q_weights[b.a - 1][b.i - 1] for b in self.basis])

    @cached_property
    def q_col(self) -> np.ndarray:
        return np.array([self.q_weights[b.a - 1][b.j - 1] for b in self.basis])

    @cached_property
    def adapted_scale(self) -> np.ndarray:
        """s_p with f_p = s_p e_p."""
        return 1.0 / np.sqrt(self.q_row * self.q_col)

    @property
    def is_commutative(self) -> bool:
        return all(n == 1 for n in self.block_dims)

    def is_tracial(self, tol: float | None = None) -> bool:
        tol = resolve(tol)
        return all(abs(x - n / self.dim) <= tol
                   for n, q in zip(self.block_dims, self.q_weights) for x in q)

    def state_total(self) -> float:
        return float(sum(sum(q) for q in self.q_weights))

    # element constructors
    def vector(self, coeffs, basis: str = ADAPTED) -> "AlgebraVector":
        return AlgebraVector(self, basis, np.asarray(coeffs, dtype=complex))

    def adapted_unit(self, a: int, i: int, j: int) -> "AlgebraVector":
        c = np.zeros(self.dim, dtype=complex)
        c[self.index(BlockIndex(a, i, j))] = 1.0
        return AlgebraVector(self, ADAPTED, c)

    def matrix_unit(self, a: int, i: int, j: int) -> "AlgebraVector":
        c = np.zeros(self.dim, dtype=complex)
        c[self.index(BlockIndex(a, i, j))] = 1.0
        return AlgebraVector(self, STANDARD, c)

    def from_blocks(self, blocks: Sequence[np.ndarray], basis: str = STANDARD) -> "AlgebraVector":
        if len(blocks) != self.num_blocks:
            raise ValidationError("one matrix per block is required")
        parts = []
        for n, m in zip(self.block_dims, blocks):
            m = np.asarray(m, dtype=complex)
            if m.shape != (n, n):
                raise ValidationError(f"block of shape {m.shape}, expected {(n, n)}")
            parts.append(m.reshape(-1))
        return AlgebraVector(self, STANDARD, np.concatenate(parts)).to(basis)

    def random_vector(self, rng: np.random.Generator, basis: str = ADAPTED) -> "AlgebraVector":
        c = rng.normal(size=self.dim) + 1j * rng.normal(size=self.dim)
        return AlgebraVector(self, basis, c)


@dataclass(frozen=True, eq=False)
class AlgebraVector:
    """An element of B given by its coefficients in one of the two unit bases."""

    space: FiniteQuantumSpace
    basis: str
    coeffs: np.ndarray

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValidationError(f"unknown basis tag {self.basis!r}")
        if self.coeffs.shape != (self.space.dim,):
            raise ValidationError(f"expected {self.space.dim} coefficients, got {self.coeffs.shape}")

    def to(self, basis: str) -> "AlgebraVector":
        if basis not in BASES:
            raise ValidationError(f"unknown basis tag {basis!r}")
        if basis == self.basis:
            return self
        s = self.space.adapted_scale
        # e_p = f_p / s_p, so standard coefficients c give adapted coefficients c / s
        c = self.coeffs / s if basis == ADAPTED else self.coeffs * s
        return AlgebraVector(self.space, basis, c)

    def terms(self, tol: float = 0.0) -> dict[BlockIndex, complex]:
        return {b: complex(c) for b, c in zip(self.space.basis, self.coeffs) if abs(c) > tol}

    def blocks(self) -> list[np.ndarray]:
        c = self.to(STANDARD).coeffs
        return [c[o:o + n * n].reshape(n, n)
                for o, n in zip(self.space.offsets, self.space.block_dims)]

    def __add__(self, other: "AlgebraVector") -> "AlgebraVector":
        _same_space(self, other)
        return AlgebraVector(self.space, self.basis, self.coeffs + other.to(self.basis).coeffs)

    def __sub__(self, other: "AlgebraVector") -> "AlgebraVector":
        _same_space(self, other)
        return AlgebraVector(self.space, self.basis, self.coeffs - other.to(self.basis).coeffs)

    def __mul__(self, c) -> "AlgebraVector":
        return AlgebraVector(self.space, self.basis, self.coeffs * c)

    __rmul__ = __mul__

    def max_diff(self, other: "AlgebraVector") -> float:
        _same_space(self, other)
        return float(np.abs(self.coeffs - other.to(self.basis).coeffs).max(initial=0.0))


def _same_space(x: AlgebraVector, y: AlgebraVector) -> None:
    if x.space != y.space:
        raise ValidationError("vectors live over different quantum spaces")


def make_tracial_space(block_dims: Sequence[int]) -> FiniteQuantumSpace:
    """The unique tracial delta-form: Q_a = N_a / dim(B), delta^2 = dim(B)."""
    dims = list(block_dims)
    if not dims:
        raise ValidationError("block list must be non-empty")
    if any(int(n) != n or n < 1 for n in dims):
        raise ValidationError("block dimensions must be positive integers")
    total = sum(n * n for n in dims)
    q = [[n / total] * n for n in dims]
    return FiniteQuantumSpace(tuple(int(n) for n in dims), tuple(tuple(x) for x in q), float(total))


def make_space(block_dims: Sequence[int], q_weights: Sequence[Sequence[float]],
               tol: float | None = None) -> FiniteQuantumSpace:
    return FiniteQuantumSpace.from_weights(block_dims, q_weights, tol=tol)


def multiply(S: FiniteQuantumSpace, x: AlgebraVector, y: AlgebraVector) -> AlgebraVector:
    """Blockwise matrix product; the result uses the basis of ``x``."""
    _check_over(S, x, y)
    prods = [bx @ by for bx, by in zip(x.blocks(), y.blocks())]
    return S.from_blocks(prods, x.basis)


def adjoint(x: AlgebraVector) -> AlgebraVector:
    return x.space.from_blocks([b.conj().T for b in x.blocks()], x.basis)


def unit(S: FiniteQuantumSpace, basis: str = STANDARD) -> AlgebraVector:
    return S.from_blocks([np.eye(n) for n in S.block_dims], basis)


def psi(S: FiniteQuantumSpace, x: AlgebraVector) -> complex:
    _check_over(S, x)
    return complex(sum(np.sum(np.asarray(q) * np.diag(b))
                       for q, b in zip(S.q_weights, x.blocks())))


def inner(S: FiniteQuantumSpace, x: AlgebraVector, y: AlgebraVector) -> complex:
    """<x, y> = psi(x^* y), antilinear in x."""
    return psi(S, multiply(S, adjoint(x), y))


def to_adapted(x: AlgebraVector) -> AlgebraVector:
    return x.to(ADAPTED)


def to_standard(x: AlgebraVector) -> AlgebraVector:
    return x.to(STANDARD)


def _check_over(S: FiniteQuantumSpace, *xs: AlgebraVector) -> None:
    for x in xs:
        if x.space != S:
            raise ValidationError("vector does not live over the given space")


def mstar(S: FiniteQuantumSpace, x: AlgebraVector) -> np.ndarray:
    """m^*(x) as a dim x dim array T with m^*(x) = sum_pq T[p, q] f_p ⊗ f_q.

    Uses m^*(f^a_ij) = sum_k f^a_ik ⊗ f^a_kj.
    """
    _check_over(S, x)
    c = x.to(ADAPTED).coeffs
    out = np.zeros((S.dim, S.dim), dtype=complex)
    for a, n in enumerate(S.block_dims):
        o = S.offsets[a]
        for i in range(n):
            for j in range(n):
                cij = c[o + i * n + j]
                if cij == 0:
                    continue
                for k in range(n):
                    out[o + i * n + k, o + k * n + j] += cij
    return out


def comultiplication_matrix(S: FiniteQuantumSpace) -> np.ndarray:
    """m^* as a (dim^2, dim) matrix in the adapted basis."""
    cols = [mstar(S, S.adapted_unit(b.a, b.i, b.j)).reshape(-1) for b in S.basis]
    return np.stack(cols, axis=1)


def multiplication_matrix(S: FiniteQuantumSpace) -> np.ndarray:
    """m as a (dim, dim^2) matrix in the adapted basis, from blockwise products."""
    units = [S.adapted_unit(b.a, b.i, b.j) for b in S.basis]
    out = np.zeros((S.dim, S.dim * S.dim), dtype=complex)
    for p, fp in enumerate(units):
        for q, fq in enumerate(units):
            if S.basis[p].a != S.basis[q].a:
                continue
            out[:, p * S.dim + q] = multiply(S, fp, fq).to(ADAPTED).coeffs
    return out


def structure_constants(S: FiniteQuantumSpace) -> np.ndarray:
    """c[p, q, r] with f_p f_q = sum_r c[p, q, r] f_r."""
    return multiplication_matrix(S).reshape(S.dim, S.dim, S.dim).transpose(1, 2, 0)


def mm_star_check(S: FiniteQuantumSpace) -> float:
    """max(||m m^* - delta^2 id||_max, |psi(1) - 1|) over the adapted basis.

    The second term catches unnormalised weights, for which m m^* is still a
    multiple of the identity on a single block.
    """
    mm = multiplication_matrix(S) @ comultiplication_matrix(S)
    op = float(np.abs(mm - S.delta_sq * np.eye(S.dim)).max())
    return max(op, abs(S.state_total() - 1.0))


# JSON

def space_to_dict(S: FiniteQuantumSpace) -> dict:
    return {"blocks": [{"dim": n, "q": list(q)} for n, q in zip(S.block_dims, S.q_weights)]}


def space_from_dict(data: dict, *, validate: bool = True, tol: float | None = None) -> FiniteQuantumSpace:
    try:
        blocks = data["blocks"]
        dims = [int(b["dim"]) for b in blocks]
        qs = [[float(x) for x in b["q"]] for b in blocks]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed space JSON: {exc}") from exc
    return FiniteQuantumSpace.from_weights(dims, qs, validate=validate, tol=tol)


def vector_to_dict(x: AlgebraVector, tol: float = 0.0) -> dict:
    return {"basis": x.basis,
            "terms": [{"a": b.a, "i": b.i, "j": b.j, "re": c.real, "im": c.imag}
                      for b, c in x.terms(tol).items()]}


def vector_from_dict(S: FiniteQuantumSpace, data: dict) -> AlgebraVector:
    try:
        basis = data.get("basis", ADAPTED)
        c = np.zeros(S.dim, dtype=complex)
        for t in data["terms"]:
            c[S.index(BlockIndex(int(t["a"]), int(t["i"]), int(t["j"])))] += complex(
                float(t.get("re", 0.0)), float(t.get("im", 0.0)))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed vector JSON: {exc}") from exc
    return AlgebraVector(S, basis, c)


def dumps_space(S: FiniteQuantumSpace) -> str:
    return json.dumps(space_to_dict(S))


def loads_space(text: str, **kw) -> FiniteQuantumSpace:
    return space_from_dict(json.loads(text), **kw)


def block_profiles(max_dim: int) -> Iterable[tuple[int, ...]]:
    """All non-increasing block profiles with dim(B) <= max_dim."""
    def rec(remaining, largest):
        yield ()
        for n in range(min(largest, int(np.sqrt(remaining))), 0, -1):
            for rest in rec(remaining - n * n, n):
                yield (n,) + rest
    return (p for p in rec(max_dim, max_dim) if p)
