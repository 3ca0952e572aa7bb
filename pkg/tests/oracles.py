"""Independent numpy oracles; nothing here imports qcuntz."""

from __future__ import annotations

import numpy as np


def random_delta_form(profile, rng) -> list[list[float]]:
    """Random weights with Tr(Q_a^-1) equal across blocks and total mass one."""
    shapes = [rng.uniform(0.2, 1.0, size=n) for n in profile]
    s = [float(np.sum(1 / r)) for r in shapes]
    t = [float(np.sum(r)) for r in shapes]
    d2 = sum(a * b for a, b in zip(s, t))
    return [list(r * sa / d2) for r, sa in zip(shapes, s)]


def flat_basis(dims):
    return [(a, i, j) for a, n in enumerate(dims) for i in range(n) for j in range(n)]


def standard_multiplication(dims) -> np.ndarray:
    """m on matrix units: e^a_ij e^a_kl = delta_jk e^a_il; shape (dim, dim^2)."""
    basis = flat_basis(dims)
    pos = {b: p for p, b in enumerate(basis)}
    d = len(basis)
    M = np.zeros((d, d * d))
    for p, (a, i, j) in enumerate(basis):
        for q, (b, k, l) in enumerate(basis):
            if a == b and j == k:
                M[pos[(a, i, l)], p * d + q] = 1
    return M


def standard_gram(dims, q) -> np.ndarray:
    """<e_ij, e_kl> = psi(e_ji e_kl) = delta_ik delta_jl q_j."""
    return np.diag([q[a][j] for a, i, j in flat_basis(dims)])


def adapted_scale(dims, q) -> np.ndarray:
    return np.array([1 / np.sqrt(q[a][i] * q[a][j]) for a, i, j in flat_basis(dims)])


def mstar_by_solve(dims, q, x_adapted) -> np.ndarray:
    """Adjoint of m from <m^* x, y ⊗ z> = <x, yz>, solved in the standard basis.

    Returns T with m^*(x) = sum T[p, q] f_p ⊗ f_q in the adapted basis.
    """
    s = adapted_scale(dims, q)
    x = np.asarray(x_adapted) * s
    M = standard_multiplication(dims)
    G = standard_gram(dims, q)
    G2 = np.kron(G, G)
    T = np.linalg.solve(G2, M.T.conj() @ G @ x).reshape(len(s), len(s))
    return T / np.outer(s, s)


def schur_idempotent(A) -> bool:
    A = np.asarray(A)
    return bool(np.array_equal(A * A, A))


def tr_inner(a, b) -> complex:
    n = a.shape[0]
    return complex(np.trace(a.conj().T @ b) / n)
