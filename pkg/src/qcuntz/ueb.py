"""Unitary error bases, linking-algebra representations and the checks built on them.

Indices of the Pauli basis run over 0..N-1 and are taken mod N.  A basis
element w_x with x = j N + k is X^j Z^k.  Generators of the quantum Cuntz
algebra on (M_N, tr) are the labels ``S[1, r+1, s+1]`` of the ``present``
module, and the Cuntz generator realising the classical letter x is
``s_(x+1)``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from . import qgraph as qg
from . import qspace as qs
from .backend import (FREE, CuntzAlgebra, FreeCircleProduct, MatrixOver, WordElement,
                      amplification_algebra, conjugate_leg, cuntz_relation_residuals,
                      substitute, tensor, unit_tensor)
from .errors import NotVerifiableError, ValidationError
from .present import Assignment, S, check_assignment, qck_presentation
from .qspace import FiniteQuantumSpace
from .report import Report
from .tolerance import resolve


def _norm(m) -> float:
    m = np.asarray(m)
    return float(np.abs(m).max()) if m.size else 0.0


def omega(n: int) -> complex:
    return complex(np.exp(2j * np.pi / n))


def pauli_matrices(n: int) -> tuple[np.ndarray, np.ndarray]:
    """X|j> = omega^j |j> and Z|j> = |j+1>."""
    if n < 1:
        raise ValidationError("N must be positive")
    X = np.diag([omega(n) ** j for j in range(n)])
    Z = np.zeros((n, n), dtype=complex)
    for j in range(n):
        Z[(j + 1) % n, j] = 1
    return X, Z


def matrix_unit(n: int, r: int, s: int) -> np.ndarray:
    e = np.zeros((n, n), dtype=complex)
    e[r % n, s % n] = 1
    return e


# Unitary error bases

@dataclass(frozen=True, eq=False)
class UnitaryErrorBasis:
    n: int
    units: np.ndarray

    def __post_init__(self):
        u = np.asarray(self.units, dtype=complex)
        if u.ndim != 3 or u.shape != (self.n * self.n, self.n, self.n):
            raise ValidationError(f"a UEB on C^{self.n} needs {self.n ** 2} matrices of size {self.n}, "
                                  f"got array of shape {u.shape}")
        object.__setattr__(self, "units", u)

    def __len__(self) -> int:
        return self.units.shape[0]

    def __getitem__(self, x: int) -> np.ndarray:
        return self.units[x]


def pauli_ueb(n: int) -> UnitaryErrorBasis:
    X, Z = pauli_matrices(n)
    mp = np.linalg.matrix_power
    return UnitaryErrorBasis(n, np.array([mp(X, j) @ mp(Z, k) for j in range(n) for k in range(n)]))


def pauli_label(n: int, x: int) -> tuple[int, int]:
    return divmod(x, n)


def max_entangled(n: int) -> np.ndarray:
    """Omega = N^{-1/2} sum_i e_i ⊗ e_i."""
    return np.eye(n, dtype=complex).reshape(-1) / math.sqrt(n)


def validate_ueb(W: UnitaryErrorBasis, tol: float | None = None) -> Report:
    """Unitarity, tr-orthonormality, depolarizing and maximally-entangled-basis checks."""
    tol = resolve(tol)
    n, U = W.n, W.units
    eye = np.eye(n)
    rep = Report(f"unitary error basis (N={n})", tol)
    rep.add("unitary", max(_norm(u.conj().T @ u - eye) for u in U))
    gram = np.einsum("xab,yab->xy", U.conj(), U) / n
    rep.add("tr_orthonormal", _norm(gram - np.eye(len(U))))
    worst = 0.0
    for r in range(n):
        for s in range(n):
            a = matrix_unit(n, r, s)
            total = sum(u.conj().T @ a @ u for u in U)
            worst = max(worst, _norm(total - n * np.trace(a) * eye))
    rep.add("depolarizing", worst)
    om = max_entangled(n)
    frame = np.array([np.kron(u, eye) @ om for u in U])
    rep.add("maximally_entangled_basis", _norm(frame.conj() @ frame.T - np.eye(len(U))))
    return rep


def ueb_to_dict(W: UnitaryErrorBasis) -> dict:
    return {"n": W.n,
            "matrices": [[[float(z.real), float(z.imag)] for z in u.reshape(-1)] for u in W.units]}


def ueb_from_dict(data: Mapping) -> UnitaryErrorBasis:
    """Matrices are flat row-major lists of [re, im]; nested rows are accepted too."""
    try:
        n = int(data["n"])
        mats = []
        for m in data["matrices"]:
            arr = np.asarray(m, dtype=float)
            arr = arr[..., 0] + 1j * arr[..., 1]
            mats.append(arr.reshape(n, n))
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ValidationError(f"malformed UEB JSON: {exc}") from exc
    return UnitaryErrorBasis(n, np.array(mats))


def dumps_ueb(W: UnitaryErrorBasis) -> str:
    return json.dumps(ueb_to_dict(W))


def loads_ueb(text: str) -> UnitaryErrorBasis:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed UEB JSON: {exc}") from exc
    return ueb_from_dict(data)


# Linking representation

@dataclass(frozen=True, eq=False)
class LinkingRep:
    """V[r, s, x] = (1/N) w_x^* e_rs w_x, an N x N matrix."""

    n: int
    V: np.ndarray

    def __post_init__(self):
        n = self.n
        if self.V.shape != (n, n, n * n, n, n):
            raise ValidationError(f"linking representation has shape {self.V.shape}")

    def __call__(self, r: int, s: int, x: int) -> np.ndarray:
        n = self.n
        return self.V[r % n, s % n, x]

    def flat(self) -> np.ndarray:
        """V indexed by (p2, p1) = (r N + s, x): the target index first."""
        n = self.n
        return self.V.reshape(n * n, n * n, n, n)


def linking_rep(W: UnitaryErrorBasis, tol: float | None = None, *, validate: bool = True) -> LinkingRep:
    if validate:
        rep = validate_ueb(W, tol)
        if not rep.passed:
            names = ", ".join(r.name for r in rep.failures)
            raise ValidationError(f"not a unitary error basis ({names} failed)")
    n = W.n
    V = np.empty((n, n, n * n, n, n), dtype=complex)
    for r in range(n):
        for s in range(n):
            e = matrix_unit(n, r, s)
            for x, w in enumerate(W.units):
                V[r, s, x] = w.conj().T @ e @ w / n
    return LinkingRep(n, V)


def linking_graphs(n: int) -> dict[str, tuple[qg.QuantumGraph, qg.QuantumGraph]]:
    """(graph on C^{N^2}, graph on (M_N, tr)) for the trivial and complete cases."""
    classical = qs.make_tracial_space([1] * (n * n))
    matrix = qs.make_tracial_space([n])
    return {"trivial": (qg.trivial_graph(classical), qg.trivial_graph(matrix)),
            "complete": (qg.complete_graph(classical), qg.complete_graph(matrix))}


def a4_residual(rep: LinkingRep, A1, A2) -> float:
    """sum_q2 A2[p2, q2] V[q2, p1] = sum_q1 A1[q1, p1] V[p2, q1], standard-basis matrices."""
    Vf = rep.flat()
    lhs = np.einsum("pq,qxab->pxab", A2, Vf)
    rhs = np.einsum("yx,pyab->pxab", A1, Vf)
    return _norm(lhs - rhs)


def check_linking_relations(rep: LinkingRep, tol: float | None = None) -> Report:
    tol = resolve(tol)
    n, V = rep.n, rep.V
    eye = np.eye(n)
    out = Report(f"linking relations (N={n})", tol)
    dxy = np.eye(n * n)

    lhs = np.einsum("rwxab,wsybc->rsxyac", V, V)
    rhs = np.einsum("xy,rsxac->rsxyac", dxy, V)
    out.add("A1a", _norm(lhs - rhs), relation=0)

    lhs = np.einsum("jixab,srxbc->jisrxac", V, V)
    rhs = np.einsum("is,jrxac->jisrxac", eye, V) / n
    out.add("A1b", _norm(lhs - rhs), relation=1)

    out.add("A2", _norm(V.conj().transpose(1, 0, 2, 4, 3) - V), relation=2)

    lhs = n * np.einsum("iixab->xab", V)
    out.add("A3a", _norm(lhs - eye[None]), relation=3)

    lhs = V.sum(axis=2)
    rhs = np.einsum("ij,ab->ijab", eye, eye)
    out.add("A3b", _norm(lhs - rhs), relation=4)

    for idx, (kind, (G1, G2)) in enumerate(linking_graphs(n).items()):
        out.add(f"A4 {kind}", a4_residual(rep, G1.adjacency.standard_matrix(),
                                          G2.adjacency.standard_matrix()), relation=5 + idx)
    return out


# The rectangular unitary of the main theorem

@dataclass(frozen=True, eq=False)
class UMatrix:
    """blocks[x, p] = u^x_p in M_N, with p = i N + j running over the adapted units."""

    blocks: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return self.blocks.shape[:2]

    def flat(self) -> np.ndarray:
        n1, n, k, _ = self.blocks.shape
        return self.blocks.transpose(0, 2, 1, 3).reshape(n1 * k, n * k)

    def residuals(self) -> dict[str, float]:
        f = self.flat()
        return {"u*u = 1": _norm(f.conj().T @ f - np.eye(f.shape[1])),
                "uu* = 1": _norm(f @ f.conj().T - np.eye(f.shape[0]))}


def require_single_block(space: FiniteQuantumSpace, tol: float | None = None) -> int:
    """Block size N of a tracial M_N; multi-block spaces are not verifiable here."""
    tol = resolve(tol)
    if space.num_blocks != 1:
        raise NotVerifiableError(
            "not verifiable at desk scale: no finite-dimensional linking representation "
            "is available for a space with several blocks")
    n = space.block_dims[0]
    if abs(space.delta_sq - n * n) > tol:
        raise NotVerifiableError(
            f"not verifiable at desk scale: delta^2 = {space.delta_sq:g} differs from N^2 = {n * n}")
    return n


def u_matrix(space: FiniteQuantumSpace, rep: LinkingRep, tol: float | None = None) -> UMatrix:
    """u^x_ij = Q_jj^{-1/2} delta^{-1} rho(v^x_ij) with rho(v^x_ij) = N (V^{ji}_x)^t.

    rho is the representation of the opposite linking algebra obtained by
    transposing the Pauli representation.
    """
    n = require_single_block(space, tol)
    if rep.n != n:
        raise ValidationError(f"linking representation is for N={rep.n}, space has N={n}")
    q = space.q_weights[0]
    blocks = np.empty((n * n, n * n, n, n), dtype=complex)
    for x in range(n * n):
        for i in range(n):
            for j in range(n):
                scale = 1 / (math.sqrt(q[j]) * space.delta)
                blocks[x, i * n + j] = scale * n * rep(j, i, x).T
    return UMatrix(blocks)


def cuntz_sym_family(u, tol: float | None = None) -> tuple[list[WordElement], Report]:
    """s^_y = sum_x s_x ⊗ u_xy in O_{n1} ⊗ M_k and its Cuntz relation check.

    ``u`` is an (n1, n) scalar array, an (n1, n, k, k) block array, or a UMatrix.
    """
    tol = resolve(tol)
    blocks = u.blocks if isinstance(u, UMatrix) else np.asarray(u, dtype=complex)
    if blocks.ndim == 2:
        blocks = blocks[:, :, None, None]
    if blocks.ndim != 4 or blocks.shape[2] != blocks.shape[3]:
        raise ValidationError("u must be (n1, n) scalars or (n1, n, k, k) blocks")
    n1, n, k, _ = blocks.shape
    res = UMatrix(blocks).residuals()
    if max(res.values()) > tol:
        raise ValidationError(f"u is not unitary (residuals {res})")
    O = CuntzAlgebra(n1)
    fam = []
    for y in range(n):
        terms = {((x + 1,), ()): blocks[x, y] for x in range(n1)}
        fam.append(O.element(terms))
    one = unit_tensor(O, np.eye(k))
    rep = Report(f"Cuntz relations of s^ (n1={n1}, n={n})", tol)
    for name, r in cuntz_relation_residuals(fam, one).items():
        rep.add(name, r)
    return fam, rep


# Main theorem at desk scale

def _ueb_or_pauli(n: int, W: UnitaryErrorBasis | None) -> UnitaryErrorBasis:
    W = pauli_ueb(n) if W is None else W
    if W.n != n:
        raise ValidationError(f"UEB is for N={W.n}, expected N={n}")
    return W


def main_theorem_check(N, W: UnitaryErrorBasis | None = None, tol: float | None = None) -> Report:
    """Complete quantum graph on (M_N, tr): images under beta^ in O_{N^2} ⊗ M_N.

    ``N`` may also be a FiniteQuantumSpace; only a single tracial block is
    verifiable.
    """
    tol = resolve(tol)
    if isinstance(N, FiniteQuantumSpace):
        space = N
        n = require_single_block(space, tol)
    else:
        n = int(N)
        if n < 2:
            raise ValidationError("main_theorem_check needs N >= 2")
        space = qs.make_tracial_space([n])
    W = _ueb_or_pauli(n, W)
    rep_l = linking_rep(W, tol)
    u = u_matrix(space, rep_l, tol)
    T, cz = cuntz_sym_family(u, tol)
    q = space.q_weights[0]
    beta = {}
    for i in range(n):
        for j in range(n):
            beta[S(1, i + 1, j + 1)] = T[i * n + j] * (1 / (math.sqrt(q[i]) * space.delta))
    O = T[0].algebra
    one = unit_tensor(O, np.eye(n))
    out = Report(f"main theorem (N={n})", tol)
    out.extend(cz, prefix="cuntz")
    pres = qck_presentation(qg.complete_graph(space), tol)
    out.extend(check_assignment(pres, Assignment(O.tag, beta, one), tol), prefix="qck")
    e = O.zero()
    for i in range(n):
        for j in range(n):
            b = beta[S(1, i + 1, j + 1)]
            e = e + b * b.adjoint() * (q[i] * space.delta_sq)
    out.add("unit: e = 1", (e - one).residual())
    out.add("unit: e S = S", max((e * b - b).residual() for b in beta.values()))
    out.add("unit: S e = S", max((b * e - b).residual() for b in beta.values()))
    return out


def unit_element(n: int, W: UnitaryErrorBasis | None = None, coefficient: float | None = None):
    """e = c sum_kl S_kl S_kl^* in O_{N^2} ⊗ M_N; the default c = Q_kk delta^2 = N."""
    space = qs.make_tracial_space([n])
    u = u_matrix(space, linking_rep(_ueb_or_pauli(n, W)))
    T, _ = cuntz_sym_family(u)
    c = float(n) if coefficient is None else coefficient
    e = T[0].algebra.zero()
    for t in T:
        b = t * (1 / math.sqrt(n))
        e = e + b * b.adjoint() * c
    return e


# Embeddings

def _cuntz_index(n: int, r: int, s: int) -> int:
    return (r % n) * n + (s % n) + 1


def sigma_coefficients(rep: LinkingRep, r: int, s: int) -> list[np.ndarray]:
    """sigma_N(S_rs) = sum_x S_x ⊗ (V^{sr}_x)^t; returns the list over x."""
    return [rep(s, r, x).T for x in range(rep.n ** 2)]


def pi_coefficients(rep: LinkingRep, x: int) -> dict[tuple[int, int], np.ndarray]:
    """pi_N(S_x) = N sum_rs S_rs ⊗ V^{rs}_x; returns {(r, s): N V^{rs}_x}."""
    n = rep.n
    return {(r, s): n * rep(r, s, x) for r in range(n) for s in range(n)}


def slice_identities(rep: LinkingRep) -> dict[str, float]:
    """(id ⊗ m)(id ⊗ t ⊗ id) applied to (sigma ⊗ id) pi and (pi ⊗ id) sigma.

    Both composites are linear in the generators, so they are computed on the
    coefficient matrices: the result must be a ⊗ 1 on every generator.
    """
    n = rep.n
    eye = np.eye(n)
    worst_a = 0.0
    for x in range(n * n):
        out = {y: np.zeros((n, n), dtype=complex) for y in range(n * n)}
        for (r, s), P in pi_coefficients(rep, x).items():
            for y, C in enumerate(sigma_coefficients(rep, r, s)):
                out[y] += C.T @ P
        for y, m in out.items():
            worst_a = max(worst_a, _norm(m - (eye if y == x else 0)))
    worst_b = 0.0
    for r in range(n):
        for s in range(n):
            out = {(k, j): np.zeros((n, n), dtype=complex) for k in range(n) for j in range(n)}
            for x, C in enumerate(sigma_coefficients(rep, r, s)):
                for kj, P in pi_coefficients(rep, x).items():
                    out[kj] += P.T @ C
            for kj, m in out.items():
                worst_b = max(worst_b, _norm(m - (eye if kj == (r, s) else 0)))
    return {"slice (sigma ⊗ id) pi = id ⊗ 1": worst_a, "slice (pi ⊗ id) sigma = id ⊗ 1": worst_b}


@dataclass
class Embeddings:
    kind: str
    n: int
    pi: Assignment
    sigma: Assignment
    report: Report
    rep: LinkingRep = field(repr=False, default=None)


def _complete_realisation(n: int):
    """O_{N^2} with S_x = s_(x+1) and S_rs = N^{-1/2} s_(rN+s+1)."""
    O = CuntzAlgebra(n * n)
    return O, (lambda x: O.generator(x + 1)), (lambda r, s: O.generator(_cuntz_index(n, r, s)) * (1 / math.sqrt(n)))


def _linear_image(coeffs: Mapping, basis) -> WordElement:
    out = None
    for key, m in coeffs.items():
        term = tensor(basis(*key) if isinstance(key, tuple) else basis(key), m)
        out = term if out is None else out + term
    return out


def sigma_images(rep: LinkingRep, basis) -> dict:
    n = rep.n
    return {(r, s): _linear_image(dict(enumerate(sigma_coefficients(rep, r, s))), basis)
            for r in range(n) for s in range(n)}


def pi_images(rep: LinkingRep, basis) -> dict:
    return {x: _linear_image(pi_coefficients(rep, x), basis) for x in range(rep.n ** 2)}


def shat(C, n: int, S_elem) -> dict:
    """s^_ij = sum_k e_ki S e_jk in the amplification algebra (0-based i, j)."""
    e = {(i, j): C.matrix_unit(0, i + 1, j + 1) for i in range(n) for j in range(n)}
    return {(i, j): sum((e[k, i] * S_elem * e[j, k] for k in range(n)), C.zero())
            for i in range(n) for j in range(n)}


def amplified_pi(rep: LinkingRep, C, S_elem=None) -> dict:
    """G(pi_N(S_x)) = sum_rs sum_ab N (V^{rs}_x)_ab s^_rs e_ab in M_N *_1 (C(S^1) ⊕ C)."""
    n = rep.n
    S_elem = C.letter(1, 1) if S_elem is None else S_elem
    sh = shat(C, n, S_elem)
    out = {}
    for x in range(n * n):
        total = C.zero()
        for (r, s), P in pi_coefficients(rep, x).items():
            total = total + sh[r, s] * C.from_matrix(0, P)
        out[x] = total
    return out


def amplified_pi_closed_form(n: int, C, x: int, S_elem=None) -> WordElement:
    """sum_rs omega^{k(s-r)} e_{r-l, r} S e_{s, s-l} for x = (k, l)."""
    S_elem = C.letter(1, 1) if S_elem is None else S_elem
    k, l = pauli_label(n, x)
    w = omega(n)
    total = C.zero()
    for r in range(n):
        for s in range(n):
            c = w ** ((k * (s - r)) % n)
            left = C.matrix_unit(0, (r - l) % n + 1, r + 1)
            right = C.matrix_unit(0, s + 1, (s - l) % n + 1)
            total = total + left * S_elem * right * complex(c)
    return total


def embeddings(N: int, kind: str = "complete", W: UnitaryErrorBasis | None = None,
               tol: float | None = None) -> Embeddings:
    tol = resolve(tol)
    n = int(N)
    if n < 2:
        raise ValidationError("embeddings need N >= 2")
    if kind not in ("complete", "trivial"):
        raise ValidationError(f"kind must be 'complete' or 'trivial', got {kind!r}")
    rep = linking_rep(_ueb_or_pauli(n, W), tol)
    out = Report(f"embeddings {kind} (N={n})", tol)
    for name, r in slice_identities(rep).items():
        out.add(name, r)
    matrix_space = qs.make_tracial_space([n])
    if kind == "complete":
        O, S1, S2 = _complete_realisation(n)
        one = unit_tensor(O, np.eye(n))
        pi = pi_images(rep, S2)
        sigma = sigma_images(rep, S1)
        for name, r in cuntz_relation_residuals([pi[x] for x in range(n * n)], one).items():
            out.add(f"pi: cuntz {name}", r)
        pres = qck_presentation(qg.complete_graph(matrix_space), tol)
        sig = Assignment(O.tag, {S(1, r + 1, s + 1): v for (r, s), v in sigma.items()}, one)
        out.extend(check_assignment(pres, sig, tol), prefix="sigma: qck")
        pi_asg = Assignment(O.tag, {S(x + 1, 1, 1): v for x, v in pi.items()}, one)
        return Embeddings(kind, n, pi_asg, sig, out, rep)

    F = FreeCircleProduct(n * n)
    sigma = sigma_images(rep, lambda x: F.generator(x + 1))
    pres = qck_presentation(qg.trivial_graph(matrix_space), tol)
    sig = Assignment(F.tag, {S(1, r + 1, s + 1): v for (r, s), v in sigma.items()}, None)
    out.extend(check_assignment(pres, sig, tol), prefix="sigma: qck")
    C = amplification_algebra(n)
    pi = amplified_pi(rep, C)
    for x, P in pi.items():
        Ps = P.adjoint()
        out.add(f"pi: partial isometry ({x})", (P * Ps * P - P).residual())
        out.add(f"pi: normal ({x})", (P * Ps - Ps * P).residual())
        out.add(f"pi: closed form ({x})", (P - amplified_pi_closed_form(n, C, x)).residual())
    pi_asg = Assignment(C.tag, {S(x + 1, 1, 1): v for x, v in pi.items()}, C.one())
    return Embeddings(kind, n, pi_asg, sig, out, rep)


# Crossed products

@dataclass(frozen=True, eq=False)
class EntangledFrame:
    """xi_jk = N^{-1/2} sum_r X^j Z^k |r> ⊗ |r>; V(|j> ⊗ |k>) = omega^{-jk} xi_jk."""

    n: int
    xi: np.ndarray
    V: np.ndarray

    def projection(self, l: int, m: int) -> np.ndarray:
        v = self.xi[l % self.n, m % self.n]
        return np.outer(v, v.conj())


def entangled_frame(n: int) -> EntangledFrame:
    W = pauli_ueb(n)
    om = max_entangled(n)
    eye = np.eye(n)
    xi = np.empty((n, n, n * n), dtype=complex)
    V = np.empty((n * n, n * n), dtype=complex)
    w = omega(n)
    for j in range(n):
        for k in range(n):
            xi[j, k] = np.kron(W[j * n + k], eye) @ om
            V[:, j * n + k] = w ** (-(j * k) % n) * xi[j, k]
    return EntangledFrame(n, xi, V)


def frame_identities(n: int) -> dict[str, float]:
    X, Z = pauli_matrices(n)
    eye = np.eye(n)
    fr = entangled_frame(n)
    Vh = fr.V.conj().T
    xi = fr.xi.reshape(n * n, n * n)
    return {"xi orthonormal": _norm(xi.conj() @ xi.T - np.eye(n * n)),
            "V unitary": _norm(Vh @ fr.V - np.eye(n * n)),
            "V*(1⊗X)V = Z⊗1": _norm(Vh @ np.kron(eye, X) @ fr.V - np.kron(Z, eye)),
            "V*(1⊗Z*)V = X⊗Z": _norm(Vh @ np.kron(eye, Z.conj().T) @ fr.V - np.kron(X, Z))}


def weyl_identities(n: int) -> dict[str, float]:
    X, Z = pauli_matrices(n)
    w = omega(n)
    Zs = Z.conj().T
    return {"XZ = omega ZX": _norm(X @ Z - w * Z @ X),
            "(1⊗Z*)(1⊗X) = omega (1⊗X)(1⊗Z*)": _norm(Zs @ X - w * X @ Zs)}


def _formal_basis(n: int):
    """Formal generators of FO(T M_N) in the free *-algebra (linear identities only)."""
    return lambda r, s: FREE.gen(S(1, r % n + 1, s % n + 1))


def crossed_product_identities(N: int, kind: str = "complete", W: UnitaryErrorBasis | None = None,
                               tol: float | None = None) -> Report:
    tol = resolve(tol)
    n = int(N)
    if n < 2:
        raise ValidationError("crossed products need N >= 2")
    if kind not in ("complete", "trivial"):
        raise ValidationError(f"kind must be 'complete' or 'trivial', got {kind!r}")
    rep = linking_rep(_ueb_or_pauli(n, W), tol)
    # beta_1(S_kl) = S_{k-1,l}; Z^* conjugation shifts pi_N(S_kl) to S_{k,l+1}
    X, Z = pauli_matrices(n)
    Zs = Z.conj().T
    w = omega(n)
    out = Report(f"crossed products {kind} (N={n})", tol)

    if kind == "complete":
        O, S1, S2 = _complete_realisation(n)
        sigma = sigma_images(rep, S1)
        pi = pi_images(rep, S2)
    else:
        F = FreeCircleProduct(n * n)
        sigma = sigma_images(rep, lambda x: F.generator(x + 1))
        S2 = _formal_basis(n)
        pi = pi_images(rep, S2)

    worst = {"alpha_1": 0.0, "alpha_2": 0.0, "beta_1": 0.0, "beta_2": 0.0}
    for j in range(n):
        for k in range(n):
            sj = sigma[j, k]
            worst["alpha_1"] = max(worst["alpha_1"], (conjugate_leg(X, sj) - sj * (w ** ((j - k) % n))).residual())
            worst["alpha_2"] = max(worst["alpha_2"], (conjugate_leg(Zs, sj) - sigma[(j - 1) % n, (k - 1) % n]).residual())
            x = j * n + k
            px = pi[x]
            worst["beta_1"] = max(worst["beta_1"], (conjugate_leg(X, px) - pi[((j - 1) % n) * n + k]).residual())
            worst["beta_2"] = max(worst["beta_2"], (conjugate_leg(Zs, px) - pi[j * n + (k + 1) % n]).residual())
    for name, r in worst.items():
        out.add(f"(i) covariance {name}", r)
    if kind == "trivial":
        C = amplification_algebra(n)
        amp = amplified_pi(rep, C)
        Xc, Xcs = C.from_matrix(0, X), C.from_matrix(0, X.conj().T)
        Zc, Zcs = C.from_matrix(0, Z), C.from_matrix(0, Zs)
        b1 = b2 = 0.0
        for j in range(n):
            for k in range(n):
                px = amp[j * n + k]
                b1 = max(b1, (Xc * px * Xcs - amp[((j - 1) % n) * n + k]).residual())
                b2 = max(b2, (Zcs * px * Zc - amp[j * n + (k + 1) % n]).residual())
        out.add("(i) covariance beta_1 in amplification model", b1)
        out.add("(i) covariance beta_2 in amplification model", b2)

    for name, r in weyl_identities(n).items():
        out.add(f"(ii) Weyl {name}", r)
    for name, r in frame_identities(n).items():
        out.add(f"(iii) frame {name}", r)

    fr = entangled_frame(n)
    spectral = diag = 0.0
    for j in range(n):
        for k in range(n):
            lhs = None
            for x, C_ in enumerate(sigma_coefficients(rep, j, k)):
                for (r, s), P in pi_coefficients(rep, x).items():
                    term = tensor(S2(r, s), np.kron(P, C_))
                    lhs = term if lhs is None else lhs + term
            rhs = None
            for l in range(n):
                for m in range(n):
                    # alpha_1^{-l} alpha_2^{-m}(S_jk) = omega^{-l(j-k)} S_{j+m, k+m}
                    c = w ** ((-l * (j - k)) % n)
                    term = tensor(S2(j + m, k + m), c * fr.projection(l, m))
                    rhs = term if rhs is None else rhs + term
            spectral = max(spectral, (lhs - rhs).residual())
            # Ad(1 ⊗ V^*) diagonalises the image over e_ll ⊗ e_mm
            conj = lhs.map_coefficients(lambda c_: fr.V.conj().T @ c_ @ fr.V)
            target = None
            for l in range(n):
                for m in range(n):
                    c = w ** ((-l * (j - k)) % n)
                    term = tensor(S2(j + m, k + m), c * np.kron(matrix_unit(n, l, l), matrix_unit(n, m, m)))
                    target = term if target is None else target + term
            diag = max(diag, (conj - target).residual())
    out.add("(iv) spectral decomposition over xi_ln", spectral)
    out.add("(iv) Ad(1⊗V*) gives the diagonal form", diag)
    return out


# Amplification model

def _F_letter(f: int, letter, n: int, FS: MatrixOver):
    if f == 0:
        i, j = letter
        return _unit_matrix(n, i - 1, j - 1)
    if letter > 0:
        out = FS
        for _ in range(letter - 1):
            out = out * FS
        return out
    if letter < 0:
        FSs = FS.adjoint()
        out = FSs
        for _ in range(-letter - 1):
            out = out * FSs
        return out
    return FS.adjoint() * FS


def _unit_matrix(n: int, i: int, j: int) -> MatrixOver:
    return MatrixOver.single(n, i, j, FREE.one(), FREE.zero())


def apply_F(elem: WordElement, n: int) -> MatrixOver:
    """F: M_N *_1 (C(S^1) ⊕ C) -> M_N(FO(T M_N)^+), F(e_ij) = 1 ⊗ e_ij, F(S) = sum S_ij ⊗ e_ij."""
    FS = MatrixOver([[FREE.gen(S(1, i + 1, j + 1)) for j in range(n)] for i in range(n)])
    one = MatrixOver.diagonal([FREE.one()] * n, FREE.zero())
    total = one.zero()
    for word, c in elem.terms.items():
        img = one
        for f, letter in word:
            img = img * _F_letter(f, letter, n, FS)
        total = total + img * c
    return total


def apply_G(m: MatrixOver, C, sh: dict) -> WordElement:
    """G(sum_ab x_ab ⊗ e_ab) = sum_ab g(x_ab) e_ab with g(S_ij) = s^_ij."""
    n = m.size
    images = {S(1, i + 1, j + 1): v for (i, j), v in sh.items()}
    total = C.zero()
    for a in range(n):
        for b in range(n):
            x = m.entries[a][b]
            if not x.terms:
                continue
            total = total + substitute(x, images, one=C.one()) * C.matrix_unit(0, a + 1, b + 1)
    return total


def amplification_model_check(N: int, S_elem=None, tol: float | None = None) -> Report:
    """FO(T M_N) inside M_N *_1 (C(S^1) ⊕ C) via s^_ij = sum_k e_ki S e_jk.

    ``S_elem`` replaces the generator S, for negative tests.
    """
    tol = resolve(tol)
    n = int(N)
    if not 1 <= n <= 3:
        raise ValidationError("amplification_model_check supports 1 <= N <= 3")
    C = amplification_algebra(n)
    S_gen = C.letter(1, 1)
    S_use = S_gen if S_elem is None else S_elem
    sh = shat(C, n, S_use)
    out = Report(f"amplification model (N={n})", tol)

    loop = qg.from_classical(qg.ClassicalGraph.from_edges([1], [(1, 1)]))
    pres = qck_presentation(qg.amplify(loop, n), tol)
    asg = Assignment(C.tag, {S(1, i + 1, j + 1): v for (i, j), v in sh.items()}, C.one())
    out.extend(check_assignment(pres, asg, tol), prefix="(i) relations")

    comm = 0.0
    for (i, j), v in sh.items():
        for k in range(n):
            for l in range(n):
                e = C.matrix_unit(0, k + 1, l + 1)
                comm = max(comm, (v * e - e * v).residual())
    out.add("(ii) commutes with every e_kl", comm)

    Sh = MatrixOver([[sh[i, j] for j in range(n)] for i in range(n)])
    P = Sh.adjoint() * Sh
    one = Sh.one()
    out.add("(iii) S^*S idempotent", (P * P - P).residual())
    out.add("(iii) S^*S self-adjoint", (P.adjoint() - P).residual())
    U = Sh - (one - P)
    out.add("(iii) S - (1 - S^*S) unitary: U^*U = 1", (U.adjoint() * U - one).residual())
    out.add("(iii) S - (1 - S^*S) unitary: UU^* = 1", (U * U.adjoint() - one).residual())

    sh_gen = shat(C, n, S_gen)
    fg = 0.0
    for i in range(n):
        for j in range(n):
            lhs = apply_F(sh_gen[i, j], n)
            rhs = MatrixOver.diagonal([FREE.gen(S(1, i + 1, j + 1))] * n, FREE.zero())
            fg = max(fg, (lhs - rhs).residual())
            lhs = apply_F(C.matrix_unit(0, i + 1, j + 1), n)
            fg = max(fg, (lhs - _unit_matrix(n, i, j)).residual())
    out.add("(iv) F∘G = id on generators", fg)
    gf = (apply_G(apply_F(S_gen, n), C, sh_gen) - S_gen).residual()
    for i in range(n):
        for j in range(n):
            e = C.matrix_unit(0, i + 1, j + 1)
            gf = max(gf, (apply_G(apply_F(e, n), C, sh_gen) - e).residual())
    out.add("(iv) G∘F = id on generators", gf)
    return out


__all__ = [
    "EntangledFrame", "Embeddings", "LinkingRep", "UMatrix", "UnitaryErrorBasis",
    "amplification_model_check", "check_linking_relations", "crossed_product_identities",
    "cuntz_sym_family", "dumps_ueb", "embeddings", "entangled_frame", "linking_rep", "loads_ueb",
    "main_theorem_check", "pauli_matrices", "pauli_ueb", "u_matrix", "ueb_from_dict",
    "ueb_to_dict", "validate_ueb",
]
