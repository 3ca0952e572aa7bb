"""Classical directed graphs and quantum adjacency matrices.

A quantum adjacency matrix on a quantum space (B, psi) is stored as a dense
``dim x dim`` complex matrix over the adapted units, column = source unit
f^a_ij, row = target unit f^b_rs, so that

    A(f^a_ij) = sum_{b,r,s} matrix[idx(b,r,s), idx(a,i,j)] f^b_rs.

The defining axiom is m (A ⊗ A) m^* = delta^2 A.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Hashable, Mapping, Sequence

import networkx as nx
import numpy as np

from . import qspace as qs
from .errors import ValidationError
from .qspace import BlockIndex, FiniteQuantumSpace
from .tolerance import resolve

LEXICOGRAPHIC = "lexicographic (a1, a2)"


# Classical graphs

@dataclass(frozen=True)
class ClassicalGraph:
    """A finite directed graph; ``edges`` are (source, range) pairs."""

    vertices: tuple
    edges: tuple[tuple[Hashable, Hashable], ...]

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValidationError("vertex labels must be distinct")
        for e in self.edges:
            if len(e) != 2 or e[0] not in vs or e[1] not in vs:
                raise ValidationError(f"edge {e!r} has an endpoint outside the vertex set")

    @classmethod
    def from_edges(cls, vertices: Sequence[Hashable], edges: Sequence[Sequence[Hashable]]):
        return cls(tuple(vertices), tuple((e[0], e[1]) for e in edges))

    @classmethod
    def from_matrix(cls, matrix) -> "ClassicalGraph":
        """Graph with B(i, j) parallel edges from vertex i to vertex j (0-based labels)."""
        m = np.asarray(matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValidationError("adjacency matrix must be square")
        if np.any(m < 0) or np.any(m != np.round(m)):
            raise ValidationError("adjacency matrix entries must be non-negative integers")
        n = m.shape[0]
        edges = [(i, j) for i in range(n) for j in range(n) for _ in range(int(m[i, j]))]
        return cls(tuple(range(n)), tuple(edges))

    def source(self, e: int):
        return self.edges[e][0]

    def range(self, e: int):
        return self.edges[e][1]

    @property
    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def out_edges(self, v) -> list[int]:
        return [k for k, (s, _) in enumerate(self.edges) if s == v]

    def in_edges(self, v) -> list[int]:
        return [k for k, (_, r) in enumerate(self.edges) if r == v]

    @property
    def sinks(self) -> list:
        """Vertices emitting no edges."""
        return [v for v in self.vertices if not self.out_edges(v)]

    @property
    def sources(self) -> list:
        """Vertices receiving no edges."""
        return [v for v in self.vertices if not self.in_edges(v)]

    def vertex_index(self, v) -> int:
        return self.vertices.index(v)

    def adjacency_matrix(self) -> np.ndarray:
        """B_E(v, w) = number of edges from v to w."""
        n = len(self.vertices)
        out = np.zeros((n, n), dtype=int)
        for s, r in self.edges:
            out[self.vertex_index(s), self.vertex_index(r)] += 1
        return out

    def edge_matrix(self) -> np.ndarray:
        """A_E(e, f) = 1 iff r(e) = s(f)."""
        m = len(self.edges)
        out = np.zeros((m, m), dtype=int)
        for e, (_, r) in enumerate(self.edges):
            for f, (s, _) in enumerate(self.edges):
                if r == s:
                    out[e, f] = 1
        return out

    def line_graph(self) -> "ClassicalGraph":
        """Vertices are edge positions 0..|E^1|-1; e -> f whenever r(e) = s(f)."""
        a = self.edge_matrix()
        m = len(self.edges)
        return ClassicalGraph(tuple(range(m)),
                              tuple((e, f) for e in range(m) for f in range(m) if a[e, f]))

    def to_networkx(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    @property
    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.to_networkx())


def line_graph(E: ClassicalGraph) -> ClassicalGraph:
    return E.line_graph()


def edge_matrix(E: ClassicalGraph) -> np.ndarray:
    return E.edge_matrix()


def adjacency_matrix(E: ClassicalGraph) -> np.ndarray:
    return E.adjacency_matrix()


def complete_classical(n: int) -> ClassicalGraph:
    """K_n with all n^2 edges, loops included."""
    return ClassicalGraph.from_matrix(np.ones((n, n), dtype=int))


def classical_to_dict(E: ClassicalGraph) -> dict:
    return {"vertices": list(E.vertices), "edges": [list(e) for e in E.edges]}


def classical_from_dict(data: Mapping) -> ClassicalGraph:
    try:
        verts = [_hashable(v) for v in data["vertices"]]
        edges = [(_hashable(e[0]), _hashable(e[1])) for e in data["edges"]]
    except (KeyError, TypeError, IndexError) as exc:
        raise ValidationError(f"malformed graph JSON: {exc}") from exc
    return ClassicalGraph.from_edges(verts, edges)


def _hashable(v):
    return tuple(v) if isinstance(v, list) else v


# Quantum adjacency matrices

@dataclass(frozen=True, eq=False)
class QuantumAdjacency:
    space: FiniteQuantumSpace
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (self.space.dim, self.space.dim):
            raise ValidationError(
                f"adjacency has shape {m.shape}, space needs {(self.space.dim, self.space.dim)}")
        object.__setattr__(self, "matrix", m)

    def coeff(self, source: BlockIndex, target: BlockIndex) -> complex:
        """A^{rsb}_{ija} for source (a,i,j) and target (b,r,s)."""
        return complex(self.matrix[self.space.index(target), self.space.index(source)])

    def terms(self, tol: float = 0.0) -> dict[tuple[BlockIndex, BlockIndex], complex]:
        basis = self.space.basis
        rows, cols = np.nonzero(np.abs(self.matrix) > tol)
        return {(basis[c], basis[r]): complex(self.matrix[r, c]) for r, c in zip(rows, cols)}

    def apply(self, x: qs.AlgebraVector) -> qs.AlgebraVector:
        return qs.AlgebraVector(self.space, qs.ADAPTED, self.matrix @ x.to(qs.ADAPTED).coeffs)

    def standard_matrix(self) -> np.ndarray:
        """The same operator in the standard matrix-unit basis."""
        s = self.space.adapted_scale
        return (self.matrix * s[None, :]) / s[:, None]

    def block(self, b: int, a: int) -> np.ndarray:
        """Coefficient tensor T[r, s, i, j] = A^{rsb}_{ija} (0-based blocks)."""
        S = self.space
        nb, na = S.block_dims[b], S.block_dims[a]
        ob, oa = S.offsets[b], S.offsets[a]
        sub = self.matrix[ob:ob + nb * nb, oa:oa + na * na]
        return sub.reshape(nb, nb, na, na)


@dataclass(frozen=True)
class AdjacencyCheck:
    coefficient_residual: float
    operator_residual: float
    tolerance: float

    @property
    def residual(self) -> float:
        return max(self.coefficient_residual, self.operator_residual)

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance

    def to_dict(self) -> dict:
        return {"coefficient_residual": self.coefficient_residual,
                "operator_residual": self.operator_residual,
                "tolerance": self.tolerance, "pass": self.passed}


@dataclass(frozen=True, eq=False)
class QuantumGraph:
    space: FiniteQuantumSpace
    adjacency: QuantumAdjacency
    block_order: str | None = field(default=None)

    @classmethod
    def build(cls, space: FiniteQuantumSpace, matrix, *, validate: bool = True,
              tol: float | None = None, block_order: str | None = None) -> "QuantumGraph":
        adj = QuantumAdjacency(space, np.asarray(matrix, dtype=complex))
        if validate:
            rep = check_quantum_adjacency(space, adj, tol)
            if not rep.passed:
                raise ValidationError(
                    f"not a quantum adjacency matrix: residual {rep.residual:.3e}")
        return cls(space, adj, block_order)

    @property
    def matrix(self) -> np.ndarray:
        return self.adjacency.matrix

    def check(self, tol: float | None = None) -> AdjacencyCheck:
        return check_quantum_adjacency(self.space, self.adjacency, tol)


def _as_adjacency(space: FiniteQuantumSpace, A) -> QuantumAdjacency:
    if isinstance(A, QuantumAdjacency):
        if A.space != space:
            raise ValidationError("adjacency lives over a different space")
        return A
    if isinstance(A, QuantumGraph):
        return _as_adjacency(space, A.adjacency)
    return QuantumAdjacency(space, np.asarray(A, dtype=complex))


def coefficient_residual(space: FiniteQuantumSpace, A) -> float:
    """max |sum_ks Q_b^{-1}_ss A^{rsb}_{ika} A^{snb}_{kja} - delta^2 A^{rnb}_{ija}|."""
    adj = _as_adjacency(space, A)
    worst = 0.0
    for b, nb in enumerate(space.block_dims):
        qinv = 1.0 / np.asarray(space.q_weights[b])
        for a in range(space.num_blocks):
            T = adj.block(b, a)
            lhs = np.einsum("s,rsik,snkj->rnij", qinv, T, T)
            worst = max(worst, float(np.abs(lhs - space.delta_sq * T).max()))
    return worst


def _sandwich(space: FiniteQuantumSpace, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """m (A ⊗ B) m^* as a dense matrix in the adapted basis."""
    n = space.dim
    M = qs.multiplication_matrix(space).reshape(n, n, n)
    D = qs.comultiplication_matrix(space).reshape(n, n, n)
    X = np.einsum("sS,RSq->Rsq", B, D)
    Y = np.einsum("rR,Rsq->rsq", A, X)
    return np.einsum("prs,rsq->pq", M, Y)


def operator_residual(space: FiniteQuantumSpace, A) -> float:
    """max-coefficient norm of (m (A⊗A) m^* - delta^2 A) applied to each adapted unit."""
    a = _as_adjacency(space, A).matrix
    return float(np.abs(_sandwich(space, a, a) - space.delta_sq * a).max())


def check_quantum_adjacency(space_or_graph, A=None, tol: float | None = None) -> AdjacencyCheck:
    """Both residuals of the quantum adjacency axiom.

    Accepts ``(graph)`` or ``(space, adjacency)`` where adjacency may be a
    raw matrix, so invalid operators can be checked too.
    """
    if isinstance(space_or_graph, QuantumGraph):
        space, A = space_or_graph.space, space_or_graph.adjacency
    else:
        space = space_or_graph
        if A is None:
            raise ValidationError("an adjacency operator is required")
    return AdjacencyCheck(coefficient_residual(space, A), operator_residual(space, A), resolve(tol))


def schur(space: FiniteQuantumSpace, A, B) -> QuantumAdjacency:
    """delta^{-2} m (A ⊗ B) m^*."""
    a = _as_adjacency(space, A).matrix
    b = _as_adjacency(space, B).matrix
    return QuantumAdjacency(space, _sandwich(space, a, b) / space.delta_sq)


# Constructions

def from_classical(E: ClassicalGraph) -> QuantumGraph:
    """Quantum graph on C^{E^0} with the uniform state and A(e_i) = sum_j B_E(i, j) e_j."""
    if not E.is_simple:
        raise ValidationError("from_classical needs a simple graph (no parallel edges)")
    if not E.vertices:
        raise ValidationError("graph has no vertices")
    space = qs.make_tracial_space([1] * len(E.vertices))
    return QuantumGraph.build(space, E.adjacency_matrix().T.astype(complex))


def to_classical(G: QuantumGraph, tol: float | None = None) -> np.ndarray:
    """Read B(i, j) back from a graph over a commutative space."""
    tol = resolve(tol)
    if not G.space.is_commutative:
        raise ValidationError("to_classical needs a commutative space (all blocks 1x1)")
    B = G.matrix.T
    if np.abs(B.imag).max(initial=0.0) > tol:
        raise ValidationError("classical adjacency must be real")
    R = B.real
    if np.abs(R - np.round(R)).max(initial=0.0) <= tol:
        return np.round(R).astype(int)
    return R


def complete_graph(space: FiniteQuantumSpace) -> QuantumGraph:
    """A(x) = delta^2 psi(x) 1, i.e. A^{klb}_{ija} = delta_ij delta_kl delta^2 Q_(b)kk."""
    m = np.zeros((space.dim, space.dim), dtype=complex)
    diag_idx = [(space.index(b), space.q_weights[b.a - 1][b.i - 1])
                for b in space.basis if b.i == b.j]
    for src, _ in diag_idx:
        for tgt, q in diag_idx:
            m[tgt, src] = space.delta_sq * q
    return QuantumGraph(space, QuantumAdjacency(space, m))


def trivial_graph(space: FiniteQuantumSpace) -> QuantumGraph:
    return QuantumGraph(space, QuantumAdjacency(space, np.eye(space.dim, dtype=complex)))


def _diag_blocks(space: FiniteQuantumSpace, x_coeffs) -> list[np.ndarray]:
    if isinstance(x_coeffs, Mapping):
        blocks = [np.zeros((n, n), dtype=complex) for n in space.block_dims]
        for bi, v in x_coeffs.items():
            bi = bi if isinstance(bi, BlockIndex) else BlockIndex(*bi)
            space.check_index(bi)
            blocks[bi.a - 1][bi.i - 1, bi.j - 1] = v
        return blocks
    blocks = [np.asarray(x, dtype=complex) for x in x_coeffs]
    if len(blocks) != space.num_blocks or any(
            b.shape != (n, n) for b, n in zip(blocks, space.block_dims)):
        raise ValidationError("diagonal coefficients need one N_a x N_a array per block")
    return blocks


def diagonal_condition_residual(space: FiniteQuantumSpace, x_coeffs) -> float:
    """max |sum_s Q^{-1}_ss x_ks x_sl - delta^2 x_kl| over all blocks."""
    worst = 0.0
    for b, x in enumerate(_diag_blocks(space, x_coeffs)):
        qinv = 1.0 / np.asarray(space.q_weights[b])
        lhs = np.einsum("s,ks,sl->kl", qinv, x, x)
        worst = max(worst, float(np.abs(lhs - space.delta_sq * x).max()))
    return worst


def diagonal_graph(space: FiniteQuantumSpace, x_coeffs, tol: float | None = None) -> QuantumGraph:
    """A(f^a_ij) = x^a_ij f^a_ij, validated against the diagonal condition."""
    tol = resolve(tol)
    blocks = _diag_blocks(space, x_coeffs)
    res = diagonal_condition_residual(space, blocks)
    if res > tol:
        raise ValidationError(f"diagonal coefficients violate the adjacency condition (residual {res:.3e})")
    diag = np.concatenate([b.reshape(-1) for b in blocks])
    return QuantumGraph(space, QuantumAdjacency(space, np.diag(diag)))


def direct_sum_space(S1: FiniteQuantumSpace, S2: FiniteQuantumSpace) -> FiniteQuantumSpace:
    d2 = S1.delta_sq + S2.delta_sq
    c1, c2 = S1.delta_sq / d2, S2.delta_sq / d2
    q = [tuple(c1 * x for x in q) for q in S1.q_weights] + [tuple(c2 * x for x in q) for q in S2.q_weights]
    return FiniteQuantumSpace(S1.block_dims + S2.block_dims, tuple(q), d2)


def direct_sum(G1: QuantumGraph, G2: QuantumGraph) -> QuantumGraph:
    """Blocks of G1 first; states reweighted by delta_k^2 / delta^2."""
    space = direct_sum_space(G1.space, G2.space)
    n1, n2 = G1.space.dim, G2.space.dim
    m = np.zeros((n1 + n2, n1 + n2), dtype=complex)
    m[:n1, :n1] = G1.matrix
    m[n1:, n1:] = G2.matrix
    return QuantumGraph(space, QuantumAdjacency(space, m))


def tensor_space(S1: FiniteQuantumSpace, S2: FiniteQuantumSpace) -> tuple[FiniteQuantumSpace, np.ndarray]:
    """S1 ⊗ S2 with blocks ordered lexicographically in (a1, a2).

    Returns the space and ``perm`` with perm[p1 * dim2 + p2] the flat index of
    f_p1 ⊗ f_p2; inside a block the row index is i1 * N2 + i2.
    """
    dims, qw = [], []
    for n1, q1 in zip(S1.block_dims, S1.q_weights):
        for n2, q2 in zip(S2.block_dims, S2.q_weights):
            dims.append(n1 * n2)
            qw.append(tuple(float(x) for x in np.outer(q1, q2).reshape(-1)))
    space = FiniteQuantumSpace(tuple(dims), tuple(qw), S1.delta_sq * S2.delta_sq)
    perm = np.empty(S1.dim * S2.dim, dtype=int)
    d2 = S2.num_blocks
    for p1, b1 in enumerate(S1.basis):
        for p2, b2 in enumerate(S2.basis):
            n2 = S2.block_dims[b2.a - 1]
            a = (b1.a - 1) * d2 + b2.a
            i = (b1.i - 1) * n2 + b2.i
            j = (b1.j - 1) * n2 + b2.j
            perm[p1 * S2.dim + p2] = space.index(BlockIndex(a, i, j))
    return space, perm


def tensor(G1: QuantumGraph, G2: QuantumGraph) -> QuantumGraph:
    space, perm = tensor_space(G1.space, G2.space)
    m = np.zeros((space.dim, space.dim), dtype=complex)
    m[np.ix_(perm, perm)] = np.kron(G1.matrix, G2.matrix)
    return QuantumGraph(space, QuantumAdjacency(space, m), LEXICOGRAPHIC)


def amplify(G: QuantumGraph, n: int) -> QuantumGraph:
    """G ⊗ (trivial graph on (M_n, tr))."""
    if n < 1:
        raise ValidationError("amplification size must be >= 1")
    return tensor(G, trivial_graph(qs.make_tracial_space([n])))


# Choi-Jamiolkowski correspondence (tracial spaces)

def _require_tracial(space: FiniteQuantumSpace, tol: float | None = None) -> None:
    if not space.is_tracial(tol):
        raise ValidationError("the Choi-Jamiolkowski correspondence needs the tracial delta-form")


def choi_jamiolkowski(space: FiniteQuantumSpace, A, tol: float | None = None) -> np.ndarray:
    """P_A = (1/dim B) (1 ⊗ A) m^*(1) as a dim x dim array over f_p ⊗ f_q."""
    _require_tracial(space, tol)
    a = _as_adjacency(space, A).matrix
    ms = qs.mstar(space, qs.unit(space))
    return (ms @ a.T) / space.dim


def cj_inverse(space: FiniteQuantumSpace, P, tol: float | None = None) -> QuantumAdjacency:
    """Solve P = (1/dim B)(1 ⊗ A) m^*(1) for A."""
    _require_tracial(space, tol)
    P = np.asarray(P, dtype=complex)
    if P.shape != (space.dim, space.dim):
        raise ValidationError(f"P must have shape {(space.dim, space.dim)}")
    ms = qs.mstar(space, qs.unit(space))
    if np.linalg.matrix_rank(ms) < space.dim:
        raise ValidationError("Choi-Jamiolkowski system is singular")
    at = np.linalg.solve(ms, space.dim * P)
    return QuantumAdjacency(space, at.T)


def cj_product(space: FiniteQuantumSpace, P1, P2) -> np.ndarray:
    """Product in B ⊗ B^op: (x ⊗ y)(x' ⊗ y') = x x' ⊗ y' y."""
    c = qs.structure_constants(space)
    return np.einsum("pq,PQ,pPr,Qqs->rs", np.asarray(P1), np.asarray(P2), c, c)


def cj_idempotency_residual(space: FiniteQuantumSpace, A) -> float:
    P = choi_jamiolkowski(space, A)
    return float(np.abs(cj_product(space, P, P) - P).max())


def _vec(m: np.ndarray) -> np.ndarray:
    return np.asarray(m, dtype=complex).reshape(-1)


def subspace_idempotent(n: int, basis_S: Sequence[np.ndarray],
                        basis_R: Sequence[np.ndarray] | None = None,
                        tol: float | None = None) -> np.ndarray:
    """The n^2 x n^2 matrix of the projection onto S along R acting on vec(T)."""
    tol = resolve(tol)
    S = np.stack([_vec(b) for b in basis_S], axis=1) if len(basis_S) else np.zeros((n * n, 0))
    if S.shape[0] != n * n:
        raise ValidationError(f"subspace basis elements must be {n}x{n} matrices")
    if np.linalg.matrix_rank(S, tol=1e-10) < S.shape[1]:
        raise ValidationError("subspace basis is linearly dependent")
    if basis_R is None:
        # trace-orthogonal complement: <X, Y> = Tr(X^* Y) is the standard vec inner product
        u, sv, _ = np.linalg.svd(S, full_matrices=True)
        R = u[:, S.shape[1]:]
    else:
        R = np.stack([_vec(b) for b in basis_R], axis=1) if len(basis_R) else np.zeros((n * n, 0))
    full = np.concatenate([S, R], axis=1)
    if full.shape[1] != n * n or np.linalg.matrix_rank(full, tol=1e-10) < n * n:
        raise ValidationError("S and R do not form a direct sum decomposition of M_n")
    sel = np.diag([1.0] * S.shape[1] + [0.0] * R.shape[1])
    return full @ sel @ np.linalg.inv(full)


def subspace_to_adjacency(n: int, basis_S: Sequence[np.ndarray],
                          basis_R: Sequence[np.ndarray] | None = None,
                          tol: float | None = None) -> QuantumAdjacency:
    """Quantum adjacency on (M_n, tr) whose CJ form is the projection onto S along R."""
    tol = resolve(tol)
    space = qs.make_tracial_space([n])
    E = subspace_idempotent(n, basis_S, basis_R, tol)
    f = [np.asarray(space.adapted_unit(b.a, b.i, b.j).blocks()[0]) for b in space.basis]
    # column (p, q) is the matrix of T -> f_p T f_q on row-major vec(T)
    cols = [np.kron(fp, fq.T).reshape(-1) for fp in f for fq in f]
    K = np.stack(cols, axis=1)
    c, *_ = np.linalg.lstsq(K, E.reshape(-1), rcond=None)
    if np.abs(K @ c - E.reshape(-1)).max() > max(tol, 1e-8):
        raise ValidationError("idempotent is not of the form T -> sum c f_p T f_q")
    return cj_inverse(space, c.reshape(space.dim, space.dim))


# JSON

def graph_to_dict(G: QuantumGraph, tol: float = 0.0) -> dict:
    coeffs = [{"a": s.a, "i": s.i, "j": s.j, "b": t.a, "r": t.i, "s": t.j,
               "re": c.real, "im": c.imag}
              for (s, t), c in sorted(G.adjacency.terms(tol).items(), key=lambda kv: (kv[0][0], kv[0][1]))]
    out = {"space": qs.space_to_dict(G.space),
           "adjacency": {"basis": "adapted", "coeffs": coeffs}}
    if G.block_order:
        out["block_order"] = G.block_order
    return out


def graph_from_dict(data: Mapping, *, validate: bool = True, tol: float | None = None,
                    validate_space: bool = True) -> QuantumGraph:
    try:
        space = qs.space_from_dict(data["space"], validate=validate_space, tol=tol)
        adj = data["adjacency"]
        if adj.get("basis", "adapted") != "adapted":
            raise ValidationError("adjacency coefficients must be given in the adapted basis")
        m = np.zeros((space.dim, space.dim), dtype=complex)
        for t in adj["coeffs"]:
            src = space.index(BlockIndex(int(t["a"]), int(t["i"]), int(t["j"])))
            tgt = space.index(BlockIndex(int(t["b"]), int(t["r"]), int(t["s"])))
            m[tgt, src] += complex(float(t.get("re", 0.0)), float(t.get("im", 0.0)))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(f"malformed quantum graph JSON: {exc}") from exc
    return QuantumGraph.build(space, m, validate=validate, tol=tol,
                              block_order=data.get("block_order"))


def dumps_graph(G: QuantumGraph) -> str:
    return json.dumps(graph_to_dict(G))


def random_operator(space: FiniteQuantumSpace, rng: np.random.Generator) -> np.ndarray:
    n = space.dim
    return rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))


__all__: list[Any] = [
    "AdjacencyCheck", "ClassicalGraph", "QuantumAdjacency", "QuantumGraph", "adjacency_matrix",
    "amplify", "check_quantum_adjacency", "choi_jamiolkowski", "cj_inverse", "cj_product",
    "classical_from_dict", "classical_to_dict", "complete_classical", "complete_graph",
    "diagonal_graph", "direct_sum", "edge_matrix", "from_classical", "graph_from_dict",
    "graph_to_dict", "line_graph", "schur", "subspace_to_adjacency", "tensor", "to_classical",
    "trivial_graph",
]
