from __future__ import annotations

import json

import numpy as np
import pytest

from qcuntz import qgraph as qg
from qcuntz import qspace as qs
from qcuntz.errors import ValidationError

from oracles import random_delta_form, schur_idempotent

TOL = 1e-9


def _diag_x(space):
    x = np.zeros((space.block_dims[0],) * 2)
    x[0, 0] = space.q_weights[0][0] * space.delta_sq
    return x


def constructions():
    M2 = qs.make_tracial_space([2])
    mixed = qs.make_tracial_space([1, 2])
    skew = qs.make_space([2], [[1 / 3, 2 / 3]])
    K2 = qg.from_classical(qg.complete_classical(2))
    return {
        "complete M_2": qg.complete_graph(M2),
        "complete skew M_2": qg.complete_graph(skew),
        "complete C+M_2": qg.complete_graph(mixed),
        "trivial C+M_2": qg.trivial_graph(mixed),
        "trivial skew M_2": qg.trivial_graph(skew),
        "diagonal M_2": qg.diagonal_graph(M2, [_diag_x(M2)]),
        "diagonal skew M_2": qg.diagonal_graph(skew, [_diag_x(skew)]),
        "direct sum": qg.direct_sum(qg.complete_graph(M2), qg.trivial_graph(mixed)),
        "tensor": qg.tensor(K2, qg.complete_graph(M2)),
        "tensor mixed": qg.tensor(qg.complete_graph(mixed), qg.trivial_graph(skew)),
        "amplify K_2": qg.amplify(K2, 2),
        "amplify complete M_2": qg.amplify(qg.complete_graph(M2), 3),
    }


@pytest.mark.parametrize("name", list(constructions()))
def test_constructions_satisfy_axiom(name):
    G = constructions()[name]
    chk = qg.check_quantum_adjacency(G, tol=TOL)
    assert chk.passed, chk.to_dict()
    assert qs.mm_star_check(G.space) < 1e-10


def test_tensor_and_direct_sum_spaces():
    M2 = qs.make_tracial_space([2])
    mixed = qs.make_tracial_space([1, 2])
    T = qg.tensor(qg.complete_graph(mixed), qg.trivial_graph(M2))
    assert T.space.block_dims == (2, 4)
    assert T.space.delta_sq == pytest.approx(mixed.delta_sq * M2.delta_sq)
    assert T.block_order.startswith("lexicographic")
    D = qg.direct_sum(qg.complete_graph(M2), qg.trivial_graph(mixed))
    assert D.space.block_dims == (2, 1, 2)
    assert D.space.delta_sq == pytest.approx(4 + 5)


def test_complete_graph_is_rank_one_projection_scaled():
    S = qs.make_tracial_space([2, 1])
    A = qg.complete_graph(S)
    # A(x) = delta^2 psi(x) 1
    x = S.random_vector(np.random.default_rng(1))
    expected = qs.unit(S, qs.ADAPTED) * (S.delta_sq * qs.psi(S, x))
    assert A.adjacency.apply(x).max_diff(expected) < 1e-12


def test_commutative_characterization_on_random_matrices(rng):
    """On C^n with the uniform state the axiom is exactly Schur idempotency."""
    seen = {True: 0, False: 0}
    for _ in range(50):
        n = int(rng.integers(2, 5))
        B = rng.integers(0, 2, size=(n, n)).astype(complex)
        if rng.random() < 0.5:
            i, j = rng.integers(0, n, size=2)
            B[i, j] = rng.choice([0.5, 2.0, -1.0, 1j, 1 + 1e-6])
        S = qs.make_tracial_space([1] * n)
        passed = qg.check_quantum_adjacency(S, B, tol=TOL).passed
        zero_one = bool(np.all((B == 0) | (B == 1)))
        assert passed == zero_one == schur_idempotent(B)
        seen[passed] += 1
    assert seen[True] > 5 and seen[False] > 5


def test_residual_forms_agree_on_random_operators(rng):
    for profile in ([2], [1, 2], [1, 1, 1]):
        S = qs.make_space(profile, random_delta_form(profile, rng))
        A = qg.random_operator(S, rng)
        chk = qg.check_quantum_adjacency(S, A)
        assert chk.coefficient_residual > 1e-3 and chk.operator_residual > 1e-3


@pytest.mark.parametrize("name", list(constructions()))
def test_schur_square_fixes_adjacency(name):
    G = constructions()[name]
    assert np.abs(qg.schur(G.space, G.adjacency, G.adjacency).matrix - G.matrix).max() < 1e-9


def test_diagonal_condition_rejects_bad_coefficients():
    M2 = qs.make_tracial_space([2])
    x = _diag_x(M2) * 0.5
    assert qg.diagonal_condition_residual(M2, [x]) > 0.1
    with pytest.raises(ValidationError):
        qg.diagonal_graph(M2, [x])


def test_classical_graph_helpers():
    E = qg.ClassicalGraph.from_edges([1, 2, 3], [(1, 2), (2, 3), (1, 3)])
    assert E.sinks == [3] and E.sources == [1]
    assert E.is_simple and E.is_acyclic
    assert np.array_equal(E.adjacency_matrix(), [[0, 1, 1], [0, 0, 1], [0, 0, 0]])
    L = E.line_graph()
    assert np.array_equal(L.adjacency_matrix(), E.edge_matrix())
    assert E.to_networkx().number_of_edges() == 3
    back = qg.classical_from_dict(json.loads(json.dumps(qg.classical_to_dict(E))))
    assert back == E
    G = qg.from_classical(E)
    assert np.array_equal(qg.to_classical(G), E.adjacency_matrix())
    with pytest.raises(ValidationError):
        qg.ClassicalGraph.from_edges([1], [(1, 2)])
    with pytest.raises(ValidationError):
        qg.from_classical(qg.ClassicalGraph.from_matrix([[2]]))


def test_graph_json_round_trip():
    for G in constructions().values():
        H = qg.graph_from_dict(json.loads(qg.dumps_graph(G)))
        assert H.space == G.space
        assert np.abs(H.matrix - G.matrix).max() < 1e-12


def test_graph_json_rejects_invalid_adjacency():
    data = qg.graph_to_dict(qg.trivial_graph(qs.make_tracial_space([2])))
    data["adjacency"]["coeffs"][0]["re"] = 2.0
    with pytest.raises(ValidationError):
        qg.graph_from_dict(data)
    assert qg.graph_from_dict(data, validate=False).check().passed is False


# Choi-Jamiolkowski

CJ_SPACES = {"M_2": qs.make_tracial_space([2]), "C^3": qs.make_tracial_space([1, 1, 1])}


def _valid_operator(name, S, rng):
    if name == "C^3":
        return rng.integers(0, 2, size=(3, 3)).astype(complex)
    k = int(rng.integers(1, 4))
    basis = [rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)) for _ in range(k)]
    return qg.subspace_to_adjacency(2, basis).matrix


@pytest.mark.parametrize("name", list(CJ_SPACES))
def test_cj_idempotent_iff_axiom(name, rng):
    S = CJ_SPACES[name]
    valid = 0
    for trial in range(20):
        A = _valid_operator(name, S, rng)
        if trial % 2:
            A = A + 1e-3 * qg.random_operator(S, rng) if trial % 4 == 1 else qg.random_operator(S, rng)
        back = qg.cj_inverse(S, qg.choi_jamiolkowski(S, A)).matrix
        assert np.abs(back - A).max() < 1e-9
        idem = qg.cj_idempotency_residual(S, A) < TOL
        axiom = qg.check_quantum_adjacency(S, A, tol=TOL).passed
        assert idem == axiom
        valid += axiom
    assert valid == 10


@pytest.mark.parametrize("name", list(CJ_SPACES))
def test_cj_of_standard_graphs(name):
    S = CJ_SPACES[name]
    P_triv = qg.choi_jamiolkowski(S, qg.trivial_graph(S).adjacency)
    P_comp = qg.choi_jamiolkowski(S, qg.complete_graph(S).adjacency)
    one = qs.mstar(S, qs.unit(S)) / S.dim
    assert np.allclose(P_triv, one)
    # the complete graph corresponds to the unit of B ⊗ B^op
    unit = np.outer(qs.unit(S, qs.ADAPTED).coeffs, qs.unit(S, qs.ADAPTED).coeffs)
    assert np.allclose(P_comp, unit)


def test_cj_needs_tracial_state():
    S = qs.make_space([2], [[1 / 3, 2 / 3]])
    with pytest.raises(ValidationError):
        qg.choi_jamiolkowski(S, qg.trivial_graph(S).adjacency)


def test_subspace_projection_along_complement(rng):
    S = [np.eye(2)]
    E = qg.subspace_idempotent(2, S)
    assert np.allclose(E @ E, E)
    assert np.allclose(E @ np.eye(2).reshape(-1), np.eye(2).reshape(-1))
    with pytest.raises(ValidationError):
        qg.subspace_idempotent(2, [np.eye(2), 2 * np.eye(2)])
