from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcuntz import qspace as qs
from qcuntz import ueb
from qcuntz.backend import amplification_algebra, unit_tensor
from qcuntz.errors import NotVerifiableError, ValidationError
from qcuntz.present import random_unitary

from oracles import tr_inner

TOL = 1e-9


def _unit(n, r, s):
    m = np.zeros((n, n))
    m[r, s] = 1
    return m


def test_pauli_set_for_qubits():
    W = ueb.pauli_ueb(2)
    I, flip, sign = np.eye(2), np.array([[0, 1], [1, 0]]), np.diag([1, -1])
    for got, want in zip(W.units, [I, flip, sign, sign @ flip]):
        assert np.allclose(got, want)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_weyl_commutation(n):
    X, Z = ueb.pauli_matrices(n)
    assert np.allclose(X @ Z, ueb.omega(n) * Z @ X)
    assert np.allclose(np.linalg.matrix_power(X, n), np.eye(n))
    assert np.allclose(np.linalg.matrix_power(Z, n), np.eye(n))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_pauli_ueb_properties(n):
    W = ueb.pauli_ueb(n)
    rep = ueb.validate_ueb(W, 1e-12)
    assert rep.passed and rep.max_residual < 1e-12
    assert {r.name for r in rep.results} == {"unitary", "tr_orthonormal", "depolarizing",
                                             "maximally_entangled_basis"}
    gram = np.array([[tr_inner(a, b) for b in W.units] for a in W.units])
    assert np.allclose(gram, np.eye(n * n))


def test_reordered_and_conjugated_bases_pass(rng):
    W = ueb.pauli_ueb(3)
    perm = rng.permutation(9)
    assert ueb.validate_ueb(ueb.UnitaryErrorBasis(3, W.units[perm]), TOL).passed
    A, B = random_unitary(3, rng), random_unitary(3, rng)
    moved = ueb.UnitaryErrorBasis(3, np.array([A @ w @ B for w in W.units]))
    assert ueb.validate_ueb(moved, TOL).passed
    assert ueb.check_linking_relations(ueb.linking_rep(moved, TOL), TOL).passed


def test_scaled_unit_fails():
    units = ueb.pauli_ueb(2).units.copy()
    units[1] = 2 * units[1]
    rep = ueb.validate_ueb(ueb.UnitaryErrorBasis(2, units), TOL)
    assert not rep.passed
    assert "unitary" in {r.name for r in rep.failures}
    with pytest.raises(ValidationError):
        ueb.linking_rep(ueb.UnitaryErrorBasis(2, units), TOL)


@given(st.integers(2, 3), st.sampled_from([0.0, 1e-2, 1e-1]), st.integers(0, 2**31 - 1))
def test_ueb_valid_iff_linking_relations_hold(n, eps, seed):
    r = np.random.default_rng(seed)
    units = ueb.pauli_ueb(n).units.copy()
    k = int(r.integers(0, n * n))
    units[k] = units[k] + eps * (r.normal(size=(n, n)) + 1j * r.normal(size=(n, n)))
    W = ueb.UnitaryErrorBasis(n, units)
    valid = ueb.validate_ueb(W, TOL).passed
    linking = ueb.check_linking_relations(ueb.linking_rep(W, TOL, validate=False), TOL).passed
    assert valid == linking == (eps == 0.0)


def test_linking_rep_matches_formula():
    for n in (2, 3):
        W = ueb.pauli_ueb(n)
        rep = ueb.linking_rep(W)
        for x in range(n * n):
            for r in range(n):
                for s in range(n):
                    want = W.units[x].conj().T @ _unit(n, r, s) @ W.units[x] / n
                    assert np.allclose(rep(r, s, x), want)
    assert np.allclose(ueb.linking_rep(ueb.pauli_ueb(2))(0, 1, 0), 0.5 * _unit(2, 0, 1))


@pytest.mark.parametrize("n", [2, 3])
def test_linking_relations(n):
    rep = ueb.check_linking_relations(ueb.linking_rep(ueb.pauli_ueb(n)), 1e-12)
    assert rep.passed
    assert {r.name for r in rep.results} >= {"A1a", "A1b", "A2", "A3a", "A3b", "A4 trivial", "A4 complete"}


def test_ueb_json_round_trip():
    W = ueb.pauli_ueb(3)
    back = ueb.loads_ueb(ueb.dumps_ueb(W))
    assert back.n == 3 and np.array_equal(back.units, W.units)
    with pytest.raises(ValidationError):
        ueb.ueb_from_dict({"n": 2, "matrices": [[[1, 0]]]})


# Cuntz relations of s^ and the u matrix

def test_cuntz_sym_on_random_unitaries(rng):
    for _ in range(20):
        n = int(rng.integers(2, 5))
        fam, rep = ueb.cuntz_sym_family(random_unitary(n, rng))
        assert rep.passed and len(fam) == n


def test_cuntz_sym_on_random_block_unitaries(rng):
    n1, n, k = 2, 2, 3
    U = random_unitary(n1 * k, rng).reshape(n1, k, n, k).transpose(0, 2, 1, 3)
    _, rep = ueb.cuntz_sym_family(U)
    assert rep.passed


def test_cuntz_sym_rejects_non_unitary(rng):
    u = random_unitary(3, rng)
    u[0] *= 1.1
    with pytest.raises(ValidationError):
        ueb.cuntz_sym_family(u)


@pytest.mark.parametrize("n", [2, 3])
def test_u_matrix_is_unitary_and_matches_closed_form(n):
    W = ueb.pauli_ueb(n)
    u = ueb.u_matrix(qs.make_tracial_space([n]), ueb.linking_rep(W))
    assert max(u.residuals().values()) < 1e-12
    for x in range(n * n):
        w = W.units[x]
        for i in range(n):
            for j in range(n):
                assert np.allclose(u.blocks[x, i * n + j], w.T @ _unit(n, i, j) @ w.conj() / np.sqrt(n))


# Main theorem

@pytest.mark.parametrize("n", [2, 3])
def test_main_theorem(n):
    rep = ueb.main_theorem_check(n, tol=TOL)
    assert rep.passed, rep.to_text()
    names = {r.name for r in rep.results}
    assert {"unit: e = 1", "unit: e S = S", "unit: S e = S"} <= names
    assert any(x.startswith("cuntz") for x in names) and any(x.startswith("qck") for x in names)


def test_main_theorem_with_other_ueb(rng):
    W = ueb.pauli_ueb(2)
    A = random_unitary(2, rng)
    moved = ueb.UnitaryErrorBasis(2, np.array([A @ w @ A.conj().T for w in W.units]))
    assert ueb.main_theorem_check(2, moved, tol=TOL).passed


def test_main_theorem_is_deterministic():
    assert ueb.main_theorem_check(2).to_dict() == ueb.main_theorem_check(2).to_dict()


def test_unit_element_normalisation():
    for n in (2, 3):
        e = ueb.unit_element(n)
        one = unit_tensor(e.algebra, np.eye(n))
        assert (e - one).residual() < 1e-12
        # the N^2-weighted sum is N times the unit
        big = ueb.unit_element(n, coefficient=n * n)
        assert (big - one * n).residual() < 1e-12


@pytest.mark.parametrize("space", [qs.make_tracial_space([1, 2]), qs.make_space([2], [[1 / 3, 2 / 3]])],
                         ids=["multi-block", "non-tracial"])
def test_main_theorem_not_verifiable(space):
    with pytest.raises(NotVerifiableError, match="not verifiable at desk scale"):
        ueb.main_theorem_check(space)


# Embeddings and crossed products

@pytest.mark.parametrize("n, kind", [(2, "complete"), (2, "trivial"), (3, "complete"), (3, "trivial")])
def test_embeddings(n, kind):
    emb = ueb.embeddings(n, kind, tol=1e-10)
    assert emb.report.passed, emb.report.to_text()
    assert emb.kind == kind and emb.n == n


def test_slice_identities():
    for n in (2, 3):
        res = ueb.slice_identities(ueb.linking_rep(ueb.pauli_ueb(n)))
        assert max(res.values()) < 1e-12


@pytest.mark.parametrize("n, kind", [(2, "complete"), (2, "trivial"), (3, "complete"), (3, "trivial")])
def test_crossed_product_identities(n, kind):
    rep = ueb.crossed_product_identities(n, kind, tol=1e-10)
    assert rep.passed, rep.to_text()
    names = " ".join(r.name for r in rep.results)
    for key in ("alpha_1", "alpha_2", "beta_1", "beta_2", "Weyl", "frame", "spectral decomposition"):
        assert key in names


@pytest.mark.parametrize("n", [2, 3, 4])
def test_frame_identities(n):
    frame = ueb.entangled_frame(n)
    X, Z = ueb.pauli_matrices(n)
    V = frame.V
    eye = np.eye(n)
    assert np.allclose(V.conj().T @ V, np.eye(n * n))
    assert np.allclose(V.conj().T @ np.kron(eye, X) @ V, np.kron(Z, eye))
    assert np.allclose(V.conj().T @ np.kron(eye, Z.conj().T) @ V, np.kron(X, Z))
    total = sum(frame.projection(l, m) for l in range(n) for m in range(n))
    assert np.allclose(total, np.eye(n * n))
    assert max(ueb.frame_identities(n).values()) < 1e-12


# Amplification model

@pytest.mark.parametrize("n", [1, 2, 3])
def test_amplification_model_exact(n):
    rep = ueb.amplification_model_check(n)
    assert rep.passed and rep.max_residual == 0


def test_amplification_negative_shift_by_unit():
    C = amplification_algebra(2)
    rep = ueb.amplification_model_check(2, S_elem=C.letter(1, 1) + C.one())
    failed = {r.name for r in rep.failures}
    assert not any(x.startswith("(ii)") for x in failed)
    assert any(x.startswith("(i) relations") for x in failed)
    assert any(x.startswith("(iii)") for x in failed)


def test_unaveraged_corner_does_not_commute():
    C = amplification_algebra(2)
    Sg = C.letter(1, 1)
    x = C.matrix_unit(0, 1, 1) * Sg * C.matrix_unit(0, 2, 1)
    e = C.matrix_unit(0, 1, 2)
    assert (x * e - e * x).residual() > 0.5
