from __future__ import annotations

import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcuntz import qspace as qs
from qcuntz.errors import ValidationError

from oracles import mstar_by_solve, random_delta_form

PROFILES = list(qs.block_profiles(10))


def test_block_profiles_cover_dim_at_most_ten():
    assert (3, 1) in PROFILES and (1,) * 10 in PROFILES and (2, 2, 1, 1) in PROFILES
    assert all(sum(n * n for n in p) <= 10 for p in PROFILES)
    assert len(set(PROFILES)) == len(PROFILES)


@pytest.mark.parametrize("profile", PROFILES)
def test_tracial_delta_squared_is_dimension(profile):
    S = qs.make_tracial_space(profile)
    assert S.delta_sq == pytest.approx(S.dim)
    assert qs.mm_star_check(S) < 1e-10
    assert S.is_tracial()


@pytest.mark.parametrize("profile", PROFILES)
def test_random_delta_forms_pass(profile, rng):
    q = random_delta_form(profile, rng)
    S = qs.make_space(profile, q)
    assert qs.mm_star_check(S) < 1e-10


@pytest.mark.parametrize("profile", [p for p in PROFILES if len(p) > 1])
def test_mismatched_block_sums_rejected(profile, rng):
    q = random_delta_form(profile, rng)
    q[0] = [x * 1.3 for x in q[0]]
    total = sum(map(sum, q))
    q = [[x / total for x in b] for b in q]
    with pytest.raises(ValidationError):
        qs.make_space(profile, q)
    bad = qs.FiniteQuantumSpace.from_weights(profile, q, validate=False)
    assert qs.mm_star_check(bad) > 1e-3


@given(st.integers(1, 4), st.floats(0.5, 2.0))
def test_accepts_iff_residual_below_tolerance(n, scale):
    q = [[scale / (n * n)] * n]
    S = qs.FiniteQuantumSpace.from_weights([n], q, validate=False)
    tol = 1e-9
    try:
        qs.make_space([n], q, tol=tol)
        accepted = True
    except ValidationError:
        accepted = False
    assert accepted == (qs.mm_star_check(S) < tol)


@pytest.mark.parametrize("dims, q", [([1], [[0.5]]), ([2], [[0.6, 0.6]]), ([2], [[0.0, 1.0]]),
                                     ([2], [[1.0]]), ([1, 1], [[0.3], [0.7]])])
def test_invalid_weights_rejected(dims, q):
    with pytest.raises(ValidationError):
        qs.make_space(dims, q)


@pytest.mark.parametrize("profile", PROFILES)
def test_mstar_formula_matches_linear_solve(profile, rng):
    q = random_delta_form(profile, rng)
    S = qs.make_space(profile, q)
    for _ in range(3):
        x = S.random_vector(rng)
        T = qs.mstar(S, x)
        assert np.abs(T - mstar_by_solve(profile, q, x.coeffs)).max() < 1e-10


def test_mstar_is_adjoint_of_multiplication(rng):
    S = qs.make_space([2, 1], random_delta_form([2, 1], rng))
    D, M = qs.comultiplication_matrix(S), qs.multiplication_matrix(S)
    # Gram matrices in the adapted basis are diag(Q^-1_ii)
    gram = np.array([[qs.inner(S, S.adapted_unit(a.a, a.i, a.j), S.adapted_unit(b.a, b.i, b.j))
                      for b in S.basis] for a in S.basis])
    G2 = np.kron(gram, gram)
    assert np.abs(D - np.linalg.solve(G2, M.conj().T @ gram)).max() < 1e-12


def test_adapted_gram_is_inverse_weights():
    S = qs.make_space([2], [[1 / 3, 2 / 3]])
    gram = np.array([[qs.inner(S, S.adapted_unit(a.a, a.i, a.j), S.adapted_unit(b.a, b.i, b.j))
                      for b in S.basis] for a in S.basis])
    assert np.allclose(gram, np.diag([3, 3, 1.5, 1.5]), atol=1e-12)


def test_mstar_of_adapted_unit():
    S = qs.make_tracial_space([2])
    T = qs.mstar(S, S.adapted_unit(1, 1, 2))
    # f_12 -> f_11 ⊗ f_12 + f_12 ⊗ f_22
    expected = np.zeros((4, 4))
    expected[0, 1] = expected[1, 3] = 1
    assert np.array_equal(T, expected)


@given(st.sampled_from(PROFILES[:8]), st.integers(0, 2**31 - 1))
def test_multiplication_is_associative_and_unital(profile, seed):
    r = np.random.default_rng(seed)
    S = qs.make_tracial_space(profile)
    x, y, z = (S.random_vector(r) for _ in range(3))
    lhs = qs.multiply(S, qs.multiply(S, x, y), z)
    rhs = qs.multiply(S, x, qs.multiply(S, y, z))
    assert lhs.max_diff(rhs) < 1e-9
    assert qs.multiply(S, qs.unit(S), x).max_diff(x) < 1e-12


@given(st.sampled_from(PROFILES[:8]), st.integers(0, 2**31 - 1))
def test_basis_change_round_trip(profile, seed):
    r = np.random.default_rng(seed)
    S = qs.make_space(profile, random_delta_form(profile, r))
    x = S.random_vector(r, qs.STANDARD)
    assert x.to(qs.ADAPTED).to(qs.STANDARD).max_diff(x) < 1e-12
    assert x.to(qs.ADAPTED).max_diff(x) < 1e-12


def test_state_and_inner_product(rng):
    S = qs.make_space([2], [[0.2, 0.8]])
    assert qs.psi(S, qs.unit(S)) == pytest.approx(1.0)
    x, y = S.random_vector(rng), S.random_vector(rng)
    assert qs.inner(S, x, y) == pytest.approx(np.conj(qs.inner(S, y, x)))
    assert qs.inner(S, x, x).real > 0
    assert qs.adjoint(qs.adjoint(x)).max_diff(x) < 1e-12


def test_structure_constants_match_products():
    S = qs.make_tracial_space([2, 1])
    c = qs.structure_constants(S)
    f = [S.adapted_unit(b.a, b.i, b.j) for b in S.basis]
    for p in range(S.dim):
        for q in range(S.dim):
            prod = qs.multiply(S, f[p], f[q]).to(qs.ADAPTED).coeffs
            assert np.allclose(prod, c[p, q])


def test_space_json_round_trip(rng):
    S = qs.make_space([2, 1], random_delta_form([2, 1], rng))
    T = qs.loads_space(qs.dumps_space(S))
    assert T == S
    x = S.adapted_unit(1, 1, 2) * (1 + 2j)
    y = qs.vector_from_dict(S, json.loads(json.dumps(qs.vector_to_dict(x))))
    assert y.max_diff(x) == 0


def test_malformed_inputs():
    with pytest.raises(ValidationError):
        qs.space_from_dict({"blocks": [{"dim": 2}]})
    with pytest.raises(ValidationError):
        qs.make_tracial_space([])
    with pytest.raises(ValidationError):
        qs.make_tracial_space([0])
    S = qs.make_tracial_space([2])
    with pytest.raises(ValidationError):
        S.vector(np.zeros(3))
    with pytest.raises(ValidationError):
        S.adapted_unit(1, 3, 1)
    with pytest.raises(ValidationError):
        qs.multiply(S, S.adapted_unit(1, 1, 1), qs.make_tracial_space([1, 1, 1, 1]).adapted_unit(1, 1, 1))
