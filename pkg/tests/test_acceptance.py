"""Acceptance criteria 1-12, one test each, at the stated tolerances."""

from __future__ import annotations

import time

import numpy as np
import sympy

from qcuntz import present as pr
from qcuntz import qgraph as qg
from qcuntz import qspace as qs
from qcuntz import ueb
from qcuntz.errors import ValidationError
from qcuntz.suites import noninj_x, path_graph, qcc_spaces

from oracles import mstar_by_solve, random_delta_form, schur_idempotent


def test_criterion_01_delta_forms(criterion, rng):
    start = time.perf_counter()
    profiles = list(qs.block_profiles(16))
    picks = [profiles[i] for i in rng.choice(len(profiles), size=10, replace=False)]
    dim_err = max(abs(qs.make_tracial_space(p).delta_sq - sum(n * n for n in p)) for p in picks)
    mm = max(qs.mm_star_check(qs.make_tracial_space(p)) for p in picks)
    rejected = 0
    for dims, q in (([1, 1], [[0.3], [0.7]]), ([2], [[0.2, 0.7]]), ([2, 1], [[0.25, 0.25], [0.5]])):
        try:
            qs.make_space(dims, q)
        except ValidationError:
            rejected += 1
    elapsed = time.perf_counter() - start
    ok = dim_err == 0 and mm < 1e-10 and rejected == 3 and elapsed < 1.0
    criterion(1, ok, f"delta^2 = dim on 10 profiles, mm* residual {mm:.1e}, "
                     f"{rejected}/3 non-delta-forms rejected, {elapsed:.2f}s")


def test_criterion_02_mstar_oracle(criterion, rng):
    worst = 0.0
    profiles = list(qs.block_profiles(10))
    for p in profiles:
        for q in (random_delta_form(p, rng), qs.make_tracial_space(p).q_weights):
            S = qs.make_space(p, q)
            for _ in range(3):
                x = S.random_vector(rng)
                worst = max(worst, float(np.abs(qs.mstar(S, x) - mstar_by_solve(p, q, x.coeffs)).max()))
    criterion(2, worst < 1e-10, f"m* formula vs linear solve on {len(profiles)} profiles, max error {worst:.1e}")


def test_criterion_03_adjacency_axiom(criterion, rng):
    M2, mixed = qs.make_tracial_space([2]), qs.make_tracial_space([1, 2])
    K2 = qg.from_classical(qg.complete_classical(2))
    graphs = [qg.complete_graph(mixed), qg.trivial_graph(mixed), qg.diagonal_graph(M2, [noninj_x(M2)]),
              qg.direct_sum(qg.complete_graph(M2), qg.trivial_graph(mixed)),
              qg.tensor(K2, qg.complete_graph(M2)), qg.amplify(K2, 2)]
    worst = max(qg.check_quantum_adjacency(G).residual for G in graphs)
    agree = 0
    for _ in range(50):
        n = int(rng.integers(2, 5))
        B = rng.integers(0, 2, size=(n, n)).astype(complex)
        if rng.random() < 0.5:
            B[tuple(rng.integers(0, n, size=2))] = rng.choice([0.5, 2.0, -1.0, 1j])
        passed = qg.check_quantum_adjacency(qs.make_tracial_space([1] * n), B, tol=1e-9).passed
        agree += passed == bool(np.all((B == 0) | (B == 1))) == schur_idempotent(B)
    ok = worst < 1e-9 and agree == 50
    criterion(3, ok, f"6 constructions residual {worst:.1e}, 0/1 characterization {agree}/50")


def test_criterion_04_choi_jamiolkowski(criterion, rng):
    round_trip, agree, total = 0.0, 0, 0
    for name, S in (("M_2", qs.make_tracial_space([2])), ("C^3", qs.make_tracial_space([1, 1, 1]))):
        for trial in range(20):
            if trial % 2:
                A = qg.random_operator(S, rng)
            elif name == "C^3":
                A = rng.integers(0, 2, size=(3, 3)).astype(complex)
            else:
                basis = [rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
                         for _ in range(int(rng.integers(1, 4)))]
                A = qg.subspace_to_adjacency(2, basis).matrix
            back = qg.cj_inverse(S, qg.choi_jamiolkowski(S, A)).matrix
            round_trip = max(round_trip, float(np.abs(back - A).max()))
            idem = qg.cj_idempotency_residual(S, A) < 1e-9
            agree += idem == qg.check_quantum_adjacency(S, A, tol=1e-9).passed
            total += 1
    ok = round_trip < 1e-9 and agree == total
    criterion(4, ok, f"round trip {round_trip:.1e}, P^2 = P iff axiom on {agree}/{total} operators")


def test_criterion_05_qcc_homomorphism(criterion):
    start = time.perf_counter()
    structural, coeff = 0, 0.0
    for S in qcc_spaces().values():
        pres = pr.qck_presentation(qg.complete_graph(S), exact_coeffs=True)
        rep = pr.check_assignment(pres, pr.qcc_homo_assignment(S, exact_coeffs=True), 1e-12)
        structural += pr.structural_residual(rep)
        coeff = max(coeff, rep.max_residual)
    elapsed = time.perf_counter() - start
    ok = structural == 0 and coeff < 1e-12 and elapsed < 5
    criterion(5, ok, f"4 spaces, structural residual {structural}, coefficient residual {coeff:.1e}, "
                     f"{elapsed:.2f}s")


def test_criterion_06_ueb(criterion):
    reps = [ueb.validate_ueb(ueb.pauli_ueb(n), 1e-12) for n in range(2, 6)]
    worst = max(r.max_residual for r in reps)
    ok = all(r.passed and len(r.results) == 4 for r in reps) and worst < 1e-12
    criterion(6, ok, f"Pauli UEB N = 2..5, four properties, max residual {worst:.1e}")


def test_criterion_07_linking(criterion):
    reps = [ueb.check_linking_relations(ueb.linking_rep(ueb.pauli_ueb(n)), 1e-12) for n in (2, 3)]
    names = {r.name for r in reps[0].results}
    worst = max(r.max_residual for r in reps)
    ok = all(r.passed for r in reps) and {"A1a", "A1b", "A2", "A3a", "A3b", "A4 trivial", "A4 complete"} <= names
    criterion(7, ok, f"(A1a)-(A4) for N = 2, 3, max residual {worst:.1e}")


def test_criterion_08_main_theorem(criterion):
    r2 = ueb.main_theorem_check(2, tol=1e-10)
    start = time.perf_counter()
    r3 = ueb.main_theorem_check(3, tol=1e-10)
    elapsed = time.perf_counter() - start
    groups = {"cuntz", "qck", "unit"}
    seen = {r.name.split(":")[0] for r in r3.results}
    ok = r2.passed and r3.passed and groups <= seen and elapsed < 30
    criterion(8, ok, f"N = 2, 3 pass (Cuntz, QCK, e = 1, eS = S = Se), N = 3 in {elapsed:.2f}s")


def test_criterion_09_embeddings_crossed(criterion):
    reps = [ueb.embeddings(2, "complete", tol=1e-10).report, ueb.embeddings(2, "trivial", tol=1e-10).report,
            ueb.embeddings(3, "complete", tol=1e-10).report,
            ueb.crossed_product_identities(2, "complete", tol=1e-10),
            ueb.crossed_product_identities(2, "trivial", tol=1e-10),
            ueb.crossed_product_identities(3, "complete", tol=1e-10)]
    names = " ".join(r.name for rep in reps for r in rep.results)
    needed = ("alpha_1", "alpha_2", "beta_1", "beta_2", "frame", "spectral decomposition", "slice")
    worst = max(rep.max_residual for rep in reps)
    missing = [k for k in needed if k not in names]
    ok = all(rep.passed for rep in reps) and not missing and worst < 1e-10
    criterion(9, ok, f"{sum(len(r.results) for r in reps)} identities, max residual {worst:.1e}"
                     + (f", missing {missing}" if missing else ""))


def test_criterion_10_amplification(criterion):
    rep = ueb.amplification_model_check(2)
    groups = {r.name.split(" ")[0] for r in rep.results}
    ok = rep.passed and rep.max_residual == 0 and {"(i)", "(ii)", "(iii)", "(iv)"} <= groups
    criterion(10, ok, f"(i)-(iv) in the unital free product, max residual {rep.max_residual!r}")


def test_criterion_11_classical(criterion, rng):
    B = rng.integers(0, 2, size=(4, 4))
    graphs = {"K_2": qg.complete_classical(2), "single loop": qg.ClassicalGraph.from_edges([1], [(1, 1)]),
              "random 4-vertex": qg.ClassicalGraph.from_matrix(B)}
    consistent = all(pr.classical_consistency_check(E).passed for E in graphs.values())
    E = path_graph(3)
    asg = pr.ck_family_on_paths(E)
    rot = all(pr.rotation_homotopy_check(E, asg, t).passed for t in (0.0, 0.25, 0.5, 1.0))
    criterion(11, consistent and rot, f"consistency on {', '.join(graphs)}: {consistent}; "
                                      f"rotation at t = 0, 1/4, 1/2, 1: {rot}")


def test_criterion_12_degeneracy(criterion):
    M = qs.make_tracial_space([2])
    x = noninj_x(M)
    pres = pr.qck_presentation(qg.diagonal_graph(M, [x]))
    flagged = pr.vanishing_generators(pres)
    G, asg = pr.diagonal_character(M, [x], [1 / sympy.sqrt(2), 1 / sympy.sqrt(2)])
    rep = pr.check_assignment(pr.qck_presentation(G), asg)
    ok = flagged == {pr.S(1, 1, 2), pr.S(1, 2, 2)} and rep.passed and rep.max_residual == 0
    criterion(12, ok, f"flagged {sorted(map(str, flagged))}, character residual {rep.max_residual!r}")
