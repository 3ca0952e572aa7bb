"""Named verification suites; each returns a Report and depends only on (N, tol, backend)."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable

import numpy as np
import sympy

from . import present as pr
from . import qgraph as qg
from . import qspace as qs
from . import ueb
from .errors import ValidationError
from .report import Report, merge


def qcc_spaces() -> dict[str, qs.FiniteQuantumSpace]:
    return {"C^2 uniform": qs.make_tracial_space([1, 1]),
            "M_2 tr": qs.make_tracial_space([2]),
            "M_2 diag(1/3,2/3)": qs.make_space([2], [[1 / 3, 2 / 3]]),
            "C + M_2 tracial": qs.make_tracial_space([1, 2])}


def suite_spaces(n: int, tol: float, backend: str = "auto") -> Report:
    rep = Report("delta-forms", tol)
    for profile in qs.block_profiles(max(n * n, 4) + 1):
        S = qs.make_tracial_space(profile)
        rep.add(f"mm* = delta^2 id {profile}", qs.mm_star_check(S))
        rep.add(f"delta^2 = dim B {profile}", abs(S.delta_sq - S.dim))
    try:
        qs.make_space([1, 1], [[0.3], [0.7]])
        rejected = False
    except ValidationError:
        rejected = True
    rep.add("non-delta-form weights rejected", 0.0 if rejected else 1.0)
    return rep


def noninj_x(space: qs.FiniteQuantumSpace) -> np.ndarray:
    """x_11 = q_1 delta^2 and zero elsewhere."""
    n = space.block_dims[0]
    x = np.zeros((n, n))
    x[0, 0] = space.q_weights[0][0] * space.delta_sq
    return x


def suite_qgraph(n: int, tol: float, backend: str = "auto") -> Report:
    rep = Report("quantum adjacency", tol)
    M = qs.make_tracial_space([n])
    mixed = qs.make_tracial_space([1, 2])
    K2 = qg.from_classical(qg.complete_classical(2))
    graphs = {
        "complete M_N": qg.complete_graph(M),
        "complete C+M_2": qg.complete_graph(mixed),
        "trivial C+M_2": qg.trivial_graph(mixed),
        "diagonal M_N": qg.diagonal_graph(M, [noninj_x(M)], tol),
        "direct sum": qg.direct_sum(qg.complete_graph(M), qg.trivial_graph(mixed)),
        "tensor": qg.tensor(K2, qg.complete_graph(M)),
        "amplify K_2": qg.amplify(K2, n),
        "classical K_2": K2,
    }
    for name, G in graphs.items():
        rep.add(name, qg.check_quantum_adjacency(G, tol=tol).residual)
    return rep


def suite_cj(n: int, tol: float, backend: str = "auto") -> Report:
    rep = Report("Choi-Jamiolkowski", tol)
    for label, S in (("M_2", qs.make_tracial_space([2])), ("C^3", qs.make_tracial_space([1, 1, 1])),
                     ("M_N", qs.make_tracial_space([n]))):
        for kind, G in (("complete", qg.complete_graph(S)), ("trivial", qg.trivial_graph(S))):
            P = qg.choi_jamiolkowski(S, G.adjacency)
            back = qg.cj_inverse(S, P).matrix
            rep.add(f"{kind} {label}: round trip", float(np.abs(back - G.matrix).max()))
            rep.add(f"{kind} {label}: P^2 = P", qg.cj_idempotency_residual(S, G.adjacency))
    return rep


def suite_qcc_homo(n: int, tol: float, backend: str = "auto") -> Report:
    exact = backend in ("auto", "exact")
    rep = Report("QCC homomorphism", tol)
    for name, S in qcc_spaces().items():
        pres = pr.qck_presentation(qg.complete_graph(S), tol, exact_coeffs=exact)
        asg = pr.qcc_homo_assignment(S, exact_coeffs=exact)
        sub = pr.check_assignment(pres, asg, tol)
        rep.extend(sub, prefix=name)
        rep.add(f"{name}: structural residual", float(pr.structural_residual(sub)))
    return rep


def suite_ueb(n: int, tol: float, backend: str = "auto") -> Report:
    return ueb.validate_ueb(ueb.pauli_ueb(n), tol)


def suite_linking(n: int, tol: float, backend: str = "auto") -> Report:
    return ueb.check_linking_relations(ueb.linking_rep(ueb.pauli_ueb(n), tol), tol)


def suite_main_theorem(n: int, tol: float, backend: str = "auto") -> Report:
    return ueb.main_theorem_check(max(n, 2), tol=tol)


def suite_embeddings(n: int, tol: float, backend: str = "auto") -> Report:
    n = max(n, 2)
    return merge(f"embeddings (N={n})", tol, [ueb.embeddings(n, k, tol=tol).report
                                               for k in ("complete", "trivial")])


def suite_crossed(n: int, tol: float, backend: str = "auto") -> Report:
    n = max(n, 2)
    return merge(f"crossed products (N={n})", tol, [ueb.crossed_product_identities(n, k, tol=tol)
                                                     for k in ("complete", "trivial")])


def suite_amplification(n: int, tol: float, backend: str = "auto") -> Report:
    return ueb.amplification_model_check(min(max(n, 1), 3), tol=tol)


def path_graph(k: int = 3) -> qg.ClassicalGraph:
    return qg.ClassicalGraph.from_edges(list(range(1, k + 1)), [(v, v + 1) for v in range(1, k)])


def suite_classical(n: int, tol: float, backend: str = "auto") -> Report:
    rep = Report("classical graphs", tol)
    for name, E in (("K_2", qg.complete_classical(2)),
                    ("single loop", qg.ClassicalGraph.from_edges([1], [(1, 1)]))):
        rep.extend(pr.classical_consistency_check(E, tol), prefix=name)
    E = path_graph(3)
    asg = pr.ck_family_on_paths(E)
    for t in (0.0, 0.25, 0.5, 1.0):
        rep.extend(pr.rotation_homotopy_check(E, asg, t, tol=tol), prefix=f"rotation t={t:g}")
    return rep


def suite_degeneracy(n: int, tol: float, backend: str = "auto") -> Report:
    rep = Report("diagonal graph degeneracy", tol)
    M = qs.make_tracial_space([2])
    G = qg.diagonal_graph(M, [noninj_x(M)], tol)
    pres = pr.qck_presentation(G, tol)
    flagged = pr.vanishing_generators(pres)
    expected = {pr.S(1, i, j) for i in (1, 2) for j in (2,)}
    rep.add("S_ij = 0 flagged for j > 1", float(len(flagged ^ expected)))
    eps = [1 / sympy.sqrt(2), 1 / sympy.sqrt(2)]
    _, asg = pr.diagonal_character(M, [noninj_x(M)], eps, tol)
    rep.extend(pr.check_assignment(pres, asg, tol), prefix="character")
    return rep


SUITES: dict[str, Callable[[int, float, str], Report]] = {
    "spaces": suite_spaces,
    "qgraph": suite_qgraph,
    "choi-jamiolkowski": suite_cj,
    "qcc-homo": suite_qcc_homo,
    "ueb": suite_ueb,
    "linking": suite_linking,
    "main-theorem": suite_main_theorem,
    "embeddings": suite_embeddings,
    "crossed": suite_crossed,
    "amplification": suite_amplification,
    "classical": suite_classical,
    "degeneracy": suite_degeneracy,
}


def _run(name: str, n: int, tol: float, backend: str) -> Report:
    rep = SUITES[name](n, tol, backend)
    rep.title = name
    return rep


def run_all(n: int, tol: float, backend: str = "auto", workers: int | None = None) -> Report:
    """Run every suite in worker processes; results are joined in registry order."""
    names = list(SUITES)
    if workers == 1:
        reports = [_run(k, n, tol, backend) for k in names]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run, k, n, tol, backend) for k in names]
            reports = [f.result() for f in futures]
    return merge(f"all suites (N={n})", tol, reports)
