"""Command-line driver: ``qck <verb> [options]``.

Exit codes: 0 all checks pass, 1 a check or validation failed, 2 unreadable
input, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

import numpy as np

from . import present as pr
from . import qgraph as qg
from . import qspace as qs
from . import suites, ueb
from .backend import NumericElement
from .errors import NotVerifiableError, QCKError, ValidationError
from .report import Report, merge
from .tolerance import resolve

EXIT_OK, EXIT_FAIL, EXIT_IO, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    """An input file is missing or is not JSON."""


def read_json(path: str) -> Any:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def emit(args, payload: str) -> None:
    if args.output:
        try:
            Path(args.output).write_text(payload + "\n")
        except OSError as exc:
            raise InputError(f"cannot write {args.output}: {exc}") from exc
    else:
        print(payload)


def emit_report(args, rep: Report) -> int:
    emit(args, rep.to_json(indent=2) if args.report == "json" else rep.to_text())
    return EXIT_OK if rep.passed else EXIT_FAIL


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


# Verbs

def cmd_space_validate(args) -> int:
    S = qs.space_from_dict(read_json(args.space), validate=False)
    rep = Report("space", args.tol)
    rep.add("delta-form (equal block sums of Q^-1)", qs.delta_form_defect(S.block_dims, S.q_weights))
    rep.add("m m* = delta^2 id", qs.mm_star_check(S))
    return emit_report(args, rep)


def cmd_qgraph_check(args) -> int:
    G = qg.graph_from_dict(read_json(args.graph), validate=False)
    chk = qg.check_quantum_adjacency(G, tol=args.tol)
    rep = Report("quantum adjacency", args.tol)
    rep.add("coefficient form", chk.coefficient_residual)
    rep.add("m(A ⊗ A)m* = delta^2 A", chk.operator_residual)
    return emit_report(args, rep)


def _space_arg(args) -> qs.FiniteQuantumSpace:
    if args.space:
        return qs.space_from_dict(read_json(args.space))
    return qs.make_tracial_space(args.blocks or [args.n])


def cmd_qgraph_build(args) -> int:
    kind = args.kind
    if kind in ("complete", "trivial"):
        S = _space_arg(args)
        G = qg.complete_graph(S) if kind == "complete" else qg.trivial_graph(S)
    elif kind == "classical":
        if not args.edges:
            raise ValidationError("classical graphs need --edges FILE")
        G = qg.from_classical(qg.classical_from_dict(read_json(args.edges)))
    elif kind == "amplify":
        if len(args.graph) != 1:
            raise ValidationError("amplify needs exactly one --graph")
        G = qg.amplify(qg.graph_from_dict(read_json(args.graph[0])), args.n)
    else:
        if len(args.graph) != 2:
            raise ValidationError(f"{kind} needs two --graph files")
        G1, G2 = (qg.graph_from_dict(read_json(p)) for p in args.graph)
        G = qg.tensor(G1, G2) if kind == "tensor" else qg.direct_sum(G1, G2)
    emit(args, json.dumps(qg.graph_to_dict(G, tol=0.0), indent=2))
    return EXIT_OK


def cmd_present(args) -> int:
    exact = args.backend == "exact"
    if args.qck:
        G = qg.graph_from_dict(read_json(args.qck), tol=args.tol)
        pres = pr.qck_presentation(G, args.tol)
    else:
        E = qg.classical_from_dict(read_json(args.graph))
        if args.kind == "graph":
            pres = pr.graph_presentation(E, free=args.free)
        elif args.kind == "free-ck":
            pres = pr.free_ck_presentation(E.adjacency_matrix())
        else:
            pres = pr.ck_presentation(E.adjacency_matrix())
    data = pres.to_dict()
    if exact:
        data["exact"] = True
    emit(args, json.dumps(data, indent=2))
    return EXIT_OK


def _matrix(value) -> np.ndarray:
    arr = np.asarray(value, dtype=float)
    if arr.ndim == 3 and arr.shape[-1] == 2:
        return arr[..., 0] + 1j * arr[..., 1]
    if arr.ndim == 2:
        return arr.astype(complex)
    raise ValidationError("assignment matrices are rows of numbers or of [re, im] pairs")


def cmd_check(args) -> int:
    pres = pr.presentation_from_dict(read_json(args.presentation))
    data = read_json(args.assignment)
    try:
        images = {pr.Gen.parse(k): NumericElement(_matrix(v)) for k, v in data["images"].items()}
    except (KeyError, AttributeError, TypeError, ValueError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(f"malformed assignment JSON: {exc}") from exc
    sizes = {x.size for x in images.values()}
    if len(sizes) != 1:
        raise ValidationError("all assignment matrices must have the same size")
    one = NumericElement(np.eye(sizes.pop()))
    rep = pr.check_assignment(pres, pr.Assignment("numeric", images, one), args.tol)
    return emit_report(args, rep)


def _ueb_arg(args) -> ueb.UnitaryErrorBasis:
    if args.ueb:
        return ueb.ueb_from_dict(read_json(args.ueb))
    return ueb.pauli_ueb(args.n)


def cmd_verify_ueb(args) -> int:
    return emit_report(args, ueb.validate_ueb(_ueb_arg(args), args.tol))


def cmd_verify_linking(args) -> int:
    W = _ueb_arg(args)
    rep = ueb.check_linking_relations(ueb.linking_rep(W, args.tol, validate=False), args.tol)
    return emit_report(args, rep)


def cmd_verify_qcc_homo(args) -> int:
    if args.space:
        S = qs.space_from_dict(read_json(args.space))
        exact = args.backend in ("auto", "exact")
        pres = pr.qck_presentation(qg.complete_graph(S), args.tol, exact_coeffs=exact)
        rep = pr.check_assignment(pres, pr.qcc_homo_assignment(S, exact_coeffs=exact), args.tol,
                                  title="QCC homomorphism")
    else:
        rep = suites.suite_qcc_homo(args.n, args.tol, args.backend)
    return emit_report(args, rep)


def cmd_verify_main_theorem(args) -> int:
    target = qs.space_from_dict(read_json(args.space)) if args.space else args.n
    W = ueb.ueb_from_dict(read_json(args.ueb)) if args.ueb else None
    return emit_report(args, ueb.main_theorem_check(target, W, args.tol))


def _kinds(args) -> list[str]:
    return ["complete", "trivial"] if args.kind == "both" else [args.kind]


def cmd_verify_embeddings(args) -> int:
    W = ueb.ueb_from_dict(read_json(args.ueb)) if args.ueb else None
    reps = [ueb.embeddings(args.n, k, W, args.tol).report for k in _kinds(args)]
    return emit_report(args, merge(f"embeddings (N={args.n})", args.tol, reps))


def cmd_verify_crossed(args) -> int:
    W = ueb.ueb_from_dict(read_json(args.ueb)) if args.ueb else None
    reps = [ueb.crossed_product_identities(args.n, k, W, args.tol) for k in _kinds(args)]
    return emit_report(args, merge(f"crossed products (N={args.n})", args.tol, reps))


def cmd_verify_amplification(args) -> int:
    return emit_report(args, ueb.amplification_model_check(args.n, tol=args.tol))


def cmd_verify_all(args) -> int:
    return emit_report(args, suites.run_all(args.n, args.tol, args.backend, args.workers))


# Parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=None,
                        help="zero tolerance (default: $QCK_TOLERANCE or 1e-9)")
    common.add_argument("--backend", choices=["auto", "numeric", "exact"], default="auto",
                        help="coefficient arithmetic where a choice exists")
    common.add_argument("--report", choices=["text", "json"], default="text")
    common.add_argument("-o", "--output", help="write to a file instead of stdout")

    parser = argparse.ArgumentParser(prog="qck", description="Directed quantum graphs and quantum Cuntz-Krieger algebras.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    def verb(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        p.set_defaults(func=func)
        return p

    p = verb("space-validate", cmd_space_validate, "check that a space JSON carries a delta-form")
    p.add_argument("space")

    p = verb("qgraph-check", cmd_qgraph_check, "check the quantum adjacency axiom for a graph JSON")
    p.add_argument("graph")

    p = verb("qgraph-build", cmd_qgraph_build, "build a quantum graph and print its JSON")
    p.add_argument("kind", choices=["complete", "trivial", "classical", "amplify", "tensor", "direct-sum"])
    p.add_argument("--n", type=int, default=2, help="matrix size for M_N spaces and amplification")
    p.add_argument("--blocks", type=_ints, help="comma-separated block sizes (tracial state)")
    p.add_argument("--space", help="space JSON")
    p.add_argument("--edges", help="classical graph JSON")
    p.add_argument("--graph", action="append", default=[], help="quantum graph JSON (repeatable)")

    p = verb("present", cmd_present, "print a presentation as JSON")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--qck", metavar="GRAPH", help="quantum graph JSON")
    src.add_argument("--graph", metavar="EDGES", help="classical graph JSON")
    p.add_argument("--kind", choices=["graph", "free-ck", "ck"], default="graph",
                   help="presentation of a classical graph")
    p.add_argument("--free", action=argparse.BooleanOptionalAction, default=True,
                   help="free graph relations (no vertex orthogonality)")

    p = verb("check", cmd_check, "evaluate a presentation on numeric matrices")
    p.add_argument("presentation")
    p.add_argument("assignment", help='JSON {"images": {"S[1,1,1]": [[...]], ...}}')

    for name, func, text in (("verify-ueb", cmd_verify_ueb, "unitary error basis properties"),
                             ("verify-linking", cmd_verify_linking, "linking-algebra relations")):
        p = verb(name, func, text)
        p.add_argument("--n", type=int, default=2)
        p.add_argument("--ueb", help="UEB JSON (default: Pauli basis)")

    p = verb("verify-qcc-homo", cmd_verify_qcc_homo, "complete quantum graphs map onto Cuntz algebras")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--space", help="space JSON (default: the four reference spaces)")

    p = verb("verify-main-theorem", cmd_verify_main_theorem, "Cuntz isometries and unit for (M_N, tr)")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--space", help="space JSON; only a single tracial block is verifiable")
    p.add_argument("--ueb", help="UEB JSON (default: Pauli basis)")

    for name, func, text in (("verify-embeddings", cmd_verify_embeddings, "pi_N and sigma_N embeddings"),
                             ("verify-crossed", cmd_verify_crossed, "crossed-product identities")):
        p = verb(name, func, text)
        p.add_argument("--n", type=int, default=2)
        p.add_argument("--kind", choices=["complete", "trivial", "both"], default="both")
        p.add_argument("--ueb", help="UEB JSON (default: Pauli basis)")

    p = verb("verify-amplification", cmd_verify_amplification, "amplification model in M_N *_1 (C(S^1) + C)")
    p.add_argument("--n", type=int, default=2)

    p = verb("verify-all", cmd_verify_all, "run every verification suite concurrently")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--workers", type=int, default=None, help="worker processes (1 runs serially)")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.tol = resolve(args.tolerance)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"qck: {exc}", file=sys.stderr)
        return EXIT_IO
    except NotVerifiableError as exc:
        print(f"qck: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValidationError as exc:
        print(f"qck: invalid input: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except QCKError as exc:
        print(f"qck: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001 - exit-code contract
        print(f"qck: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
