"""Presentations of the universal algebras and the relation checker.

A presentation is a list of generators and a list of relations, each stored
as a formal *-polynomial "LHS - RHS" in the free *-algebra.  An assignment
sends generators to elements of one backend; checking it evaluates every
relation there and records the backend residual.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, NamedTuple, Sequence

import networkx as nx
import numpy as np
import sympy

from . import qgraph as qg
from . import qspace as qs
from .backend import FREE, CuntzAlgebra, FreeCircleProduct, MatrixOver, NumericElement, ScalarElement, WordElement
from .backend.freestar import labels_of, substitute
from .errors import ValidationError
from .qgraph import ClassicalGraph, QuantumGraph
from .qspace import FiniteQuantumSpace
from .report import Report
from .tolerance import resolve


class Gen(NamedTuple):
    """Generator label: a name and an index tuple, printed as ``S[1,2,1]``."""

    name: str
    index: tuple

    def __str__(self) -> str:
        return f"{self.name}[{','.join(str(i) for i in self.index)}]"

    @classmethod
    def parse(cls, text: str) -> "Gen":
        name, _, rest = text.partition("[")
        if not rest.endswith("]"):
            raise ValidationError(f"bad generator label {text!r}")
        parts = [p for p in rest[:-1].split(",") if p != ""]
        return cls(name, tuple(_parse_index(p) for p in parts))


def _parse_index(p: str):
    try:
        return int(p)
    except ValueError:
        return p


def S(*index) -> Gen:
    return Gen("S", tuple(index))


def P(*index) -> Gen:
    return Gen("P", tuple(index))


def g(label: Gen) -> WordElement:
    return FREE.gen(label)


def gs(label: Gen) -> WordElement:
    return FREE.word(((label, True),))


def clean(c: complex):
    """Drop zero imaginary parts and integral reals for readable polynomials."""
    c = complex(c)
    if c.imag == 0:
        r = c.real
        return int(r) if r == int(r) and abs(r) < 2 ** 53 else r
    return c


def exact(c, tol: float = 1e-12):
    """Rationalise real and imaginary parts; raise if that changes the value."""
    if isinstance(c, sympy.Basic):
        return c
    c = complex(c)
    parts = []
    for x in (c.real, c.imag):
        fr = Fraction(x).limit_denominator(10 ** 9)
        if abs(float(fr) - x) > tol:
            raise ValidationError(f"coefficient {x!r} has no exact rational form")
        parts.append(sympy.Rational(fr.numerator, fr.denominator))
    return parts[0] + sympy.I * parts[1]


@dataclass(frozen=True)
class Relation:
    name: str
    poly: WordElement


@dataclass
class Presentation:
    title: str
    generators: tuple
    relations: list[Relation] = field(default_factory=list)

    def __post_init__(self):
        declared = set(self.generators)
        for r in self.relations:
            extra = labels_of(r.poly) - declared
            if extra:
                raise ValidationError(f"relation {r.name} uses undeclared generators {sorted(map(str, extra))}")

    def add(self, name: str, poly: WordElement) -> None:
        extra = labels_of(poly) - set(self.generators)
        if extra:
            raise ValidationError(f"relation {name} uses undeclared generators")
        self.relations.append(Relation(name, poly))

    def relation(self, name: str) -> Relation:
        for r in self.relations:
            if r.name == name:
                return r
        raise KeyError(name)

    def map_coefficients(self, fn) -> "Presentation":
        return Presentation(self.title, self.generators,
                            [Relation(r.name, r.poly.map_coefficients(fn)) for r in self.relations])

    def exact(self) -> "Presentation":
        return self.map_coefficients(exact)

    def to_dict(self) -> dict:
        return {"title": self.title,
                "generators": [str(x) for x in self.generators],
                "relations": [{"name": r.name, "terms": _poly_terms(r.poly)} for r in self.relations]}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _poly_terms(poly: WordElement) -> list[dict]:
    out = []
    for w, c in poly.terms.items():
        z = complex(c)
        out.append({"coeff": [z.real, z.imag], "word": [[str(lab), bool(st)] for lab, st in w]})
    return out


def presentation_from_dict(data: Mapping) -> Presentation:
    try:
        gens = tuple(Gen.parse(x) for x in data["generators"])
        rels = []
        for r in data["relations"]:
            terms = {}
            for t in r["terms"]:
                word = tuple((Gen.parse(lab), bool(st)) for lab, st in t["word"])
                terms[word] = clean(complex(t["coeff"][0], t["coeff"][1]))
            rels.append(Relation(r["name"], FREE.element(terms)))
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        raise ValidationError(f"malformed presentation JSON: {exc}") from exc
    return Presentation(data.get("title", ""), gens, rels)


# Presentations

def qck_generators(space: FiniteQuantumSpace) -> tuple[Gen, ...]:
    return tuple(S(b.a, b.i, b.j) for b in space.basis)


def qck_presentation(G: QuantumGraph, tol: float | None = None, *, exact_coeffs: bool = False) -> Presentation:
    """Partial-isometry and quantum Cuntz-Krieger relations, one of each per (a, i, j)."""
    space, A = G.space, G.matrix
    if G.check(tol).passed is False:
        raise ValidationError("qck_presentation needs a valid quantum graph")
    conv = exact if exact_coeffs else clean
    pres = Presentation("qck", qck_generators(space))
    for b in space.basis:
        a, i, j = b.a, b.i, b.j
        n = space.block_dims[a - 1]
        pi = -g(S(a, i, j))
        for r in range(1, n + 1):
            for s in range(1, n + 1):
                pi = pi + g(S(a, i, r)) * gs(S(a, s, r)) * g(S(a, s, j))
        pres.add(f"partial_isometry{b}", pi)

        lhs = FREE.zero()
        for l in range(1, n + 1):
            lhs = lhs + gs(S(a, l, i)) * g(S(a, l, j))
        col = A[:, space.index(b)]
        rhs = FREE.zero()
        for t, coeff in zip(space.basis, col):
            if coeff == 0:
                continue
            nb = space.block_dims[t.a - 1]
            inner = FREE.zero()
            for l in range(1, nb + 1):
                inner = inner + g(S(t.a, t.i, l)) * gs(S(t.a, t.j, l))
            rhs = rhs + inner * conv(coeff)
        pres.add(f"qck{b}", lhs - rhs)
    return pres


def _check01(A) -> np.ndarray:
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValidationError("matrix must be square")
    if not np.all((A == 0) | (A == 1)):
        raise ValidationError("Cuntz-Krieger matrices must have entries in {0, 1}")
    return A.astype(int)


def free_ck_presentation(A) -> Presentation:
    """Partial isometries S_i with S_i^* S_i = sum_j A(i, j) S_j S_j^*."""
    A = _check01(A)
    n = A.shape[0]
    pres = Presentation("free_ck", tuple(S(i) for i in range(1, n + 1)))
    for i in range(1, n + 1):
        pres.add(f"partial_isometry({i})", g(S(i)) * gs(S(i)) * g(S(i)) - g(S(i)))
    for i in range(1, n + 1):
        rhs = FREE.zero()
        for j in range(1, n + 1):
            if A[i - 1, j - 1]:
                rhs = rhs + g(S(j)) * gs(S(j))
        pres.add(f"ck({i})", gs(S(i)) * g(S(i)) - rhs)
    return pres


def ck_presentation(A) -> Presentation:
    """The free relations plus orthogonal ranges S_i^* S_j = 0 for i != j."""
    pres = free_ck_presentation(A)
    pres.title = "ck"
    n = len(pres.generators)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                pres.add(f"orthogonal_ranges({i},{j})", gs(S(i)) * g(S(j)))
    return pres


def graph_presentation(E: ClassicalGraph, free: bool = True) -> Presentation:
    """Cuntz-Krieger E-family relations; ``free=False`` adds P_v P_w = 0 for v != w.

    Vertex generators are ``P[v]``; edge generators ``S[k]`` use the edge
    position k in ``E.edges``.
    """
    gens = tuple(P(v) for v in E.vertices) + tuple(S(k) for k in range(len(E.edges)))
    pres = Presentation("free_graph" if free else "graph", gens)
    for v in E.vertices:
        pres.add(f"self_adjoint({v})", g(P(v)) - gs(P(v)))
        pres.add(f"idempotent({v})", g(P(v)) * g(P(v)) - g(P(v)))
    for k, (_, r) in enumerate(E.edges):
        pres.add(f"partial_isometry({k})", g(S(k)) * gs(S(k)) * g(S(k)) - g(S(k)))
        pres.add(f"source_projection({k})", gs(S(k)) * g(S(k)) - g(P(r)))
    for v in E.vertices:
        out = E.out_edges(v)
        if out:
            total = FREE.zero()
            for k in out:
                total = total + g(S(k)) * gs(S(k))
            pres.add(f"range_sum({v})", g(P(v)) - total)
    if not free:
        for v in E.vertices:
            for w in E.vertices:
                if v != w:
                    pres.add(f"orthogonal({v},{w})", g(P(v)) * g(P(w)))
    return pres


# Assignments and checking

@dataclass
class Assignment:
    backend: str
    images: dict
    one: Any = None

    def __post_init__(self):
        tags = {getattr(x, "backend_tag", type(x).__name__) for x in self.images.values()}
        if len(tags) > 1:
            raise ValidationError(f"assignment mixes backends: {sorted(tags)}")

    def __getitem__(self, label):
        return self.images[label]

    def zero(self):
        return next(iter(self.images.values())).zero()


def check_assignment(pres: Presentation, asg: Assignment, tol: float | None = None,
                     title: str | None = None) -> Report:
    """Evaluate every relation; residual = max coefficient of the backend normal form."""
    tol = resolve(tol)
    missing = [x for x in pres.generators if x not in asg.images]
    if missing:
        raise ValidationError(f"assignment misses generators {[str(x) for x in missing]}")
    rep = Report(title or f"{pres.title} in {asg.backend}", tol)
    for idx, rel in enumerate(pres.relations):
        val = substitute(rel.poly, asg.images, one=asg.one)
        if val is None:
            rep.add(rel.name, 0.0, relation=idx, support=0)
            continue
        rep.add(rel.name, val.residual(), relation=idx, support=val.support(tol))
    return rep


def structural_residual(rep: Report) -> int:
    """Total number of surviving normal-form words across relations."""
    return sum(r.support or 0 for r in rep.results)


# Concrete assignments

def qcc_homo_assignment(space: FiniteQuantumSpace, exact_coeffs: bool = False) -> Assignment:
    """S^a_ij -> (Q_a)_ii^{-1/2} delta^{-1} s_(a,i,j) in O_{dim B}.

    Cuntz generators are numbered by the flat (a, i, j) order, starting at 1.
    """
    n = space.dim
    if n < 2:
        raise ValidationError("the Cuntz target needs dim B >= 2")
    O = CuntzAlgebra(n)
    images = {}
    if exact_coeffs:
        d2 = exact(space.delta_sq)
        for p, b in enumerate(space.basis):
            q = exact(space.q_weights[b.a - 1][b.i - 1])
            images[S(b.a, b.i, b.j)] = O.generator(p + 1) * (1 / (sympy.sqrt(q) * sympy.sqrt(d2)))
    else:
        for p, b in enumerate(space.basis):
            q = space.q_weights[b.a - 1][b.i - 1]
            images[S(b.a, b.i, b.j)] = O.generator(p + 1) * (1.0 / (math.sqrt(q) * space.delta))
    return Assignment(O.tag, images, O.one())


def single_block_size(asg: Assignment) -> int:
    idx = [lab.index for lab in asg.images]
    if any(lab.name != "S" or len(i) != 3 or i[0] != 1 for lab, i in zip(asg.images, idx)):
        raise ValidationError("gauge actions need generators S[1,i,j] of a single block")
    n = int(round(math.sqrt(len(idx))))
    if n * n != len(idx):
        raise ValidationError("generator set is not a full N x N block")
    return n


def gauge_transform(asg: Assignment, lam: complex, U, tol: float | None = None) -> Assignment:
    """S -> lam U S U^* on the generator matrix (S_ij)."""
    tol = resolve(tol)
    U = np.asarray(U, dtype=complex)
    n = single_block_size(asg)
    if U.shape != (n, n) or np.abs(U.conj().T @ U - np.eye(n)).max() > tol:
        raise ValidationError("U must be an N x N unitary")
    if abs(abs(lam) - 1) > tol:
        raise ValidationError("lambda must have modulus one")
    images = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            acc = None
            for k in range(1, n + 1):
                for l in range(1, n + 1):
                    c = complex(lam * U[i - 1, k - 1] * np.conj(U[j - 1, l - 1]))
                    if c == 0:
                        continue
                    term = asg.images[S(1, k, l)] * c
                    acc = term if acc is None else acc + term
            images[S(1, i, j)] = acc if acc is not None else asg.zero()
    return Assignment(asg.backend, images, asg.one)


def diagonal_character(space: FiniteQuantumSpace, x_coeffs, eps: Sequence,
                       tol: float | None = None) -> tuple[QuantumGraph, Assignment]:
    """The scalar character S_i1 -> eps_i, S_ij -> 0 (j > 1) of a diagonal graph on M_N.

    Symbolic (sympy) values of eps give an exact assignment.
    """
    tol = resolve(tol)
    if space.num_blocks != 1:
        raise ValidationError("diagonal_character needs a single matrix block")
    n = space.block_dims[0]
    if len(eps) != n:
        raise ValidationError(f"need {n} values of epsilon")
    G = qg.diagonal_graph(space, x_coeffs, tol)
    x11 = complex(G.matrix[0, 0])
    mods = [abs(complex(sympy.N(e))) ** 2 for e in eps]
    if abs(sum(mods) - 1) > tol:
        raise ValidationError("sum |eps_i|^2 must equal 1")
    if abs(x11 * mods[0] - 1) > tol:
        raise ValidationError("x_11 |eps_1|^2 must equal 1")
    symbolic = any(isinstance(e, sympy.Basic) for e in eps)
    images = {}
    for b in space.basis:
        val = eps[b.i - 1] if b.j == 1 else 0
        images[S(b.a, b.i, b.j)] = ScalarElement(val if symbolic else complex(val))
    return G, Assignment("scalar", images, ScalarElement(1))


@dataclass(frozen=True)
class Degeneracy:
    relation: str
    vanishing: tuple


def degeneracy_scan(pres: Presentation) -> list[Degeneracy]:
    """Relations of the form sum_k c_k g_k^* g_k with c_k > 0 force every g_k = 0."""
    out = []
    for rel in pres.relations:
        terms = rel.poly.terms
        if not terms:
            continue
        gens = []
        for w, c in terms.items():
            if len(w) != 2 or w[0][0] != w[1][0] or not w[0][1] or w[1][1]:
                break
            z = complex(c)
            if z.imag != 0 or z.real <= 0:
                break
            gens.append(w[0][0])
        else:
            out.append(Degeneracy(rel.name, tuple(sorted(gens))))
    return out


def vanishing_generators(pres: Presentation) -> set:
    return {x for d in degeneracy_scan(pres) for x in d.vanishing}


def _paths_to_sinks(E: ClassicalGraph) -> list[tuple[Any, tuple[int, ...]]]:
    sinks = set(E.sinks)
    out = []

    def walk(start, v, path):
        if v in sinks:
            out.append((start, path))
        for k in E.out_edges(v):
            walk(start, E.range(k), path + (k,))

    for v in E.vertices:
        walk(v, v, ())
    return out


def ck_family_on_paths(E: ClassicalGraph) -> Assignment:
    """Cuntz-Krieger E-family on the span of paths that end at sinks."""
    if not E.is_acyclic:
        raise ValidationError("ck_family_on_paths needs a graph without directed cycles")
    paths = _paths_to_sinks(E)
    pos = {p: n for n, p in enumerate(paths)}
    d = len(paths)
    images = {}
    for v in E.vertices:
        m = np.zeros((d, d))
        for n, (start, _) in enumerate(paths):
            if start == v:
                m[n, n] = 1
        images[P(v)] = NumericElement(m)
    for k, (s, r) in enumerate(E.edges):
        m = np.zeros((d, d))
        for n, (start, path) in enumerate(paths):
            if start == r:
                m[pos[(s, (k,) + path)], n] = 1
        images[S(k)] = NumericElement(m)
    return Assignment(f"numeric[{d}]", images, NumericElement(np.eye(d)))


def _sorted_vertices(E: ClassicalGraph) -> list:
    try:
        return sorted(E.vertices)
    except TypeError:
        return sorted(E.vertices, key=repr)


def rotation_unitary(k: int, w: int, x: int, t: float) -> np.ndarray:
    """2 pi t rotation in the (w, x) coordinate plane of C^k; identity if x == w."""
    u = np.eye(k)
    if x != w:
        c, s = math.cos(2 * math.pi * t), math.sin(2 * math.pi * t)
        u[w, w], u[w, x], u[x, w], u[x, x] = c, s, -s, c
    return u


def _scalar_matrix(m: np.ndarray, one: NumericElement) -> MatrixOver:
    k = m.shape[0]
    return MatrixOver([[one * float(m[i, j]) for j in range(k)] for i in range(k)])


def rotation_homotopy_check(E: ClassicalGraph, asg: Assignment, t: float,
                            base=None, tol: float | None = None) -> Report:
    """Relations of mu_t and of the block-diagonal family phi inside M_{E^0}(backend).

    mu_t(P_v) = u^v iota(P_v) u^v*, mu_t(S_e) = u^{s(e)} iota(S_e) u^{r(e)}*, with
    iota the corner at the base vertex.  Since the rotation has period one,
    mu_1 = mu_0 = iota; the corner family is carried to phi at t = 1/4 up to the
    diagonal sign unitary D = diag(+1 at base, -1 elsewhere), which is checked too.
    """
    tol = resolve(tol)
    if not 0 <= t <= 1:
        raise ValidationError("t must lie in [0, 1]")
    pres = graph_presentation(E, free=False)
    pre = check_assignment(pres, asg, tol)
    if not pre.passed:
        raise ValidationError("input family violates the Cuntz-Krieger relations")
    order = _sorted_vertices(E)
    w = order[0] if base is None else base
    if w not in E.vertices:
        raise ValidationError(f"base vertex {w!r} is not a vertex")
    k = len(order)
    at = {v: n for n, v in enumerate(order)}
    one = asg.one
    zero = one.zero()

    def corner(x, i, j):
        return MatrixOver.single(k, i, j, x, zero)

    def u(x, time):
        return _scalar_matrix(rotation_unitary(k, at[w], at[x], time), one)

    def mu(time):
        imgs = {}
        for v in E.vertices:
            uv = u(v, time)
            imgs[P(v)] = uv * corner(asg[P(v)], at[w], at[w]) * uv.adjoint()
        for e, (s, r) in enumerate(E.edges):
            imgs[S(e)] = u(s, time) * corner(asg[S(e)], at[w], at[w]) * u(r, time).adjoint()
        return imgs

    phi = {P(v): corner(asg[P(v)], at[v], at[v]) for v in E.vertices}
    phi.update({S(e): corner(asg[S(e)], at[s], at[r]) for e, (s, r) in enumerate(E.edges)})

    mu_t = mu(t)
    rep = Report(f"rotation homotopy t={t:g}", tol)
    rep.extend(check_assignment(pres, Assignment("matrix", mu_t, _scalar_matrix(np.eye(k), one)), tol),
               prefix="mu_t")
    rep.extend(check_assignment(pres, Assignment("matrix", phi, _scalar_matrix(np.eye(k), one)), tol),
               prefix="phi")
    iota = {x: corner(asg[x], at[w], at[w]) for x in pres.generators}
    rep.add("mu_0 equals corner embedding",
            max((mu(0.0)[x] - iota[x]).residual() for x in pres.generators))
    D = _scalar_matrix(np.diag([1.0 if v == w else -1.0 for v in order]), one)
    mq = mu(0.25)
    rep.add("mu_1/4 equals Ad(D) phi",
            max((mq[x] - D * phi[x] * D.adjoint()).residual() for x in pres.generators))
    return rep


def presentation_split_check(pres: Presentation) -> list[frozenset]:
    """Connected components of the generator co-occurrence graph of the relations."""
    graph = nx.Graph()
    graph.add_nodes_from(pres.generators)
    for rel in pres.relations:
        labs = sorted(labels_of(rel.poly), key=str)
        graph.add_nodes_from(labs)
        for a, b in zip(labs, labs[1:]):
            graph.add_edge(a, b)
    comps = [frozenset(c) for c in nx.connected_components(graph)]
    return sorted(comps, key=lambda c: min(str(x) for x in c))


def classical_consistency_check(E: ClassicalGraph, tol: float | None = None) -> Report:
    """Substitute S^(i)_11 = S(f_i) = N S(e_i) = S_i into the quantum presentation
    of the classical graph and compare relation by relation with the free
    Cuntz-Krieger presentation of B_E."""
    tol = resolve(tol)
    G = qg.from_classical(E)
    space = G.space
    n = space.dim
    quantum = qck_presentation(G, tol)
    classical = free_ck_presentation(E.adjacency_matrix())
    # S(e_i) = S_i / N and f_i = Q_ii^{-1} e_i, so S(f_i) = Q_ii^{-1} S_i / N
    images = {S(i + 1, 1, 1): g(S(i + 1)) * (1.0 / space.q_weights[i][0] / n) for i in range(n)}
    rep = Report(f"classical consistency ({n} vertices)", tol)
    for i in range(1, n + 1):
        for qname, cname in ((f"partial_isometry({i},1,1)", f"partial_isometry({i})"),
                             (f"qck({i},1,1)", f"ck({i})")):
            qpoly = substitute(quantum.relation(qname).poly, images, one=FREE.one())
            cpoly = classical.relation(cname).poly
            diff = qpoly - cpoly
            rep.add(f"{qname} -> {cname}", diff.residual(), support=diff.support(tol))
    return rep


def trivial_quotient_assignment(n: int) -> tuple[Presentation, Assignment]:
    """FO(T M_N) -> free product of N copies of C, S_ij -> delta_ij 1_i."""
    G = qg.trivial_graph(qs.make_tracial_space([n]))
    pres = qck_presentation(G)
    F = FreeCircleProduct(n)
    images = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            images[S(1, i, j)] = F.local_unit(i) if i == j else F.zero()
    return pres, Assignment(F.tag, images, None)


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


__all__ = [
    "Assignment", "Degeneracy", "Gen", "Presentation", "Relation", "check_assignment",
    "ck_family_on_paths", "ck_presentation", "classical_consistency_check", "degeneracy_scan",
    "diagonal_character", "free_ck_presentation", "gauge_transform", "graph_presentation",
    "presentation_split_check", "qcc_homo_assignment", "qck_presentation",
    "rotation_homotopy_check", "structural_residual", "trivial_quotient_assignment",
    "vanishing_generators",
]
