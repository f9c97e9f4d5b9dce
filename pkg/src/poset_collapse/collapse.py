"""Elementary collapses and the compiler from NE-certificates to collapse sequences.

A free face is a face with exactly one proper coface; removing the open pair
is an elementary collapse.  The constructive content of "NE-reduction implies
collapse": a nonevasive link witness for a vertex v compiles into a collapse
of the closed star of v, where every elementary step (tau, sigma) of the link
collapse lifts to (tau+{v}, sigma+{v}) and the terminal pair is ({v}, {v,p})
for the witness's leaf point p.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    VOID,
    ComplexError,
    SimplicialComplex,
    delete_vertex,
    link,
)
from .evasiveness import (
    BUDGET_EXCEEDED,
    DEFAULT_BUDGET,
    NOT_FOUND,
    NECertificate,
    PointWitness,
    SearchBudget,
    SplitWitness,
    Witness,
    _BudgetHit,
    _Counter,
    verify_witness,
)

Step = tuple[frozenset, frozenset]


@dataclass(frozen=True)
class CollapseSequence:
    """Ordered (free face, coface) pairs; replay removes both open faces each step."""

    steps: tuple[Step, ...]

    def __post_init__(self):
        for tau, sigma in self.steps:
            if len(sigma) != len(tau) + 1 or not tau < sigma:
                raise ValueError(f"malformed step ({sorted(tau)}, {sorted(sigma)})")

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __add__(self, other: "CollapseSequence") -> "CollapseSequence":
        return CollapseSequence(self.steps + other.steps)


def _face_key(f: frozenset) -> tuple:
    return tuple(sorted(f))


def _containing_facets(X: SimplicialComplex, tau: frozenset) -> list[frozenset]:
    return [F for F in X.facets if tau < F]


def _is_free(X: SimplicialComplex, tau: frozenset, sigma: frozenset) -> bool:
    if not X.has_face(tau):
        return False
    over = _containing_facets(X, tau)
    return len(over) == 1 and over[0] == sigma and len(sigma) == len(tau) + 1


def free_pairs(X: SimplicialComplex) -> list[Step]:
    """All (tau, sigma) with sigma the unique face properly containing tau,
    in lexicographic order."""
    out = []
    for tau in X.faces():
        over = _containing_facets(X, tau)
        if len(over) == 1 and len(over[0]) == len(tau) + 1:
            out.append((tau, over[0]))
    out.sort(key=lambda p: (_face_key(p[0]), _face_key(p[1])))
    return out


def apply_collapse(X: SimplicialComplex, tau: frozenset, sigma: frozenset) -> SimplicialComplex:
    """Remove the open faces tau and sigma; recomputes the facet set."""
    tau, sigma = frozenset(tau), frozenset(sigma)
    if not _is_free(X, tau, sigma):
        raise ComplexError(f"({sorted(tau)}, {sorted(sigma)}) is not a free pair")
    candidates = [F for F in X.facets if F != sigma]
    candidates += [sigma - {u} for u in sigma if sigma - {u} != tau]
    return SimplicialComplex(candidates)


def verify_collapse(X, Y, seq) -> bool:
    """Replay semantics: every step must be free and the end state must equal Y."""
    if not isinstance(seq, CollapseSequence) or not isinstance(X, SimplicialComplex):
        return False
    cur = X
    for tau, sigma in seq:
        if not _is_free(cur, tau, sigma):
            return False
        cur = apply_collapse(cur, tau, sigma)
    return cur == Y


def _witness_point_collapse(L: SimplicialComplex, w: Witness) -> tuple[list[Step], str]:
    # collapse L all the way to a single point, following the witness recursion
    if isinstance(w, PointWitness):
        return [], w.vertex
    star_steps = _vertex_steps(L, w.vertex, w.link)
    rest, p = _witness_point_collapse(delete_vertex(L, w.vertex), w.deletion)
    return star_steps + rest, p


def _vertex_steps(X: SimplicialComplex, v: str, link_witness: Witness) -> list[Step]:
    lk = link(X, v)
    lk_steps, p = _witness_point_collapse(lk, link_witness)
    lifted: list[Step] = [(tau | {v}, sigma | {v}) for tau, sigma in lk_steps]
    lifted.append((frozenset({v}), frozenset({v, p})))
    return lifted


def witness_to_vertex_collapse(X: SimplicialComplex, v: str, w: Witness) -> CollapseSequence:
    """Collapse sequence realizing X down to X minus v, from a witness for lk_X v."""
    if v not in X.vertices:
        raise ComplexError(f"unknown vertex {v!r}")
    lk = link(X, v)
    if lk is VOID or not verify_witness(lk, w):
        raise ComplexError("witness does not verify for the vertex link")
    return CollapseSequence(tuple(_vertex_steps(X, v, w)))


def certificate_to_collapse(X: SimplicialComplex, cert: NECertificate) -> CollapseSequence:
    """Concatenate the per-vertex star collapses along the certificate's order."""
    steps: list[Step] = []
    cur = X
    for x, w in cert.steps():
        if x not in cur.vertices:
            raise ComplexError(f"certificate removes unknown vertex {x!r}")
        lk = link(cur, x)
        if lk is VOID or not verify_witness(lk, w):
            raise ComplexError(f"certificate witness for {x!r} does not verify")
        steps.extend(_vertex_steps(cur, x, w))
        cur = delete_vertex(cur, x)
    return CollapseSequence(tuple(steps))


def search_collapse(X: SimplicialComplex, Y, budget: SearchBudget = DEFAULT_BUDGET):
    """DFS over free pairs (lexicographic order, memoized dead states) for a
    collapse from X to Y; Y=None means "down to any single point"."""
    if Y is not None:
        for f in Y.facets:
            if not X.has_face(f):
                raise ComplexError("target is not a subcomplex of the source")
        target_faces = Y.faces()
        if (X.n_faces() - len(target_faces)) % 2 != 0:
            return NOT_FOUND
    if len(X.vertices) > budget.max_vertices:
        return BUDGET_EXCEEDED
    counter = _Counter(budget.max_nodes)
    dead: set = set()

    def done(cur: SimplicialComplex) -> bool:
        if Y is None:
            return len(cur.vertices) == 1
        return cur == Y

    def dfs(cur: SimplicialComplex):
        if done(cur):
            return []
        if cur.facets in dead:
            return None
        counter.spend()
        if Y is not None and not target_faces <= cur.faces():
            dead.add(cur.facets)
            return None
        for tau, sigma in free_pairs(cur):
            if Y is not None and (tau in target_faces or sigma in target_faces):
                continue
            rest = dfs(apply_collapse(cur, tau, sigma))
            if rest is not None:
                return [(tau, sigma)] + rest
        dead.add(cur.facets)
        return None

    try:
        found = dfs(X)
    except _BudgetHit:
        return BUDGET_EXCEEDED
    if found is None:
        return NOT_FOUND
    return CollapseSequence(tuple(found))
