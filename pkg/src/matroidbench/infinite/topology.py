"""Topological predicates on standard subspaces of structured graphs.

Decision rules (all computed from :mod:`periodic` analyses):

* closure connected: the components of (V(D), D) joined to the ends they accumulate at and to the
  ends their hub vertices are indistinguishable from form one linked piece, and there are not
  infinitely many free finite components.
* circle: after identifying each end with the hubs dominating it, every point of the closure has
  degree 2 (an end's degree is its number of D-rays) and the closure is connected.
* acirclic: no finite cycle, and the bipartite multigraph {components} x {ends}, with one edge per
  ray class and one per hub, is a forest.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import MatroidError
from ..graphs import UnionFind
from .periodic import INF, Analysis, analyse, end_structure, representative_edges
from .sgraph import StructuredGraph
from .words import EdgeSetExpr, UPWord, edge_name, single


class PreconditionError(MatroidError):
    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class Refused(MatroidError):
    pass


@dataclass(frozen=True)
class EdgeEnd:
    tails: frozenset
    dominated_by: frozenset


def ends(G: StructuredGraph) -> list[EdgeEnd]:
    _, es = end_structure(G)
    return [EdgeEnd(e.tails, e.hubs) for e in es]


def closure_connected(G: StructuredGraph, D: EdgeSetExpr, spanning: bool = False) -> bool:
    return analyse(G, D, spanning).closure_connected()


def _hub_points(A: Analysis) -> dict[int, list]:
    out: dict[int, list] = {}
    for e in A.ends:
        out[e.index] = sorted(e.hubs)
    return out


def _ray_count(A: Analysis) -> dict[int, int]:
    out: dict[int, int] = {}
    for x in A.present:
        if isinstance(x, tuple) and len(x) == 3 and x[0] == "#V":
            end = A.pieces[x[1]].end
            out[end] = out.get(end, 0) + 1
    return out


def is_circle(G: StructuredGraph, D: EdgeSetExpr) -> bool:
    D = D & G.universe
    if D.is_empty():
        return False
    A = analyse(G, D)
    if A.free_pieces:
        return False
    merged = {u for e in A.ends for u in e.hubs}
    for v in G.core.vertices:
        d = A.degree(v)
        if v in merged:
            if d == INF:
                return False
        elif d not in (0, 2):
            return False
    for t in G.tails:
        for lv in A.check_levels():
            if A.degree((t, lv)) not in (0, 2):
                return False
    rays = _ray_count(A)
    present = A.present_ends()
    for e in A.ends:
        hub_deg = sum(A.degree(u) for u in e.hubs)
        deg = hub_deg + rays.get(e.index, 0)
        if (e.index in present or hub_deg > 0) and deg != 2:
            return False
    return A.closure_connected()


def contains_finite_cycle(G: StructuredGraph, D: EdgeSetExpr) -> bool:
    return analyse(G, D).has_finite_cycle


def contains_double_ray(G: StructuredGraph, D: EdgeSetExpr) -> bool:
    """Only meaningful when D has no finite cycle: then D is a forest and a double ray exists iff
    some tree carries two ray classes."""
    A = analyse(G, D)
    return any(len(v) >= 2 for v in A.comp_rays().values())


def contains_algebraic_cycle(G: StructuredGraph, D: EdgeSetExpr) -> bool:
    """D contains a finite cycle or a double ray."""
    A = analyse(G, D)
    if A.has_finite_cycle:
        return True
    return any(len(v) >= 2 for v in A.comp_rays().values())


def circle_witness(G: StructuredGraph, D: EdgeSetExpr) -> str | None:
    """A description of a circle inside the closure of D, or None when D is acirclic."""
    A = analyse(G, D)
    if A.has_finite_cycle:
        return "finite cycle"
    gamma = UnionFind()
    for x in sorted(A.present, key=repr):
        root = A.uf.find(x)
        if isinstance(x, tuple) and len(x) == 3 and x[0] == "#V":
            end = A.pieces[x[1]].end
            if not gamma.union(("comp", root), ("end", end)):
                return f"two rays of one component reach end {end}, or a ray meets a dominating vertex"
        elif not isinstance(x, tuple) and x in A.hub_ends and A.degree(x) > 0:
            end = A.hub_ends[x]
            if not gamma.union(("comp", root), ("end", end)):
                return f"vertex {x} is indistinguishable from end {end} and joined to it through D"
    return None


def acirclic(G: StructuredGraph, D: EdgeSetExpr) -> bool:
    return circle_witness(G, D) is None


def is_bond(G: StructuredGraph, F: EdgeSetExpr) -> bool:
    """F is a minimal non-empty cut: G - F has exactly two components and F runs between them."""
    F = F & G.universe
    if F.is_empty():
        return False
    A = analyse(G, G.complement(F), spanning=True)
    if A.graph_component_count() != 2:
        return False
    for e in representative_edges(G, F, A.rep_limit()):
        a, b = G.endpoints(e)
        if A.comp_of(a) == A.comp_of(b):
            return False
    return True


def graph_connected(G: StructuredGraph, D: EdgeSetExpr) -> bool:
    return analyse(G, D, spanning=True).graph_component_count() == 1


# -- topological spanning trees ----------------------------------------------


def _tst_iii(G: StructuredGraph, T: EdgeSetExpr) -> bool:
    A = analyse(G, T, spanning=True)
    if not A.closure_connected():
        return False
    for e in representative_edges(G, T, A.rep_limit()):
        if analyse(G, T.remove(e), spanning=True).closure_connected():
            return False
    return True


def _tst_ii(G: StructuredGraph, T: EdgeSetExpr) -> bool:
    if not acirclic(G, T):
        return False
    A = analyse(G, T, spanning=True)
    for e in representative_edges(G, G.complement(T), A.rep_limit()):
        if acirclic(G, T.add(e)):
            return False
    return True


def is_topological_spanning_tree(G: StructuredGraph, T: EdgeSetExpr, criterion: str = "iii") -> bool:
    """Criterion (iii): T meets every finite bond and is minimal with this property, i.e. the closure
    of (V, T) is connected and stops being so when any edge is removed.  Criterion (ii): T is
    acirclic and T + e contains a circle for every other edge e.  ``both`` checks that they agree."""
    T = T & G.universe
    if criterion == "iii":
        return _tst_iii(G, T)
    if criterion == "ii":
        return _tst_ii(G, T)
    if criterion == "both":
        a, b = _tst_iii(G, T), _tst_ii(G, T)
        if a != b:
            raise AssertionError(f"criteria disagree on {T}: (iii)={a} (ii)={b}")
        return a
    raise ValueError(f"unknown criterion {criterion!r}")


def _blocks(G: StructuredGraph, F: EdgeSetExpr, start: int, period: int) -> list[EdgeSetExpr]:
    E = G.universe
    out = []
    order = sorted(G.families(), key=lambda f: ("rail", "cross", "coretail").index(f.split(":")[0]))
    for fam in order:
        for r in range(period):
            w = (UPWord.residues(start, period, [start + r]) & E.word(fam)) - F.word(fam)
            if not w.is_empty():
                out.append(EdgeSetExpr(frozenset(), {fam: w}))
    return out


def topological_spanning_tree(G: StructuredGraph, F: EdgeSetExpr | None = None) -> EdgeSetExpr:
    """Greedy deletion from E(G) keeping the closure of (V, T) connected and never deleting F.

    Infinite families are deleted as whole residue blocks, finite edges one at a time; the result
    is validated and, if it is not a topological spanning tree, the block period is refined."""
    F = (F or EdgeSetExpr()) & G.universe
    witness = circle_witness(G, F)
    if witness:
        raise PreconditionError("F spans a circle", witness)
    E = G.universe
    A = analyse(G, F)
    for mult in (1, 2, 3, 4, 6):
        for lift in (0, 1, 2):
            for finite_first in (False, True):
                period = A.P * mult
                start = A.L + lift * period
                blocks = _blocks(G, F, start, period)
                singles = [single(e) for e in representative_edges(G, E - F, start)]
                items = singles + blocks if finite_first else blocks + singles
                T = E
                for item in items:
                    cand = T - item
                    if closure_connected(G, cand, spanning=True):
                        T = cand
                if F <= T and is_topological_spanning_tree(G, T):
                    return T
    raise Refused("block greedy did not reach a topological spanning tree for this input")


# -- Bean graph, skew cuts ------------------------------------------------------


def _avoid_tail_from(G: StructuredGraph, t: str, n: int) -> EdgeSetExpr:
    """E(G) minus every edge at a vertex (t, i) with i >= n."""
    E = G.universe
    words = dict(E.words)
    high = ~UPWord.finite(range(n))
    for fam in G.families():
        kind, key = fam.split(":", 1)
        w = words.get(fam)
        if w is None:
            continue
        if kind == "rail" and key == t:
            words[fam] = w - ~UPWord.finite(range(max(n - 1, 0)))
        elif kind == "cross":
            r = G.cross[int(key)]
            if r.tail == t:
                w = w - high
            if r.tail2 == t:
                w = w - ~UPWord.finite(range(max(n - r.delta, 0)))
            words[fam] = w
        elif kind == "coretail" and G.coretail[int(key)].tail == t:
            words[fam] = w - high
    finite = {lab for lab in E.finite if not any(isinstance(x, tuple) and x[0] == t and x[1] >= n for x in G.endpoints(lab))}
    return EdgeSetExpr(frozenset(finite), words)


def bean_check(G: StructuredGraph) -> bool:
    """True iff G contains a subdivision of the Bean graph: a ray R, a vertex u joined to R by
    infinitely many disjoint paths, and a ray from u avoiding R and those paths.

    In the structured class the infinitely many paths start with the edges of a core-tail rule
    of u into some tail t; R can be taken as a far subray of t.  So the test is: for a hub u and a
    tail t it is joined to infinitely often, does u still reach a ray once all vertices of t above
    the finite part are deleted?"""
    E = G.universe
    n = max(E.preperiod, G.max_finite_level()) + 1
    for k, r in enumerate(G.coretail):
        if E.word(f"coretail:{k}").is_finite():
            continue
        A = analyse(G, _avoid_tail_from(G, r.tail, n), spanning=True)
        if A.comp_rays().get(A.uf.find(r.vertex)):
            return True
    return False


def _require_mac(G: StructuredGraph):
    if bean_check(G):
        raise Refused("the elementary algebraic cycles of this graph do not form a matroid: it contains a subdivided Bean graph")


def skew_cut_check(G: StructuredGraph, F: EdgeSetExpr) -> bool:
    """F = E(A, B) with G[A] rayless, minimal among non-empty cuts with a rayless side."""
    _require_mac(G)
    F = F & G.universe
    if F.is_empty():
        return False
    A = analyse(G, G.complement(F), spanning=True)
    if A.free_pieces:
        return False
    comps = A.components()
    rays = A.comp_rays()
    reps = representative_edges(G, F, A.rep_limit())
    ends_of = [(A.comp_of(a), A.comp_of(b)) for a, b in (G.endpoints(e) for e in reps)]
    for root in comps:
        if root in rays:
            continue
        if not all((x == root) != (y == root) for x, y in ends_of):
            continue
        others = [r for r in comps if r != root]
        if len(others) == 1 or all(r in rays for r in others):
            return True
    return False


@dataclass(frozen=True)
class SymbolicCut:
    side: frozenset
    crossing: EdgeSetExpr


def skew_cuts_at(G: StructuredGraph, A: set) -> SymbolicCut:
    """The cut E(A, V - A) around a finite vertex set A."""
    _require_mac(G)
    A = set(A)
    for x in A:
        if not G.has_vertex(x):
            raise MatroidError(f"unknown vertex {x}")
    E = G.universe
    finite = set()
    words = {}
    top = max([x[1] for x in A if isinstance(x, tuple)] + [0]) + G.max_delta + 2
    for lab in E.finite:
        a, b = G.endpoints(lab)
        if (a in A) != (b in A):
            finite.add(lab)
    for fam, w in E.words.items():
        kind, key = fam.split(":", 1)
        if kind == "coretail" and G.coretail[int(key)].vertex in A:
            # every edge of the rule except those landing inside A
            inside = [x[1] for x in A if isinstance(x, tuple) and x[0] == G.coretail[int(key)].tail]
            words[fam] = w - UPWord.finite(inside)
            continue
        idx = [i for i in range(top) if w[i] and ((lambda ab: (ab[0] in A) != (ab[1] in A))(G.endpoints((fam, i))))]
        words[fam] = UPWord.finite(idx)
    return SymbolicCut(frozenset(A), EdgeSetExpr(frozenset(finite), words))


def mac_spanning(G: StructuredGraph, S: EdgeSetExpr) -> bool:
    """S spans M_AC: every other edge closes a finite cycle or a double ray with S."""
    A = analyse(G, S, spanning=True)
    rays = A.comp_rays()
    for e in representative_edges(G, G.complement(S), A.rep_limit()):
        a, b = G.endpoints(e)
        ra, rb = A.comp_of(a), A.comp_of(b)
        if a == b or ra == rb:
            continue
        if ra in rays and rb in rays:
            continue
        return False
    return True


def is_mac_cocircuit(G: StructuredGraph, D: EdgeSetExpr) -> bool:
    """D is a minimal set meeting every base of M_AC: E - D does not span, E - D + e does for each e in D."""
    _require_mac(G)
    D = D & G.universe
    if D.is_empty():
        return False
    H = G.complement(D)
    if mac_spanning(G, H):
        return False
    A = analyse(G, H, spanning=True)
    return all(mac_spanning(G, H.add(e)) for e in representative_edges(G, D, A.rep_limit()))


def describe(D: EdgeSetExpr) -> str:
    parts = sorted(map(edge_name, D.finite))
    parts += [f"{f}[{w}]" for f, w in D.words.items()]
    return "{" + ", ".join(parts) + "}"
