"""Independence/circuit oracles for the five graph matroids of a structured graph, plus the
sampled duality checks."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from ..core import MatroidError
from .periodic import analyse, representative_edges
from .sgraph import StructuredGraph
from .topology import (
    Refused,
    acirclic,
    bean_check,
    closure_connected,
    contains_algebraic_cycle,
    graph_connected,
    is_bond,
    is_circle,
    is_mac_cocircuit,
    is_topological_spanning_tree,
    skew_cut_check,
    skew_cuts_at,
    topological_spanning_tree,
)
from .words import EdgeSetExpr, UPWord, single, words_up_to


@dataclass(frozen=True)
class Oracle:
    name: str
    G: StructuredGraph
    independent: Callable[[EdgeSetExpr], bool]

    def is_independent(self, D: EdgeSetExpr) -> bool:
        self.G.check_subset(D)
        return self.independent(D)

    def is_circuit(self, D: EdgeSetExpr) -> bool:
        """Dependent, and independent after removing any single edge (checked on representatives;
        by periodicity these cover every edge of D)."""
        self.G.check_subset(D)
        if D.is_empty() or self.independent(D):
            return False
        A = analyse(self.G, D)
        return all(self.independent(D.remove(e)) for e in representative_edges(self.G, D, A.rep_limit()))


def _fc(G):
    return lambda D: not analyse(G, D).has_finite_cycle


def _b(G):
    return lambda D: graph_connected(G, G.complement(D))


def _fb(G):
    return lambda D: closure_connected(G, G.complement(D), spanning=True)


def _c(G):
    return lambda D: acirclic(G, D)


def _ac(G):
    return lambda D: not contains_algebraic_cycle(G, D)


def matroid_oracles(G: StructuredGraph, include_mac: bool = True) -> dict[str, Oracle]:
    """M_FC, M_B, M_FB, M_C and (unless the graph contains a subdivided Bean graph) M_AC."""
    out = {
        "M_FC": Oracle("M_FC", G, _fc(G)),
        "M_B": Oracle("M_B", G, _b(G)),
        "M_FB": Oracle("M_FB", G, _fb(G)),
        "M_C": Oracle("M_C", G, _c(G)),
    }
    if include_mac:
        out["M_AC"] = mac_oracle(G)
    return out


def mac_oracle(G: StructuredGraph) -> Oracle:
    if bean_check(G):
        raise Refused("M_AC is not a matroid here: G contains a subdivision of the Bean graph, so its "
                      "finite cycles and double rays fail the circuit axioms")
    return Oracle("M_AC", G, _ac(G))


# -- samples ----------------------------------------------------------------------


def finite_window_cycles(G: StructuredGraph, limit: int = 6, top: int = 6) -> list[EdgeSetExpr]:
    """Finite cycles of G lying below tail level ``top`` with at most ``limit`` edges."""
    A = analyse(G, G.universe)
    edges = [e for e in A.explicit_edges if all(not isinstance(x, tuple) or x[1] < top for x in e[1:])]
    adj: dict = {}
    for lab, a, b in edges:
        adj.setdefault(a, []).append((lab, b))
        adj.setdefault(b, []).append((lab, a))
    seen = set()
    out = []

    def walk(start, v, used, verts):
        if len(used) > limit:
            return
        for lab, w in adj.get(v, []):
            if lab in used:
                continue
            if w == start:
                key = frozenset(used | {lab})
                if key not in seen:
                    seen.add(key)
                    out.append(key)
            elif w not in verts:
                walk(start, w, used | {lab}, verts | {w})

    for lab, a, b in edges:
        if a == b:
            seen.add(frozenset([lab]))
            out.append(frozenset([lab]))
            continue
        walk(a, b, frozenset([lab]), frozenset([a, b]))
    res = []
    for key in sorted(out, key=lambda k: (len(k), sorted(map(str, k)))):
        D = EdgeSetExpr()
        for e in key:
            D = D.add(e)
        res.append(D)
    return res


def _random_expr(G: StructuredGraph, rng: random.Random, pool: list[UPWord]) -> EdgeSetExpr:
    E = G.universe
    finite = frozenset(lab for lab in sorted(E.finite) if rng.random() < 0.5)
    words = {}
    for fam in sorted(E.words):
        r = rng.random()
        if r < 0.25:
            w = UPWord.zeros()
        elif r < 0.45:
            w = UPWord.ones()
        else:
            w = rng.choice(pool)
        words[fam] = w & E.word(fam)
    return EdgeSetExpr(finite, words)


def standard_sample(G: StructuredGraph, seed: int = 0, size: int = 40, extra: list | None = None) -> list[EdgeSetExpr]:
    """Curated expressions plus seeded random ones built from words with preperiod <= 4 and
    period <= 4 (one word per family)."""
    rng = random.Random(seed)
    pool = words_up_to(4, 4)
    E = G.universe
    out: list[EdgeSetExpr] = [E, EdgeSetExpr()]
    out += list(extra or [])
    for e in representative_edges(G, E, 3):
        out.append(single(e))
        out.append(E.remove(e))
    out += finite_window_cycles(G, limit=4, top=4)
    for fam in sorted(E.words):
        out.append(EdgeSetExpr(frozenset(), {fam: E.word(fam)}))
        out.append(E - EdgeSetExpr(frozenset(), {fam: E.word(fam)}))
    while len(out) < size + 2:
        out.append(_random_expr(G, rng, pool))
    uniq = []
    for D in out:
        D = D & E
        if D not in uniq:
            uniq.append(D)
    return uniq


def seeded_acirclic(G: StructuredGraph, count: int = 20, seed: int = 0, tries: int = 400) -> list[EdgeSetExpr]:
    """Seeded acirclic subsets F (grown from random finite edge sets and random families)."""
    rng = random.Random(seed)
    pool = words_up_to(2, 3)
    E = G.universe
    reps = representative_edges(G, E, 6)
    out: list[EdgeSetExpr] = [EdgeSetExpr()]
    for _ in range(tries):
        if len(out) >= count:
            break
        if rng.random() < 0.6:
            D = EdgeSetExpr()
            for e in rng.sample(reps, min(len(reps), rng.randint(1, 4))):
                D = D.add(e)
        else:
            D = _random_expr(G, rng, pool)
        D = D & E
        if D not in out and acirclic(G, D):
            out.append(D)
    return out


# -- checks -------------------------------------------------------------------------


def verify_mac_duality(G: StructuredGraph, samples: list[EdgeSetExpr], circuits: list[EdgeSetExpr] | None = None) -> bool:
    """skew_cut_check agrees with the base-complement cocircuit test on every sample, and no sampled
    circuit meets a sampled skew cut in exactly one edge."""
    mac = mac_oracle(G)
    cuts = []
    for D in samples:
        s = skew_cut_check(G, D)
        if s != is_mac_cocircuit(G, D):
            return False
        if s:
            cuts.append(D)
    circs = list(circuits or [])
    circs += [C for C in finite_window_cycles(G, limit=4, top=4)]
    circs += [D for D in samples if mac.is_circuit(D)]
    for C in circs:
        for F in cuts:
            if (C & F).cardinality() == 1:
                return False
    return True


@dataclass(frozen=True)
class DualBijection:
    forward: Callable[[EdgeSetExpr], EdgeSetExpr]
    backward: Callable[[EdgeSetExpr], EdgeSetExpr]

    def __call__(self, D: EdgeSetExpr) -> EdgeSetExpr:
        return self.forward(D)


def label_bijection(pairs: dict) -> DualBijection:
    inv = {v: k for k, v in pairs.items()}
    if len(inv) != len(pairs):
        raise MatroidError("label map is not injective")
    return DualBijection(
        lambda D: EdgeSetExpr(frozenset(pairs[x] for x in D.finite)),
        lambda D: EdgeSetExpr(frozenset(inv[x] for x in D.finite)),
    )


def _check_bijection(G, Gs, bij):
    E, Es = G.universe, Gs.universe
    if bij(E) != Es or bij.backward(Es) != E:
        raise MatroidError("bijection does not map E(G) onto E(G*)")
    for e in representative_edges(G, E, 8):
        img = bij(single(e))
        if img.cardinality() != 1 or bij.backward(img) != single(e):
            raise MatroidError(f"bijection is not one-to-one at {e}")


def verify_duality_chain(G: StructuredGraph, Gs: StructuredGraph, bij: DualBijection, samples: list[EdgeSetExpr],
                         trees: int = 4, seed: int = 0) -> bool:
    """Circles of G correspond to bonds of G*; complements of topological spanning trees of G are
    bases of M_FB(G); finite cycles of G* correspond to finite bonds of G."""
    _check_bijection(G, Gs, bij)
    for D in samples:
        if is_circle(G, D) != is_bond(Gs, bij(D)):
            return False
    fb = _fb(G)
    for F in seeded_acirclic(G, trees, seed):
        T = topological_spanning_tree(G, F)
        co = G.complement(T)
        if not fb(co):
            return False
        A = analyse(G, T)
        if any(fb(co.add(e)) for e in representative_edges(G, T, A.rep_limit())):
            return False
    for C in finite_window_cycles(Gs, limit=4, top=4):
        D = bij.backward(C)
        if not (D.is_finite() and is_bond(G, D)):
            return False
    return True


def tst_criteria_agree(G: StructuredGraph, samples: list[EdgeSetExpr]) -> bool:
    return all(is_topological_spanning_tree(G, T, "ii") == is_topological_spanning_tree(G, T, "iii") for T in samples)


def tst_extension_contract(G: StructuredGraph, count: int = 20, seed: int = 0) -> bool:
    fb = _fb(G)
    for F in seeded_acirclic(G, count, seed):
        T = topological_spanning_tree(G, F)
        if not (F <= T and is_topological_spanning_tree(G, T)):
            return False
        co = G.complement(T)
        if not fb(co):
            return False
        A = analyse(G, T)
        if any(fb(co.add(e)) for e in representative_edges(G, T, A.rep_limit())):
            return False
    return True


def circles_pairwise_incomparable(G: StructuredGraph, samples: list[EdgeSetExpr]) -> bool:
    circles = [D for D in samples if is_circle(G, D)]
    return all(a == b for a in circles for b in circles if b <= a)


__all__ = [
    "Oracle", "matroid_oracles", "mac_oracle", "standard_sample", "seeded_acirclic", "finite_window_cycles",
    "verify_mac_duality", "verify_duality_chain", "DualBijection", "label_bijection", "tst_criteria_agree",
    "tst_extension_contract", "circles_pairwise_incomparable", "skew_cuts_at",
]
