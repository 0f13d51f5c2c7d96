"""The elementary algebraic cycles of the Bean graph: they satisfy (C1), (C2) and pairwise
circuit elimination, yet the infinite elimination axiom (C3) fails.

Certificate (Bean graph: hub u joined to every t.i, ray p attached to u by ``up``):

* C   = rails(p) + up + spoke 0 + rails(t), a double ray;
* X   = rails(t); for the rail edge t.i -- t.(i+1) take the triangle C_x = {spoke i, rail i, spoke i+1};
* z   = up, which lies in C and in no C_x.

(C3) asks for a circuit through z inside (C + all C_x) - X = rails(p) + up + all spokes.  That set
is a ray attached to a star: it contains no finite cycle and no double ray.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import bean_graph
from .periodic import analyse
from .topology import contains_algebraic_cycle
from .words import EdgeSetExpr, UPWord, single

ALL = UPWord.ones()


def _is_elementary_cycle(G, D: EdgeSetExpr) -> bool:
    """A finite cycle or double ray: contains an algebraic cycle, and no proper part does."""
    if not contains_algebraic_cycle(G, D):
        return False
    A = analyse(G, D)
    from .periodic import representative_edges

    return all(not contains_algebraic_cycle(G, D.remove(e)) for e in representative_edges(G, D, A.rep_limit()))


@dataclass
class GapCertificate:
    C: EdgeSetExpr
    X: EdgeSetExpr
    z: str
    witnesses: list[EdgeSetExpr]
    target: EdgeSetExpr
    lines: list[str]
    holds: bool


def sample_cycles(G) -> list[EdgeSetExpr]:
    """Some finite cycles and double rays of the Bean graph."""
    out = []
    for i in range(4):
        out.append(EdgeSetExpr(frozenset(), {"coretail:0": UPWord.finite([i, i + 1]), "rail:t": UPWord.finite([i])}))
        out.append(EdgeSetExpr(frozenset(), {"coretail:0": UPWord.finite([0, i + 1]), "rail:t": UPWord.finite(range(i + 1))}))
        out.append(EdgeSetExpr(frozenset(["up"]), {"rail:p": ALL, "coretail:0": UPWord.finite([i]), "rail:t": UPWord.ones(i)}))
    return out


def weak_verifier_gap_demo() -> GapCertificate:
    G = bean_graph()
    lines = []
    cycles = sample_cycles(G)
    c1 = all(not D.is_empty() for D in cycles) and all(_is_elementary_cycle(G, D) for D in cycles)
    lines.append(f"C1/C2 on {len(cycles)} sampled elementary cycles: {'pass' if c1 else 'fail'}")
    # pairwise elimination: C1 != C2 sharing e  =>  (C1 + C2) - e still holds an algebraic cycle
    elim = True
    pairs = 0
    for a in cycles:
        for b in cycles:
            if a == b:
                continue
            for e in (a & b).edges(6):
                pairs += 1
                if not contains_algebraic_cycle(G, (a | b).remove(e)):
                    elim = False
    lines.append(f"classic elimination on {pairs} sampled (C1, C2, e) triples: {'pass' if elim else 'fail'}")
    C = EdgeSetExpr(frozenset(["up"]), {"rail:p": ALL, "coretail:0": UPWord.finite([0]), "rail:t": ALL})
    X = EdgeSetExpr(frozenset(), {"rail:t": ALL})
    witnesses = [EdgeSetExpr(frozenset(), {"coretail:0": UPWord.finite([i, i + 1]), "rail:t": UPWord.finite([i])}) for i in range(6)]
    union_cx = EdgeSetExpr(frozenset(), {"coretail:0": ALL, "rail:t": ALL})
    target = (C | union_cx) - X
    ok_c = _is_elementary_cycle(G, C)
    ok_w = all(_is_elementary_cycle(G, W) and (W & X) == single(("rail:t", i)) for i, W in enumerate(witnesses))
    no_cycle = not contains_algebraic_cycle(G, target)
    lines.append(f"C = rails(p) + up + spoke 0 + rails(t) is a double ray: {ok_c}")
    lines.append(f"each rail edge x of t has a triangle C_x meeting X only in x (checked for 6 of them): {ok_w}")
    lines.append(f"(C + C_x's) - X = rails(p) + up + spokes holds no cycle through up (none at all): {no_cycle}")
    # the independent chain I_k = C minus the rails of t above k has no independent upper bound in C
    chain = [C - EdgeSetExpr(frozenset(), {"rail:t": UPWord.ones(k)}) for k in range(1, 7)]
    ok_chain = all(not contains_algebraic_cycle(G, I) for I in chain) and all(a <= b for a, b in zip(chain, chain[1:]))
    lines.append(f"chain I_k = C - (rails of t from k on), k = 1..6: independent and nested: {ok_chain}; its union C is dependent: {ok_c}")
    holds = c1 and elim and ok_c and ok_w and no_cycle and ok_chain
    lines.append("C3 fails: " + ("certificate holds" if holds else "certificate FAILED"))
    return GapCertificate(C, X, "up", witnesses, target, lines, holds)
