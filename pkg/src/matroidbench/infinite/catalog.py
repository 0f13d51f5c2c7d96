"""Named structured graphs and the facts the regression catalog replays on them.

Bean graph used here: a core vertex u joined to every vertex of a ray t (the dominated ray),
plus a second ray p attached to u by the edge ``up``.  Without the extra ray p (the plain fan) the
graph has no two disjoint rays at all, so its algebraic cycles are its finite cycles, which always
form a matroid; the fan therefore contains no subdivided Bean graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..graphs import MultiGraph, triangle
from .sgraph import CoreTailRule, CrossRule, PatchEdge, StructuredGraph, expr
from .words import EdgeSetExpr, UPWord, single

ALL = UPWord.ones()


def double_ray() -> StructuredGraph:
    return StructuredGraph(
        MultiGraph(("w",), ()),
        tails=("t1", "t2"),
        added=(PatchEdge("p1", "w", ("t1", 0)), PatchEdge("p2", "w", ("t2", 0))),
        name="DoubleRay",
    )


def ladder() -> StructuredGraph:
    return StructuredGraph(MultiGraph((), ()), tails=("a", "b"), cross=(CrossRule("a", "b", 0, 0, 1, (0,)),), name="Ladder")


def ladder_dual() -> StructuredGraph:
    """Face vertices f.i (square i of the ladder) on a ray, and the outer face o joined to each
    f.i twice (the duals of the two rails) and once more to f.0 (the dual of rung 0)."""
    return StructuredGraph(
        MultiGraph(("o",), ()),
        tails=("f",),
        coretail=(CoreTailRule("o", "f", 0, 1, (0,)), CoreTailRule("o", "f", 0, 1, (0,))),
        added=(PatchEdge("r0", "o", ("f", 0)),),
        name="LadderDual",
    )


def fan() -> StructuredGraph:
    return StructuredGraph(MultiGraph(("u",), ()), tails=("t",), coretail=(CoreTailRule("u", "t", 0, 1, (0,)),), name="Fan")


def bean_graph() -> StructuredGraph:
    return StructuredGraph(
        MultiGraph(("u",), ()),
        tails=("t", "p"),
        coretail=(CoreTailRule("u", "t", 0, 1, (0,)),),
        added=(PatchEdge("up", "u", ("p", 0)),),
        name="BeanGraph",
    )


def star_of_rays(k: int) -> StructuredGraph:
    tails = tuple(f"r{j}" for j in range(k))
    return StructuredGraph(
        MultiGraph(("c",), ()),
        tails=tails,
        added=tuple(PatchEdge(f"s{j}", "c", (t, 0)) for j, t in enumerate(tails)),
        name=f"StarOfRays({k})",
    )


def triangle_embed() -> StructuredGraph:
    return StructuredGraph(triangle(), name="Triangle")


def theta_embed() -> StructuredGraph:
    """Three parallel edges: the planar dual of the triangle."""
    return StructuredGraph(MultiGraph.of([("d1", "x", "y"), ("d2", "x", "y"), ("d3", "x", "y")]), name="Theta")


def ladder_bijection():
    from .oracles import DualBijection

    def fwd(D: EdgeSetExpr) -> EdgeSetExpr:
        rungs = D.word("cross:0")
        return EdgeSetExpr(
            frozenset(["r0"]) if rungs[0] else frozenset(),
            {"coretail:0": D.word("rail:a"), "coretail:1": D.word("rail:b"), "rail:f": rungs.shift(-1)},
        )

    def back(D: EdgeSetExpr) -> EdgeSetExpr:
        rungs = D.word("rail:f").shift(1)
        if "r0" in D.finite:
            rungs = rungs.with_bit(0, 1)
        return EdgeSetExpr(frozenset(), {"rail:a": D.word("coretail:0"), "rail:b": D.word("coretail:1"), "cross:0": rungs})

    return DualBijection(fwd, back)


def triangle_bijection():
    from .oracles import label_bijection

    return label_bijection({"e1": "d1", "e2": "d2", "e3": "d3"})


@dataclass
class Fact:
    text: str
    compute: Callable[[], object]
    expected: object

    def run(self) -> tuple[bool, object]:
        try:
            got = self.compute()
        except Exception as exc:  # refusals are facts too
            got = f"refused: {type(exc).__name__}"
        return got == self.expected, got


@dataclass
class CatalogEntry:
    name: str
    build: Callable[[], StructuredGraph]
    facts: list[Fact] = field(default_factory=list)
    note: str = ""


def _ladder_rails():
    return expr(**{"rail:a": ALL, "rail:b": ALL})


def _ladder_comb():
    return expr(**{"rail:a": ALL, "cross:0": ALL})


def _ladder_star(i: int):
    """The three edges at vertex a.i (i >= 1)."""
    return expr(**{"rail:a": UPWord.finite([i - 1, i]), "cross:0": UPWord.finite([i])})


def _entries() -> list[CatalogEntry]:
    from . import oracles as O
    from . import topology as T

    dr, lad, lad_d, fn, bean = double_ray(), ladder(), ladder_dual(), fan(), bean_graph()
    E = dr.universe
    rung0 = expr(**{"cross:0": UPWord.finite([0])})
    out = []

    def mac_circuits_double_ray():
        m = O.mac_oracle(dr)
        samples = O.standard_sample(dr)
        return [D == E for D in samples if m.is_circuit(D)] == [True]

    out.append(CatalogEntry("DoubleRay", double_ray, [
        Fact("ends = 2", lambda: len(T.ends(dr)), 2),
        Fact("M_AC circuits = {E} (on the standard sample)", mac_circuits_double_ray, True),
        Fact("M_AC: every proper sample subset independent", lambda: all(O.mac_oracle(dr).is_independent(D) for D in O.standard_sample(dr) if D != E), True),
        Fact("M_B circuits = single edges", lambda: all(O.matroid_oracles(dr)["M_B"].is_circuit(single(e)) for e in E.edges(4)), True),
        Fact("bonds = singletons", lambda: T.is_bond(dr, expr(["p1"])) and T.is_bond(dr, expr(**{"rail:t1": UPWord.finite([3])})) and not T.is_bond(dr, expr(["p1", "p2"])), True),
        Fact("skew cuts: pairs yes, singles no", lambda: (T.skew_cut_check(dr, expr(["p1", "p2"])), T.skew_cut_check(dr, expr(["p1"], **{"rail:t1": UPWord.finite([2])})), T.skew_cut_check(dr, expr(["p1"]))), (True, True, False)),
        Fact("cocircuits = 2-subsets = skew cuts", lambda: O.verify_mac_duality(dr, O.standard_sample(dr)), True),
        Fact("T = E is the topological spanning tree", lambda: (T.topological_spanning_tree(dr) == E, T.is_topological_spanning_tree(dr, E, "both")), (True, True)),
        Fact("E - p1 is not a topological spanning tree", lambda: T.is_topological_spanning_tree(dr, E.remove("p1")), False),
        Fact("E is not a circle", lambda: T.is_circle(dr, E), False),
        Fact("E - p1: closure disconnected", lambda: T.closure_connected(dr, E.remove("p1")), False),
        Fact("bean_check = false", lambda: T.bean_check(dr), False),
    ]))

    out.append(CatalogEntry("Ladder", ladder, [
        Fact("ends = 1", lambda: len(T.ends(lad)), 1),
        Fact("comb is a topological spanning tree", lambda: T.is_topological_spanning_tree(lad, _ladder_comb(), "both"), True),
        Fact("rung0 + rails is a circle", lambda: T.is_circle(lad, _ladder_rails() | rung0), True),
        Fact("rails without rung are not a circle", lambda: T.is_circle(lad, _ladder_rails()), False),
        Fact("rails: independent in M_C, + rung0 a circuit", lambda: (O.matroid_oracles(lad)["M_C"].is_independent(_ladder_rails()), O.matroid_oracles(lad)["M_C"].is_circuit(_ladder_rails() | rung0)), (True, True)),
        Fact("rails + rung0 is not a topological spanning tree", lambda: T.is_topological_spanning_tree(lad, _ladder_rails() | rung0), False),
        Fact("all rungs: closure disconnected; comb connected", lambda: (T.closure_connected(lad, expr(**{"cross:0": ALL})), T.closure_connected(lad, _ladder_comb())), (False, True)),
        Fact("vertex stars are skew cuts and cocircuits", lambda: all(T.skew_cut_check(lad, _ladder_star(i)) and T.is_mac_cocircuit(lad, _ladder_star(i)) for i in (1, 2, 5)), True),
        Fact("bean_check = false", lambda: T.bean_check(lad), False),
        Fact("M_AC duality on the standard sample", lambda: O.verify_mac_duality(lad, O.standard_sample(lad, extra=[_ladder_star(i) for i in (1, 3)])), True),
    ]))

    square = expr(**{"cross:0": UPWord.finite([2, 3]), "rail:a": UPWord.finite([2]), "rail:b": UPWord.finite([2])})
    bij = ladder_bijection()
    out.append(CatalogEntry("LadderDual", ladder_dual, [
        Fact("square cycle -> bond at a face vertex", lambda: (T.is_circle(lad, square), T.is_bond(lad_d, bij(square))), (True, True)),
        Fact("end circle -> bond around the outer face", lambda: T.is_bond(lad_d, bij(_ladder_rails() | rung0)), True),
        Fact("verify_duality_chain on the standard sample", lambda: O.verify_duality_chain(lad, lad_d, bij, O.standard_sample(lad, extra=[square, _ladder_rails() | rung0])), True),
    ]))

    spoke_circle = expr(**{"coretail:0": UPWord.finite([2]), "rail:t": UPWord.ones(2)})
    spokes = expr(**{"coretail:0": ALL})
    out.append(CatalogEntry("Fan", fan, [
        Fact("spoke + tail rails is a circle", lambda: T.is_circle(fn, spoke_circle), True),
        Fact("bean_check = false", lambda: T.bean_check(fn), False),
        Fact("M_AC = M_FC (no double rays)", lambda: O.mac_oracle(fn).name, "M_AC"),
        Fact("all spokes form a topological spanning tree", lambda: T.topological_spanning_tree(fn, spokes) == spokes, True),
        Fact("spokes + rails contain a circle", lambda: T.acirclic(fn, fn.universe), False),
    ], note="bean_check is false: the fan has no two disjoint rays, so it contains no subdivided Bean graph"))

    bean_dr = expr(["up"], **{"rail:p": ALL, "rail:t": ALL, "coretail:0": UPWord.finite([0])})
    out.append(CatalogEntry("BeanGraph", bean_graph, [
        Fact("bean_check = true", lambda: T.bean_check(bean), True),
        Fact("M_AC refused", lambda: O.mac_oracle(bean), "refused: Refused"),
        Fact("rails of t + spoke 0 + up + rails of p contain a double ray", lambda: T.contains_algebraic_cycle(bean, bean_dr), True),
    ]))

    for k in (1, 3):
        g = star_of_rays(k)
        out.append(CatalogEntry(f"StarOfRays({k})", (lambda k=k: star_of_rays(k)), [
            Fact(f"ends = {k}", (lambda g=g: len(T.ends(g))), k),
            Fact("E is a topological spanning tree", (lambda g=g: T.is_topological_spanning_tree(g, g.universe, "both")), True),
        ]))

    tri, th = triangle_embed(), theta_embed()
    out.append(CatalogEntry("Triangle", triangle_embed, [
        Fact("E is a circle", lambda: T.is_circle(tri, tri.universe), True),
        Fact("duality chain with the theta graph", lambda: O.verify_duality_chain(tri, th, triangle_bijection(), O.standard_sample(tri)), True),
    ]))
    out.append(CatalogEntry("Theta", theta_embed, [
        Fact("pairs are circles", lambda: T.is_circle(th, expr(["d1", "d2"])), True),
        Fact("E is a bond", lambda: T.is_bond(th, th.universe), True),
    ]))
    return out


_CACHE: list = []


def catalog_list() -> list[CatalogEntry]:
    if not _CACHE:
        _CACHE.extend(_entries())
    return list(_CACHE)


def catalog_entry(name: str) -> CatalogEntry:
    for e in catalog_list():
        if e.name.lower() == name.lower():
            return e
    raise KeyError(name)


def run_entry(entry: CatalogEntry) -> list[tuple[str, bool, object, object]]:
    rows = []
    for f in entry.facts:
        ok, got = f.run()
        rows.append((f.text, ok, got, f.expected))
    return rows
