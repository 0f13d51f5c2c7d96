import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matroidbench.core import MatroidError, bits
from matroidbench.graphs import MultiGraph, bonds, finite_cycle_matroid
from matroidbench.infinite import catalog
from matroidbench.infinite import topology as T
from matroidbench.infinite.catalog import bean_graph, double_ray, fan, ladder, ladder_dual, star_of_rays
from matroidbench.infinite.gap import weak_verifier_gap_demo
from matroidbench.infinite.oracles import (
    circles_pairwise_incomparable,
    mac_oracle,
    matroid_oracles,
    seeded_acirclic,
    standard_sample,
    tst_criteria_agree,
)
from matroidbench.infinite.periodic import analyse, representative_edges
from matroidbench.infinite.sgraph import CoreTailRule, CrossRule, StructuredGraph, expr, finite_embed
from matroidbench.infinite.words import EdgeSetExpr, UPWord

ALL = UPWord.ones()
VS = ["p", "q", "r", "s"]


@st.composite
def connected_graphs(draw):
    nv = draw(st.integers(1, 4))
    vs = VS[:nv]
    edges = [(f"t{i}", vs[draw(st.integers(0, i - 1))], vs[i]) for i in range(1, nv)]
    for i in range(draw(st.integers(0, 3))):
        edges.append((f"e{i}", draw(st.sampled_from(vs)), draw(st.sampled_from(vs))))
    return MultiGraph(tuple(vs), tuple(edges))


def as_expr(G, mask):
    return EdgeSetExpr(frozenset(G.edges[i][0] for i in bits(mask)))


@settings(max_examples=30)
@given(connected_graphs())
def test_finite_collapse_of_all_five_oracles(G):
    S = finite_embed(G)
    M = finite_cycle_matroid(G)
    bs = bonds(G).as_set
    orcs = matroid_oracles(S)
    for m in G.ground.all_masks():
        D = as_expr(G, m)
        forest = M.indep(m)
        bond_free = not any(b & m == b for b in bs)
        assert orcs["M_FC"].is_independent(D) == forest
        assert orcs["M_C"].is_independent(D) == forest
        assert orcs["M_AC"].is_independent(D) == forest
        assert orcs["M_B"].is_independent(D) == bond_free
        assert orcs["M_FB"].is_independent(D) == bond_free
        assert T.is_circle(S, D) == (m in M.circuits().as_set)
        assert T.is_bond(S, D) == (m in bs)


@pytest.mark.parametrize("entry", catalog.catalog_list(), ids=lambda e: e.name)
def test_catalog_entry_facts(entry):
    for text, ok, got, expected in catalog.run_entry(entry):
        assert ok, f"{text}: got {got!r}, expected {expected!r}"


GRAPHS = [double_ray, ladder, ladder_dual, fan, lambda: star_of_rays(2)]


@pytest.mark.parametrize("build", GRAPHS)
def test_tst_contract(build):
    G = build()
    for F in seeded_acirclic(G, 6, seed=3):
        Tr = T.topological_spanning_tree(G, F)
        assert F <= Tr
        assert T.is_topological_spanning_tree(G, Tr, "both")


@pytest.mark.parametrize("build", GRAPHS)
def test_sample_invariants(build):
    G = build()
    sample = standard_sample(G, seed=1, size=20)
    assert tst_criteria_agree(G, sample)
    assert circles_pairwise_incomparable(G, sample)
    for D in sample:
        if T.is_circle(G, D):
            assert not T.acirclic(G, D)


@pytest.mark.parametrize("build", [double_ray, ladder, fan])
def test_oracles_are_hereditary_on_representatives(build):
    G = build()
    orcs = matroid_oracles(G)
    for D in standard_sample(G, seed=2, size=12):
        A = analyse(G, D)
        for name, o in orcs.items():
            if o.is_independent(D):
                for e in representative_edges(G, D, A.rep_limit())[:6]:
                    assert o.is_independent(D.remove(e)), (name, e)


def test_double_ray_mac():
    G = double_ray()
    mac = mac_oracle(G)
    assert mac.is_circuit(G.universe)
    assert not mac.is_independent(G.universe)
    assert all(mac.is_independent(G.universe.remove(e)) for e in representative_edges(G, G.universe, 4))


def test_ladder_comb_and_circle():
    G = ladder()
    comb = expr(**{"rail:a": ALL, "cross:0": ALL})
    assert T.is_topological_spanning_tree(G, comb, "both")
    rails = expr(**{"rail:a": ALL, "rail:b": ALL})
    assert not T.is_circle(G, rails)
    assert T.is_circle(G, rails | expr(**{"cross:0": UPWord.finite([0])}))


def test_ends():
    assert len(T.ends(double_ray())) == 2
    assert len(T.ends(ladder())) == 1
    assert len(T.ends(star_of_rays(3))) == 3
    (end,) = T.ends(fan())
    assert end.dominated_by


def test_bean_refusal_and_gap():
    G = bean_graph()
    assert T.bean_check(G)
    with pytest.raises(T.Refused):
        mac_oracle(G)
    cert = weak_verifier_gap_demo()
    assert cert.holds
    assert cert.lines[-1] == "C3 fails: certificate holds"


def test_tst_precondition():
    G = ladder()
    circle = expr(**{"rail:a": ALL, "rail:b": ALL, "cross:0": UPWord.finite([0])})
    with pytest.raises(T.PreconditionError):
        T.topological_spanning_tree(G, circle)


def test_skew_cuts_on_double_ray():
    G = double_ray()
    reps = representative_edges(G, G.universe, 3)
    rng = random.Random(0)
    for _ in range(10):
        a, b = rng.sample(reps, 2)
        D = EdgeSetExpr().add(a).add(b)
        assert T.skew_cut_check(G, D) and T.is_mac_cocircuit(G, D)
        assert not T.skew_cut_check(G, EdgeSetExpr().add(a))


def test_structured_graph_validation():
    core = MultiGraph(("u",), ())
    with pytest.raises(MatroidError):
        StructuredGraph(core, ("t", "t"))
    with pytest.raises(MatroidError):
        StructuredGraph(core, ("a.b",))
    with pytest.raises(MatroidError):
        StructuredGraph(core, ("t",), (CrossRule("t", "t", 0, 0, 1, (0,)),))
    with pytest.raises(MatroidError):
        StructuredGraph(core, ("t",), (), (CoreTailRule("v", "t", 0, 1, (0,)),))
