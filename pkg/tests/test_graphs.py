from hypothesis import given
from hypothesis import strategies as st

from matroidbench.core import bits, dual
from matroidbench.graphs import (
    MultiGraph,
    UnionFind,
    all_multigraphs,
    bonds,
    complete_graph,
    connected_multigraphs,
    cuts,
    finite_bond_matroid,
    finite_cycle_matroid,
    is_bond,
    path_graph,
    spanning_trees,
    triangle,
    verify_theorem1,
)

VS = ["p", "q", "r", "s"]


@st.composite
def multigraphs(draw):
    nv = draw(st.integers(1, 4))
    vs = VS[:nv]
    ne = draw(st.integers(0, 5))
    edges = [(f"e{i}", draw(st.sampled_from(vs)), draw(st.sampled_from(vs))) for i in range(ne)]
    return MultiGraph(tuple(vs), tuple(edges))


def brute_forest(G, mask):
    uf = UnionFind(G.vertices)
    return all(uf.union(G.edges[i][1], G.edges[i][2]) for i in bits(mask))


@given(multigraphs())
def test_cycle_matroid_independents_are_forests(G):
    M = finite_cycle_matroid(G)
    assert {m for m in G.ground.all_masks() if brute_forest(G, m)} == M.independents.as_set


@given(multigraphs())
def test_bonds_are_minimal_nonempty_cuts(G):
    cs = {c for c in cuts(G) if c}
    bs = bonds(G).as_set
    assert bs == {c for c in cs if not any(d != c and d & c == d for d in cs)}
    assert all(is_bond(G, b) for b in bs)


@given(multigraphs())
def test_finite_collapse(G):
    if G.is_connected():
        assert verify_theorem1(G)
    # for finite graphs the bond matroid is the dual of the cycle matroid
    assert finite_bond_matroid(G).circuits().as_set == dual(finite_cycle_matroid(G)).circuits().as_set


@given(multigraphs())
def test_spanning_trees_are_bases(G):
    if G.is_connected():
        assert set(spanning_trees(G)) == finite_cycle_matroid(G).bases().as_set


def test_small_graphs():
    assert bonds(triangle()).as_set == {0b011, 0b101, 0b110}
    assert len(spanning_trees(complete_graph(4))) == 16
    assert finite_cycle_matroid(path_graph(3)).rank == 2


def test_loops_and_parallels():
    G = MultiGraph(("x", "y"), (("l", "x", "x"), ("a", "x", "y"), ("b", "x", "y")))
    M = finite_cycle_matroid(G)
    assert M.ground.mask(["l"]) in M.circuits().as_set
    assert M.ground.mask(["a", "b"]) in M.circuits().as_set
    assert bonds(G).as_set == {M.ground.mask(["a", "b"])}


def test_generators():
    gs = connected_multigraphs(3)
    assert all(G.is_connected() and len(G.edges) <= 3 for G in gs)
    assert len(all_multigraphs(3)) >= len(gs)
