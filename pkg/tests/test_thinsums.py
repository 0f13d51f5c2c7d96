import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matroidbench.core import MatroidError
from matroidbench.graphs import MultiGraph
from matroidbench.infinite.catalog import double_ray, ladder
from matroidbench.infinite.oracles import standard_sample
from matroidbench.infinite.words import UPWord
from matroidbench.thinsums import (
    FnVec,
    IndexedFamily,
    PVec,
    ThinFamily,
    Unsupported,
    i3_counterexample_demo,
    incidence_family,
    is_thin,
    mac_thin_equivalence,
    random_thin_family,
    rank_mod_p,
    span_membership,
    thin_basis_extend,
    thinly_independent,
    vectors,
    verify_theorem8,
)


def brute_dependent(rows, p):
    """Some non-trivial combination of the rows is zero (exhaustive over coefficients)."""
    from itertools import product

    n = len(rows)
    coords = {a for r in rows for a in r}
    for coeffs in product(range(p), repeat=n):
        if any(coeffs) and all(sum(c * r.get(a, 0) for c, r in zip(coeffs, rows)) % p == 0 for a in coords):
            return True
    return False


@st.composite
def finite_families(draw):
    p = draw(st.sampled_from([2, 3]))
    nc = draw(st.integers(1, 4))
    nv = draw(st.integers(0, 4))
    rows = [[draw(st.integers(0, p - 1)) for _ in range(nc)] for _ in range(nv)]
    return vectors(p, rows)


@given(finite_families())
def test_rank_against_brute_force(X):
    rows = [dict(v.items) for v in X.finite_vectors()]
    assert (rank_mod_p(rows, X.p) < len(rows)) == brute_dependent(rows, X.p)
    assert thinly_independent(X) == (not brute_dependent(rows, X.p))


@given(finite_families())
def test_span_and_basis_extension(X):
    B = thin_basis_extend([], X)
    assert thinly_independent(X.sub(B))
    for n in X.names:
        assert span_membership(X.vector(n), X.sub(B))
    others = [n for n in X.names if n not in B]
    for n in others:
        assert not thinly_independent(X.sub(B + [n]))


@given(finite_families())
def test_basis_extension_keeps_start(X):
    for k in range(len(X.names), -1, -1):
        for I in combinations(X.names, k):
            if thinly_independent(X.sub(I)):
                assert set(I) <= set(thin_basis_extend(list(I), X))
                return


def test_extension_rejects_dependent_start():
    X = vectors(2, [[1, 0], [1, 0]])
    with pytest.raises(MatroidError):
        thin_basis_extend(X.names, X)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_independence_axioms_on_random_families(p):
    rng = random.Random(p)
    for _ in range(10):
        X = random_thin_family(rng, p, max_coords=4, max_vectors=5)
        assert verify_theorem8(X).passed


def test_fnvec_and_pvec():
    v = FnVec.of({0: 4, 1: 3}, 3)
    assert v[0] == 1 and v[1] == 0 and v.support == frozenset({0})
    w = PVec.make(1, [2], [1, 0], 3)
    assert [w[k] for k in range(6)] == [0, 2, 1, 0, 1, 0]
    assert not w.is_finite()
    with pytest.raises(Unsupported):
        w.word()
    assert PVec.make(0, [1, 1], [0]).as_fnvec().support == frozenset({0, 1})


def test_indexed_families_over_n():
    intervals = ThinFamily(2, indexed=[IndexedFamily("interval", UPWord.ones(1))])
    singletons = ThinFamily(2, indexed=[IndexedFamily("singleton", UPWord.ones(1))])
    assert not is_thin(intervals)
    assert is_thin(singletons)
    assert thinly_independent(intervals)
    assert thinly_independent(singletons)
    # the all-ones vector on {1, 2, ...} is a thin sum of singletons but not of finitely many
    ones = PVec.make(1, [], [1])
    assert span_membership(ones, singletons)
    assert not thinly_independent(singletons.plus("ones", ones))
    assert not thinly_independent(intervals, require_thin=True)


def test_duplicates_are_dependent():
    v = FnVec.of({0: 1})
    assert not thinly_independent(ThinFamily(2, [("a", v), ("b", v)]))


def test_incidence_family_of_double_ray():
    G = double_ray()
    X = incidence_family(G)
    assert not thinly_independent(X)


def test_i3_counterexample_demo():
    r = i3_counterexample_demo(10)
    assert r.dependences_ok
    assert r.only_one_truncated == {"interval": [1], "pair": [1]}
    for reading in ("interval", "pair"):
        f = r.infinite_facts[reading]
        assert f["I independent"] and f["I + N independent"] and not f["I' + N independent"]
    assert "interval" in r.text() and "pair" in r.text()


def test_mac_thin_equivalence():
    G = MultiGraph(("x", "y"), (("a", "x", "y"), ("b", "x", "y"), ("l", "x", "x")))
    assert mac_thin_equivalence(G)
    assert mac_thin_equivalence(ladder(), standard_sample(ladder(), seed=5, size=15))
