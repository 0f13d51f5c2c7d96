from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matroidbench.axioms import enumerate_matroids
from matroidbench.core import (
    FiniteMatroid,
    GroundSet,
    MatroidError,
    SetFamily,
    bits,
    closure,
    dual,
    free,
    fundamental_circuit,
    is_independent,
    minor,
    popcount,
    relative_rank,
    submasks,
    uniform,
)

MATROIDS = [M for n in range(5) for M in enumerate_matroids(n)]
matroids = st.sampled_from(MATROIDS)


def test_uniform_basics():
    M = uniform(2, 4)
    assert M.rank == 2
    assert len(M.bases().members) == 6
    assert all(popcount(c) == 3 for c in M.circuits().members)
    assert is_independent(M, ["a", "b"]) and not is_independent(M, ["a", "b", "c"])


def test_invalid_family_rejected():
    g = GroundSet(("a", "b"))
    with pytest.raises(MatroidError):
        FiniteMatroid(g, SetFamily.of(g, [(), ("a", "b")]))


def test_u12_is_self_dual():
    M = uniform(1, 2)
    assert dual(M).bases().as_set == M.bases().as_set


@given(matroids)
def test_closure_is_closure_operator(M):
    for X in M.ground.all_masks():
        c = closure(M, X)
        assert c & X == X
        assert closure(M, c) == c


@given(matroids)
def test_relative_rank_additive(M):
    for A in M.ground.all_masks():
        for B in submasks(A):
            assert relative_rank(M, A, B) == M.rank_of(A) - M.rank_of(B)


@given(matroids)
def test_fundamental_circuits(M):
    for B in M.bases().members:
        for e in bits(M.full & ~B):
            C = fundamental_circuit(M, B, e)
            assert C in M.circuits().as_set
            assert C >> e & 1 and C & ~(B | 1 << e) == 0


@given(matroids)
def test_dual_rank_formula(M):
    D = dual(M)
    n = len(M.ground)
    assert D.rank == n - M.rank
    assert dual(D).independents.as_set == M.independents.as_set


@given(matroids, st.data())
def test_minor_deletion_contraction_duality(M, data):
    labels = list(M.ground.elements)
    X = data.draw(st.sets(st.sampled_from(labels))) if labels else set()
    Y = data.draw(st.sets(st.sampled_from([x for x in labels if x not in X]))) if len(X) < len(labels) else set()
    left = dual(minor(M, delete=sorted(X), contract=sorted(Y)))
    right = minor(dual(M), delete=sorted(Y), contract=sorted(X))
    assert left.ground == right.ground
    assert left.independents.as_set == right.independents.as_set


def test_free_matroid():
    M = free(["a", "b", "c"])
    assert M.rank == 3 and not M.circuits().members


def test_minor_rejects_overlap():
    with pytest.raises(MatroidError):
        minor(uniform(1, 2), delete=["a"], contract=["a"])


def test_circuits_of_u23():
    M = uniform(2, 3)
    assert M.circuits().as_set == {M.full}
    assert {c for c in M.cocircuits().members} == {M.ground.mask(p) for p in combinations("abc", 2)}
