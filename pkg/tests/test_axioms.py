import pytest
from hypothesis import given
from hypothesis import strategies as st

from matroidbench.axioms import (
    AXIOMS,
    ClosureTable,
    ConversionRefused,
    KINDS,
    RankInput,
    convert,
    enumerate_matroids,
    enumerate_matroids_by_filter,
    is_finitary_family,
    presentations_equal,
    replay,
    verify_any,
    verify_bases,
    verify_circuits,
    verify_circuits_weak,
    verify_closure,
    verify_independence,
    verify_rank,
)
from matroidbench.core import GroundSet, SetFamily, bits, labels_for, popcount, uniform
from matroidbench.infinite.words import EdgeSetExpr, UPWord


def ground(n):
    return GroundSet(labels_for(n))


@st.composite
def families(draw, max_n=3):
    n = draw(st.integers(0, max_n))
    g = ground(n)
    masks = draw(st.sets(st.integers(0, (1 << n) - 1), max_size=1 << n))
    return SetFamily(g, tuple(sorted(masks)))


def brute_is_matroid(fam):
    s = fam.as_set
    if 0 not in s:
        return False
    if any(I & ~(1 << x) not in s for I in s for x in bits(I)):
        return False
    return all(any(I | 1 << x in s for x in bits(J & ~I)) for I in s for J in s if popcount(I) < popcount(J))


def replays(report):
    return all(replay(report, name) for name, ok in report.results.items() if not ok)


@given(families())
def test_independence_verifier_matches_brute_force(fam):
    r = verify_independence(fam)
    assert r.passed == brute_is_matroid(fam)
    assert (r.witness is None) == r.passed
    assert replays(r)


@given(families())
def test_basis_and_circuit_verifiers_replay(fam):
    for r in (verify_bases(fam), verify_circuits(fam), verify_circuits_weak(fam)):
        assert (r.witness is None) == r.passed
        assert replays(r)


@given(families())
def test_basis_verifier_matches_brute_force(fam):
    expected = bool(fam.members) and brute_is_matroid(fam.down_closure()) and fam.as_set == fam.down_closure().maximal().as_set
    assert verify_bases(fam).passed == expected


@st.composite
def closure_tables(draw):
    n = draw(st.integers(0, 3))
    g = ground(n)
    return ClosureTable(g, {X: X | draw(st.integers(0, (1 << n) - 1)) for X in g.all_masks()})


@given(closure_tables())
def test_closure_verifier_replays(t):
    r = verify_closure(t)
    assert replays(r)
    if r.passed:
        assert brute_is_matroid(SetFamily(t.ground, tuple(sorted(t.independents()))))


@st.composite
def rank_inputs(draw):
    n = draw(st.integers(0, 3))
    g = ground(n)
    R = {m: draw(st.integers(0, popcount(m))) for m in g.all_masks()}
    return RankInput.from_absolute(g, lambda m: R[m])


@given(rank_inputs())
def test_rank_verifier_replays(inp):
    r = verify_rank(inp)
    assert replays(r)
    if r.passed:
        assert brute_is_matroid(SetFamily(inp.ground, tuple(sorted(inp.independents()))))


def test_report_lists_every_axiom():
    M = uniform(1, 2)
    for kind in KINDS:
        r = verify_any(convert(("independents", M.independents), kind))
        system = {"independents": "independence", "bases": "basis", "circuits": "circuit"}.get(kind, kind)
        assert tuple(r.results) == AXIOMS[system]
        assert r.passed


def test_triangle_circuits_summary():
    g = ground(3)
    r = verify_circuits(SetFamily(g, (g.full,)))
    assert r.summary() == "C1 pass / C2 pass / C3 pass / CM pass"


def test_c3_failure_has_witness():
    g = ground(4)
    fam = SetFamily.of(g, [("a", "b"), ("c", "d")])
    assert verify_circuits(fam).passed
    bad = SetFamily.of(g, [("a", "b", "c"), ("a", "b", "d")])
    r = verify_circuits(bad)
    assert not r.passed and r.witness[0] == "C3" and replay(r, "C3")


def test_convert_refuses_non_matroid():
    g = ground(2)
    with pytest.raises(ConversionRefused):
        convert(("independents", SetFamily.of(g, [(), ("a", "b")])), "bases")


def test_enumeration_small_counts_and_cross_check():
    assert [len(enumerate_matroids(n)) for n in range(3)] == [1, 2, 5]
    assert len(enumerate_matroids(3)) == len(enumerate_matroids_by_filter(3)) == 16


def test_conversion_round_trip_on_u24():
    M = uniform(2, 4)
    src = ("independents", M.independents)
    for kind in KINDS:
        assert presentations_equal(convert(convert(src, kind), "independents"), src)


def test_finitary_family():
    assert is_finitary_family([EdgeSetExpr(frozenset(["a"]))])
    assert not is_finitary_family([EdgeSetExpr(frozenset(), {"rail:t": UPWord.ones()})])


def test_negative_relative_rank_fails_r1():
    g = ground(2)
    R = {0: 0, 1: 1, 2: 1, 3: 0}  # R(ab) < R(b): r(ab | b) = -1
    r = verify_rank(RankInput.from_absolute(g, lambda m: R[m]))
    assert not r.results["R1"] and replay(r, "R1")
