"""Acceptance criteria 1-10.  Each test prints one ``PASS``/``FAIL`` line.

Run standalone with ``python3 tests/test_acceptance.py`` for just the summary lines.
"""

import random
import sys
import time
from itertools import combinations

import pytest

from matroidbench.axioms import (
    KINDS,
    convert,
    down_sets,
    enumerate_matroids,
    enumerate_matroids_by_filter,
    presentations_equal,
    verify_any,
    verify_independence,
)
from matroidbench.core import GroundSet, SetFamily, bits, dual, labels_for, popcount
from matroidbench.graphs import all_multigraphs, connected_multigraphs, verify_theorem1
from matroidbench.infinite import topology as T
from matroidbench.infinite.catalog import (
    catalog_list,
    double_ray,
    fan,
    ladder,
    ladder_bijection,
    ladder_dual,
)
from matroidbench.infinite.gap import weak_verifier_gap_demo
from matroidbench.infinite.oracles import (
    mac_oracle,
    standard_sample,
    tst_criteria_agree,
    tst_extension_contract,
    verify_duality_chain,
)
from matroidbench.infinite.periodic import representative_edges
from matroidbench.infinite.sgraph import expr
from matroidbench.infinite.words import UPWord, single
from matroidbench.thinsums import (
    i3_counterexample_demo,
    independent_family,
    mac_thin_equivalence,
    random_thin_family,
    thinly_independent,
    verify_theorem8,
)

ALL = UPWord.ones()
_emit = print


def report(n: int, ok: bool, detail: str) -> bool:
    _emit(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
    return ok


@pytest.fixture(autouse=True)
def _uncaptured(capsys):
    """Let the criterion lines through pytest's output capture."""
    global _emit

    def emit(line):
        with capsys.disabled():
            print(line, flush=True)

    _emit = emit
    yield
    _emit = print


# -- 1 -------------------------------------------------------------------------------------


def criterion_1():
    t0 = time.perf_counter()
    count = 0
    bad = []
    for n in range(5):
        g = GroundSet(labels_for(n))
        for fam in down_sets(n):
            src = ("independents", SetFamily(g, tuple(sorted(fam))))
            if not verify_independence(src[1]).passed:
                continue
            count += 1
            for kind in KINDS:
                out = convert(src, kind)
                if not verify_any(out).passed or not presentations_equal(convert(out, "independents"), src):
                    bad.append((n, kind))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 60
    return report(1, ok, f"{count} independence families on |E| <= 4, every presentation verified and round-tripped "
                          f"({len(bad)} failures, {dt:.1f}s, limit 60s)")


def test_criterion_1():
    assert criterion_1()


# -- 2 -------------------------------------------------------------------------------------


def criterion_2():
    counts = [len(enumerate_matroids(n)) for n in range(5)]
    agree = all(
        {m.independents.as_set for m in enumerate_matroids(n)} == {m.independents.as_set for m in enumerate_matroids_by_filter(n)}
        for n in (3, 4)
    )
    ok = counts[:3] == [1, 2, 5] and agree
    return report(2, ok, f"counts n=0..4: {counts}; n=3,4 agree between the two enumerators: {agree}")


def test_criterion_2():
    assert criterion_2()


# -- 3 -------------------------------------------------------------------------------------


def criterion_3():
    total = 0
    bad = 0
    for n in range(5):
        for M in enumerate_matroids(n):
            total += 1
            D = dual(M)
            if dual(D).independents.as_set != M.independents.as_set:
                bad += 1
                continue
            if any(popcount(C & K) == 1 for C in M.circuits().members for K in D.circuits().members):
                bad += 1
    return report(3, bad == 0, f"dual(dual(M)) = M and |C & D| != 1 over {total} matroids with |E| <= 4 ({bad} failures)")


def test_criterion_3():
    assert criterion_3()


# -- 4 -------------------------------------------------------------------------------------


def criterion_4():
    t0 = time.perf_counter()
    gs = connected_multigraphs(5)
    bad = [G for G in gs if not verify_theorem1(G)]
    dt = time.perf_counter() - t0
    ok = not bad and dt < 60
    return report(4, ok, f"cocircuits of M_FC = bonds = minimal spanning-tree transversals on {len(gs)} connected "
                          f"multigraphs with <= 5 edges ({len(bad)} failures, {dt:.1f}s)")


def test_criterion_4():
    assert criterion_4()


# -- 5 -------------------------------------------------------------------------------------


def _timed(checks):
    t0 = time.perf_counter()
    results = {}
    for name, f in checks:
        try:
            results[name] = bool(f())
        except Exception as exc:  # a refusal where a value was expected counts as a failure
            results[name] = False
            results[name + f" ({type(exc).__name__})"] = False
    return results, time.perf_counter() - t0


def _refused(f):
    try:
        f()
    except T.Refused:
        return True
    return False


def double_ray_checks():
    G = double_ray()
    E = G.universe
    reps = representative_edges(G, E, 4)
    sample = standard_sample(G)
    mac = mac_oracle(G)
    pairs = [single(a) | single(b) for a, b in combinations(reps, 2)]
    return [
        ("M_AC circuit = E", lambda: mac.is_circuit(E) and [D for D in sample if mac.is_circuit(D)] == [E]),
        ("cocircuits = 2-subsets = skew cuts", lambda: all(T.is_mac_cocircuit(G, P) and T.skew_cut_check(G, P) for P in pairs)
         and not any(T.is_mac_cocircuit(G, single(e)) or T.skew_cut_check(G, single(e)) for e in reps)
         and not any(T.is_mac_cocircuit(G, single(a) | single(b) | single(c)) for a, b, c in combinations(reps, 3))),
        ("bonds = singletons", lambda: all(T.is_bond(G, single(e)) for e in reps) and not any(T.is_bond(G, P) for P in pairs)),
        ("T = E is the topological spanning tree", lambda: T.topological_spanning_tree(G) == E and T.is_topological_spanning_tree(G, E, "both")),
    ]


def _star(i, side):
    """The three edges at vertex side.i (i >= 1)."""
    return expr(**{f"rail:{side}": UPWord.finite([i - 1, i]), "cross:0": UPWord.finite([i])})


def ladder_checks():
    G = ladder()
    comb = expr(**{"rail:a": ALL, "cross:0": ALL})
    rails = expr(**{"rail:a": ALL, "rail:b": ALL})
    rung0 = expr(**{"cross:0": UPWord.finite([0])})
    stars = [_star(i, s) for i in range(1, 5) for s in "ab"]
    return [
        ("comb is a topological spanning tree", lambda: T.is_topological_spanning_tree(G, comb, "both")),
        ("rung0 + rails is a circle", lambda: T.is_circle(G, rails | rung0)),
        ("rails without rung are not a circle", lambda: not T.is_circle(G, rails)),
        ("vertex stars are skew cuts", lambda: all(T.skew_cut_check(G, S) for S in stars)),
        ("bean_check false", lambda: not T.bean_check(G)),
    ]


def fan_checks_as_stated():
    G = fan()
    spoke_circle = expr(**{"coretail:0": UPWord.finite([2]), "rail:t": UPWord.ones(2)})
    return [
        ("bean_check true", lambda: T.bean_check(G)),
        ("M_AC refused", lambda: _refused(lambda: mac_oracle(G))),
        ("spoke + tail rails is a circle", lambda: T.is_circle(G, spoke_circle)),
    ]


def duality_checks():
    lad, dual_g = ladder(), ladder_dual()
    return [("verify_duality_chain on the standard sample",
             lambda: verify_duality_chain(lad, dual_g, ladder_bijection(), standard_sample(lad)))]


GROUPS = {"DoubleRay": double_ray_checks, "Ladder": ladder_checks, "Fan": fan_checks_as_stated, "Ladder/LadderDual": duality_checks}


def criterion_5():
    failed = []
    slow = []
    for name, build in GROUPS.items():
        results, dt = _timed(build())
        failed += [f"{name}: {k}" for k, v in results.items() if not v]
        if dt >= 10:
            slow.append(f"{name} {dt:.1f}s")
    ok = not failed and not slow
    detail = "catalog regression"
    if failed:
        detail += "; failing: " + "; ".join(failed)
    if slow:
        detail += "; over 10s: " + ", ".join(slow)
    return report(5, ok, detail)


@pytest.mark.parametrize("group", ["DoubleRay", "Ladder", "Ladder/LadderDual"])
def test_criterion_5_group(group):
    results, dt = _timed(GROUPS[group]())
    assert all(results.values()), results
    assert dt < 10


@pytest.mark.xfail(strict=True, reason="the fan has no two disjoint rays: its algebraic cycles are its finite cycles, "
                                       "M_AC is a matroid and bean_check is false (see notes/decisions.md)")
def test_criterion_5_fan_as_stated():
    results, _ = _timed(fan_checks_as_stated())
    assert all(results.values()), results


def test_criterion_5():
    criterion_5()  # prints the criterion line; the stated Fan facts are asserted separately above


# -- 6, 7 ----------------------------------------------------------------------------------


def criterion_6():
    bad = [e.name for e in catalog_list() if not tst_criteria_agree(e.build(), standard_sample(e.build()))]
    return report(6, not bad, f"criteria (ii) and (iii) agree on the standard sample of {len(catalog_list())} catalog graphs"
                              + (f"; disagree on {bad}" if bad else ""))


def test_criterion_6():
    assert criterion_6()


def criterion_7():
    bad = [e.name for e in catalog_list() if not tst_extension_contract(e.build(), 20, seed=0)]
    return report(7, not bad, "20 seeded acirclic F per catalog graph extend to valid topological spanning trees "
                              "with finite-bond-free maximal complements" + (f"; failing on {bad}" if bad else ""))


def test_criterion_7():
    assert criterion_7()


# -- 8 -------------------------------------------------------------------------------------


def _rank_ref(rows, coords, p):
    """Plain row reduction over GF(p), written independently of the library."""
    m = [[r.get(a, 0) % p for a in coords] for r in rows]
    rank = 0
    for c in range(len(coords)):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def criterion_8():
    t0 = time.perf_counter()
    rng = random.Random(8)
    axioms_bad = rank_bad = 0
    for k in range(200):
        p = (2, 3)[k % 2]
        X = random_thin_family(rng, p, max_coords=7, max_vectors=7)
        if not verify_theorem8(X).passed:
            axioms_bad += 1
        coords = sorted({a for _, v in X.members for a in v.support}, key=str)
        fam = independent_family(X)
        names = X.names
        expected = set()
        for m in range(1 << len(names)):
            rows = [dict(X.vector(names[i]).items) for i in bits(m)]
            if _rank_ref(rows, coords, p) == len(rows):
                expected.add(m)
        if fam.as_set != expected or thinly_independent(X) != ((1 << len(names)) - 1 in expected):
            rank_bad += 1
    dt = time.perf_counter() - t0
    ok = axioms_bad == 0 and rank_bad == 0 and dt < 120
    return report(8, ok, f"200 seeded thin families over F2/F3: axiom failures {axioms_bad}, "
                          f"disagreements with row reduction {rank_bad} ({dt:.1f}s, limit 120s)")


def test_criterion_8():
    assert criterion_8()


# -- 9 -------------------------------------------------------------------------------------


def criterion_9():
    gs = all_multigraphs(5)
    finite_bad = sum(not mac_thin_equivalence(G) for G in gs)
    inf = {"DoubleRay": double_ray(), "Ladder": ladder()}
    inf_bad = [n for n, G in inf.items() if not mac_thin_equivalence(G, standard_sample(G))]
    ok = finite_bad == 0 and not inf_bad
    return report(9, ok, f"thin-sums independence = M_AC independence on {len(gs)} multigraphs with <= 5 edges "
                          f"({finite_bad} failures) and on the standard samples of DoubleRay, Ladder"
                          + (f" (failing: {inf_bad})" if inf_bad else ""))


def test_criterion_9():
    assert criterion_9()


# -- 10 ------------------------------------------------------------------------------------


def criterion_10():
    rep = i3_counterexample_demo(10)
    text = rep.text()
    side_by_side = "interval:" in text and "pair:" in text
    gap = weak_verifier_gap_demo()
    ok = rep.dependences_ok and side_by_side and gap.holds
    return report(10, ok, f"interval dependences for 2 <= n <= 10: {rep.dependences_ok}; both readings reported: "
                           f"{side_by_side}; non-extendable chain certificate: {gap.holds}")


def test_criterion_10():
    assert criterion_10()


if __name__ == "__main__":
    results = [criterion_1(), criterion_2(), criterion_3(), criterion_4(), criterion_5(), criterion_6(),
               criterion_7(), criterion_8(), criterion_9(), criterion_10()]
    sys.exit(0 if all(results) else 1)
