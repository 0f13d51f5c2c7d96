"""Command-line front end.  Exit codes: 0 success/true, 1 property fails/false, 2 input error."""

from __future__ import annotations

import argparse
import random
import sys

from . import axioms, graphs
from .core import FiniteMatroid, MatroidError, dual, minor
from .formats import (
    ParseError,
    parse_expr,
    parse_graph,
    parse_matroid,
    parse_sgraph,
    parse_thinfam,
    print_expr,
    print_matroid,
    print_thinfam,
)
from .infinite import catalog, oracles, topology
from .infinite.gap import weak_verifier_gap_demo
from . import thinsums

DEFAULT_SEED = 0


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _parse(path: str, parser):
    try:
        return parser(_read(path))
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _flag(name: str, value: bool) -> int:
    print(f"{name} {'true' if value else 'false'}")
    return 0 if value else 1


def _labels(s: str | None) -> list[str]:
    return [x for x in (s or "").replace(",", " ").split() if x]


# -- finite matroids ------------------------------------------------------------------


def _matroid(pres) -> FiniteMatroid:
    report = axioms.verify_any(pres)
    if not report.passed:
        for line in report.lines(_ground(pres)):
            print(line)
        raise _Fail()
    ind = axioms.convert(pres, "independents")[1]
    return FiniteMatroid(ind.ground, ind, validated=False)


def _ground(pres):
    return pres[1].ground if isinstance(pres, tuple) else pres.ground


class _Fail(Exception):
    pass


def _present(M: FiniteMatroid, kind: str):
    return axioms.convert(("independents", M.independents), kind)


def cmd_verify(a) -> int:
    pres = _parse(a.file, parse_matroid)
    kind = axioms.kind_of(pres)
    if a.system and a.system != kind:
        raise InputError(f"{a.file} holds a {kind} presentation, not {a.system}")
    report = axioms.verify_any(pres)
    if a.verbose:
        for line in report.lines(_ground(pres)):
            print(line)
    else:
        print(report.summary())
        if not report.passed:
            for line in report.lines(_ground(pres)):
                if " fail" in line:
                    print(line)
    return 0 if report.passed else 1


def cmd_convert(a) -> int:
    pres = _parse(a.file, parse_matroid)
    try:
        out = axioms.convert(pres, a.to)
    except axioms.ConversionRefused as exc:
        print(f"refused: {exc}")
        return 1
    _emit(print_matroid(out), a.output)
    return 0


def cmd_dual(a) -> int:
    pres = _parse(a.file, parse_matroid)
    M = _matroid(pres)
    _emit(print_matroid(_present(dual(M), a.to or axioms.kind_of(pres))), a.output)
    return 0


def cmd_minor(a) -> int:
    pres = _parse(a.file, parse_matroid)
    M = _matroid(pres)
    try:
        N = minor(M, _labels(a.delete), _labels(a.contract))
    except MatroidError as exc:
        raise InputError(str(exc)) from None
    _emit(print_matroid(_present(N, a.to or axioms.kind_of(pres))), a.output)
    return 0


def cmd_enumerate(a) -> int:
    try:
        ms = axioms.enumerate_matroids(a.n, bound=max(a.n, axioms.ENUMERATION_BOUND) if a.force else axioms.ENUMERATION_BOUND)
    except MatroidError as exc:
        raise InputError(str(exc)) from None
    if a.cross_check:
        other = axioms.enumerate_matroids_by_filter(a.n, bound=max(a.n, axioms.ENUMERATION_BOUND))
        same = {m.independents.as_set for m in ms} == {m.independents.as_set for m in other}
        print(f"matroids on {a.n} elements: {len(ms)}")
        return _flag("cross-check", same)
    print(f"matroids on {a.n} elements: {len(ms)}")
    if a.list:
        for M in ms:
            print(" ".join("{" + ",".join(M.ground.labels(b)) + "}" for b in M.bases().members))
    return 0


# -- finite graphs -----------------------------------------------------------------------


def cmd_graph(a) -> int:
    G = _parse(a.file, parse_graph)
    op = a.op
    if op in ("cycle-matroid", "bond-matroid"):
        M = graphs.finite_cycle_matroid(G) if op == "cycle-matroid" else graphs.finite_bond_matroid(G)
        _emit(print_matroid(_present(M, a.to or "circuits")), a.output)
        return 0
    if op == "bonds":
        ground = graphs.finite_cycle_matroid(G).ground
        for m in graphs.bonds(G).members:
            print(" ".join(ground.labels(m)))
        return 0
    if op == "cocircuits-are-bonds":
        return _flag("cocircuits = bonds = minimal tree transversals", graphs.verify_theorem1(G))
    if op == "is-bond":
        try:
            return _flag("bond", graphs.is_bond(G, _labels(a.edges)))
        except MatroidError as exc:
            raise InputError(str(exc)) from None
    raise InputError(f"unknown graph operation {op}")


# -- structured infinite graphs ---------------------------------------------------------------

SET_OPS = {
    "circle": topology.is_circle,
    "bond": topology.is_bond,
    "acirclic": topology.acirclic,
    "closure-connected": topology.closure_connected,
    "skew-cut": topology.skew_cut_check,
    "mac-cocircuit": topology.is_mac_cocircuit,
}


def cmd_sgraph(a) -> int:
    G = _parse(a.file, parse_sgraph)
    D = _parse(a.expr, parse_expr) if a.expr else None
    op = a.op

    def need():
        if D is None:
            raise InputError(f"operation {op} needs an edge-set expression file")
        try:
            G.check_subset(D)
        except MatroidError as exc:
            raise InputError(str(exc)) from None
        return D

    try:
        if op == "ends":
            for i, e in enumerate(topology.ends(G)):
                dom = ",".join(sorted(map(str, e.dominated_by))) or "-"
                print(f"end {i}: tails {','.join(sorted(e.tails))}; dominated by {dom}")
            return 0
        if op == "bean":
            return _flag("bean_check", topology.bean_check(G))
        if op in SET_OPS:
            return _flag(op, SET_OPS[op](G, need()))
        if op == "is-tst":
            return _flag("topological spanning tree", topology.is_topological_spanning_tree(G, need(), a.criterion))
        if op == "tst":
            T = topology.topological_spanning_tree(G, D)
            _emit(print_expr(T), a.output)
            return 0
        if op in ("independent", "circuit"):
            names = ["M_FC", "M_B", "M_FB", "M_C", "M_AC"] if a.matroid == "all" else [a.matroid]
            code = 0
            for name in names:
                orc = oracles.mac_oracle(G) if name == "M_AC" else oracles.matroid_oracles(G, include_mac=False)[name]
                val = orc.is_independent(need()) if op == "independent" else orc.is_circuit(need())
                print(f"{name} {op} {'true' if val else 'false'}")
                code = code or (0 if val else 1)
            return code
        sample = oracles.standard_sample(G, seed=a.seed)
        if op == "mac-duality":
            return _flag("mac duality", oracles.verify_mac_duality(G, sample))
        if op == "tst-criteria":
            return _flag("criteria (ii) and (iii) agree", oracles.tst_criteria_agree(G, sample))
        if op == "tst-contract":
            return _flag("spanning tree contract", oracles.tst_extension_contract(G, seed=a.seed))
        if op == "thin":
            return _flag("thin-sums representation agrees", thinsums.mac_thin_equivalence(G, sample, seed=a.seed))
        if op == "sample":
            for X in sample:
                print(topology.describe(X))
            return 0
    except topology.Refused as exc:
        print(f"refused: {exc}")
        return 1
    except topology.PreconditionError as exc:
        raise InputError(str(exc)) from None
    raise InputError(f"unknown sgraph operation {op}")


# -- thin sums ---------------------------------------------------------------------------------


def cmd_thinsum(a) -> int:
    op = a.op
    if op == "demo":
        rep = thinsums.i3_counterexample_demo(a.n)
        print(rep.text())
        gap = weak_verifier_gap_demo()
        for line in gap.lines:
            print(line)
        return 0 if rep.dependences_ok and gap.holds else 1
    if op == "random":
        X = thinsums.random_thin_family(random.Random(a.seed), a.p)
        _emit(print_thinfam(X), a.output)
        return 0
    if not a.file:
        raise InputError(f"operation {op} needs a thinfam file")
    X = _parse(a.file, parse_thinfam)
    try:
        if op == "thin":
            return _flag("thin", thinsums.is_thin(X))
        if op == "independent":
            return _flag("thinly independent", thinsums.thinly_independent(X, require_thin=a.require_thin))
        if op == "span":
            if a.vec not in X.names:
                raise InputError(f"no member named {a.vec}")
            rest = X.sub([n for n in X.names if n != a.vec])
            return _flag(f"{a.vec} in span", thinsums.span_membership(X.vector(a.vec), rest))
        if op == "extend":
            start = _labels(a.start)
            missing = [n for n in start if n not in X.names]
            if missing:
                raise InputError(f"unknown members {' '.join(missing)}")
            print(" ".join(thinsums.thin_basis_extend(start, X)))
            return 0
        if op == "axioms":
            report = thinsums.verify_theorem8(X)
            for line in report.lines():
                print(line)
            return 0 if report.passed else 1
    except thinsums.Unsupported as exc:
        print(f"refused: {exc}")
        return 1
    raise InputError(f"unknown thinsum operation {op}")


# -- catalog ----------------------------------------------------------------------------------


def cmd_catalog(a) -> int:
    if a.action == "list":
        for e in catalog.catalog_list():
            print(e.name)
        return 0
    if a.name in (None, "all"):
        entries = catalog.catalog_list()
    else:
        try:
            entries = [catalog.catalog_entry(a.name)]
        except (KeyError, MatroidError) as exc:
            raise InputError(str(exc)) from None
    ok_all = True
    for e in entries:
        for text, ok, got, expected in catalog.run_entry(e):
            ok_all &= ok
            line = f"{'PASS' if ok else 'FAIL'} {e.name}: {text}"
            if not ok:
                line += f" (got {got!r}, expected {expected!r})"
            print(line)
        if e.note and a.verbose:
            print(f"note {e.name}: {e.note}")
    return 0 if ok_all else 1


# -- parser -----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matroidbench", description=__doc__)
    sub = p.add_subparsers(dest="verb", required=True, metavar="verb")

    def out(sp):
        sp.add_argument("-o", "--output", help="write the result here instead of stdout")

    sp = sub.add_parser("verify", help="check every axiom of a matroid file's presentation")
    sp.add_argument("--system", choices=axioms.KINDS, help="expected presentation kind")
    sp.add_argument("-v", "--verbose", action="store_true", help="one line per axiom")
    sp.add_argument("file")
    sp.set_defaults(run=cmd_verify)

    sp = sub.add_parser("convert", help="convert a matroid file to another presentation")
    sp.add_argument("--to", required=True, choices=axioms.KINDS)
    sp.add_argument("file")
    out(sp)
    sp.set_defaults(run=cmd_convert)

    sp = sub.add_parser("dual", help="dual matroid")
    sp.add_argument("--to", choices=axioms.KINDS, help="output presentation (default: same as input)")
    sp.add_argument("file")
    out(sp)
    sp.set_defaults(run=cmd_dual)

    sp = sub.add_parser("minor", help="delete and contract elements")
    sp.add_argument("--delete", default="", help="comma-separated labels")
    sp.add_argument("--contract", default="", help="comma-separated labels")
    sp.add_argument("--to", choices=axioms.KINDS)
    sp.add_argument("file")
    out(sp)
    sp.set_defaults(run=cmd_minor)

    sp = sub.add_parser("enumerate", help="count labelled matroids on n elements")
    sp.add_argument("n", type=int)
    sp.add_argument("--list", action="store_true", help="print the bases of each matroid")
    sp.add_argument("--cross-check", action="store_true", help="compare with the second enumerator")
    sp.add_argument("--force", action="store_true", help=f"allow n > {axioms.ENUMERATION_BOUND}")
    sp.set_defaults(run=cmd_enumerate)

    sp = sub.add_parser("graph", help="finite multigraph operations")
    sp.add_argument("op", choices=["cycle-matroid", "bond-matroid", "bonds", "cocircuits-are-bonds", "is-bond"])
    sp.add_argument("file")
    sp.add_argument("--edges", help="edge labels for is-bond")
    sp.add_argument("--to", choices=axioms.KINDS)
    out(sp)
    sp.set_defaults(run=cmd_graph)

    sp = sub.add_parser("sgraph", help="structured infinite graph operations")
    sp.add_argument("op", choices=["ends", "bean", "tst", "is-tst", "independent", "circuit", "mac-duality",
                                   "tst-criteria", "tst-contract", "thin", "sample", *SET_OPS])
    sp.add_argument("file", help="sgraph file")
    sp.add_argument("expr", nargs="?", help="edge-set expression file")
    sp.add_argument("--matroid", default="all", choices=["all", "M_FC", "M_B", "M_FB", "M_C", "M_AC"])
    sp.add_argument("--criterion", default="iii", choices=["ii", "iii", "both"])
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    out(sp)
    sp.set_defaults(run=cmd_sgraph)

    sp = sub.add_parser("thinsum", help="thin families of vectors over F_p")
    sp.add_argument("op", choices=["thin", "independent", "span", "extend", "axioms", "demo", "random"])
    sp.add_argument("file", nargs="?", help="thinfam file")
    sp.add_argument("--vec", help="member tested by span against the others")
    sp.add_argument("--start", default="", help="independent start set for extend")
    sp.add_argument("--require-thin", action="store_true")
    sp.add_argument("--n", type=int, default=10, help="truncation for demo")
    sp.add_argument("--p", type=int, default=2, help="field size for random")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    out(sp)
    sp.set_defaults(run=cmd_thinsum)

    sp = sub.add_parser("catalog", help="list or replay the regression catalog")
    sp.add_argument("action", choices=["list", "run"])
    sp.add_argument("name", nargs="?", help="entry name or 'all'")
    sp.add_argument("-v", "--verbose", action="store_true")
    sp.set_defaults(run=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except _Fail:
        return 1
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MatroidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
