"""Axiom checkers for the five matroid axiomatizations, conversions, enumeration.

Every checker runs each axiom literally over the finite ground set, including
the maximal-extension axioms that are automatic when E is finite.  A failing
axiom carries a witness that :func:`replay` can re-check in isolation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Callable, Iterable

from .core import (
    FiniteMatroid,
    GroundSet,
    MatroidError,
    RelRankTable,
    SetFamily,
    bits,
    closure,
    mask_key,
    nested_pairs,
    popcount,
    rank_table,
    submasks,
)

SYSTEMS = ("independence", "basis", "circuit", "closure", "rank")
AXIOMS = {
    "independence": ("I1", "I2", "I3", "IM"),
    "basis": ("B1", "B2", "BM"),
    "circuit": ("C1", "C2", "C3", "CM"),
    "closure": ("CL1", "CL2", "CL3", "CL4", "CLM"),
    "rank": ("R1", "R2", "R3", "R4", "RM"),
}


@dataclass
class AxiomReport:
    system: str
    results: dict[str, bool]
    witnesses: dict[str, Any] = field(default_factory=dict)
    subject: Any = None

    @property
    def passed(self) -> bool:
        return all(self.results.values())

    @property
    def witness(self):
        """Certificate of the first failing axiom, or None."""
        for name, ok in self.results.items():
            if not ok:
                return name, self.witnesses[name]
        return None

    def summary(self) -> str:
        return " / ".join(f"{k} {'pass' if v else 'fail'}" for k, v in self.results.items())

    def lines(self, ground: GroundSet | None = None) -> list[str]:
        out = []
        for name, ok in self.results.items():
            line = f"{name} {'pass' if ok else 'fail'}"
            if not ok:
                line += f" [witness: {format_witness(self.witnesses[name], ground)}]"
            out.append(line)
        return out


def format_witness(w, ground: GroundSet | None) -> str:
    def fmt(x):
        if isinstance(x, bool) or x is None:
            return str(x)
        if isinstance(x, int) and ground is not None:
            return "{" + ",".join(ground.labels(x)) + "}"
        if isinstance(x, dict):
            return "{" + ", ".join(f"{fmt(k)}: {fmt(v)}" for k, v in x.items()) + "}"
        if isinstance(x, (tuple, list)):
            return "(" + ", ".join(fmt(v) for v in x) + ")"
        return str(x)

    return fmt(w)


# -- the (M) property ---------------------------------------------------------


def _m_failure(ground: GroundSet, family: frozenset[int]) -> tuple[int, int] | None:
    """Search literally for I <= X with no maximal element in {I' in family : I <= I' <= X}."""
    for X in ground.all_masks():
        for I in family:
            if I & X != I:
                continue
            between = [J for J in family if J & I == I and J & X == J]
            maxima = [J for J in between if not any(K != J and K & J == J for K in between)]
            if not maxima:
                return I, X
    return None


# -- independence -------------------------------------------------------------


def _check_i1(fam):
    return None if 0 in fam else ()


def _check_i2(fam):
    for I in sorted(fam, key=mask_key):
        for x in bits(I):
            if I & ~(1 << x) not in fam:
                return I, x
    return None


def _check_i3(fam):
    maxi = [J for J in fam if not any(K != J and K & J == J for K in fam)]
    for I in sorted(fam, key=mask_key):
        if I in maxi:
            continue
        for Ip in sorted(maxi, key=mask_key):
            if not any((I | 1 << x) in fam for x in bits(Ip & ~I)):
                return I, Ip
    return None


def verify_independence(family: SetFamily) -> AxiomReport:
    fam = family.as_set
    checks = {
        "I1": _check_i1(fam),
        "I2": _check_i2(fam),
        "I3": _check_i3(fam),
        "IM": _m_failure(family.ground, fam),
    }
    return _report("independence", checks, family)


def _report(system: str, checks: dict[str, Any], subject) -> AxiomReport:
    results = {k: v is None for k, v in checks.items()}
    witnesses = {k: v for k, v in checks.items() if v is not None}
    return AxiomReport(system, results, witnesses, subject)


# -- bases --------------------------------------------------------------------


def verify_bases(family: SetFamily) -> AxiomReport:
    fam = family.as_set
    checks: dict[str, Any] = {"B1": None if fam else ()}
    b2 = None
    for B1 in family.members:
        for B2 in family.members:
            for x in bits(B1 & ~B2):
                if not any(((B1 & ~(1 << x)) | 1 << y) in fam for y in bits(B2 & ~B1)):
                    b2 = (B1, B2, x)
                    break
            if b2:
                break
        if b2:
            break
    checks["B2"] = b2
    checks["BM"] = _m_failure(family.ground, family.down_closure().as_set)
    return _report("basis", checks, family)


# -- circuits -----------------------------------------------------------------


def _c3_failure(ground: GroundSet, circ: list[int], cset: frozenset[int]):
    for C in circ:
        for X in submasks(C):
            xs = list(bits(X))
            # candidates C_x: circuits through x that avoid the rest of X
            options = [[D for D in circ if D >> x & 1 and not D & X & ~(1 << x)] for x in xs]
            if any(not o for o in options):
                continue
            for choice in product(*options):
                union = 0
                for D in choice:
                    union |= D
                target = (C | union) & ~X
                for z in bits(C & ~union):
                    if not any(D >> z & 1 and D & ~target == 0 for D in circ):
                        return C, X, dict(zip(xs, choice)), z
    return None


def verify_circuits(family: SetFamily) -> AxiomReport:
    circ = list(family.members)
    cset = family.as_set
    checks: dict[str, Any] = {"C1": () if 0 in cset else None}
    c2 = None
    for a in circ:
        for b in circ:
            if a != b and a & b == a:
                c2 = (a, b)
                break
        if c2:
            break
    checks["C2"] = c2
    checks["C3"] = _c3_failure(family.ground, circ, cset)
    indep = frozenset(m for m in family.ground.all_masks() if not any(c & m == c for c in circ))
    checks["CM"] = _m_failure(family.ground, indep)
    return _report("circuit", checks, family)


def verify_circuits_weak(family: SetFamily) -> AxiomReport:
    """(C1), (C2) and classic pairwise elimination only."""
    circ = list(family.members)
    checks: dict[str, Any] = {"C1": () if 0 in family.as_set else None}
    checks["C2"] = next(((a, b) for a in circ for b in circ if a != b and a & b == a), None)
    elim = None
    for a, b in combinations(circ, 2):
        for e in bits(a & b):
            target = (a | b) & ~(1 << e)
            if not any(c & ~target == 0 for c in circ):
                elim = (a, b, e)
                break
        if elim:
            break
    checks["CE"] = elim
    return _report("circuit-weak", checks, family)


# -- closure ------------------------------------------------------------------


@dataclass(frozen=True)
class ClosureTable:
    ground: GroundSet
    map: dict = field(hash=False)

    def __post_init__(self):
        missing = [m for m in self.ground.all_masks() if m not in self.map]
        if missing:
            raise MatroidError(f"closure table is partial: {len(missing)} subsets missing")

    def __call__(self, X: int) -> int:
        return self.map[X]

    @classmethod
    def of(cls, M: FiniteMatroid) -> "ClosureTable":
        return cls(M.ground, {X: closure(M, X) for X in M.ground.all_masks()})

    def independents(self) -> frozenset[int]:
        cl = self.map
        return frozenset(I for I in self.ground.all_masks() if all(not cl[I & ~(1 << x)] >> x & 1 for x in bits(I)))


def verify_closure(table: ClosureTable) -> AxiomReport:
    cl = table.map
    masks = list(table.ground.all_masks())
    n = len(table.ground)
    checks: dict[str, Any] = {}
    checks["CL1"] = next((X for X in masks if cl[X] & X != X), None)
    checks["CL2"] = next(((X, Y) for Y in masks for X in submasks(Y) if cl[X] & ~cl[Y]), None)
    checks["CL3"] = next((X for X in masks if cl[cl[X]] != cl[X]), None)
    cl4 = None
    for Z in masks:
        for x in range(n):
            for y in range(n):
                zx = Z | 1 << x
                if cl[zx] >> y & 1 and not cl[Z] >> y & 1 and not cl[Z | 1 << y] >> x & 1:
                    cl4 = (Z, x, y)
                    break
            if cl4:
                break
        if cl4:
            break
    checks["CL4"] = cl4
    checks["CLM"] = _m_failure(table.ground, table.independents())
    return _report("closure", checks, table)


# -- rank ---------------------------------------------------------------------


@dataclass(frozen=True)
class RankInput:
    ground: GroundSet
    table: RelRankTable

    def __post_init__(self):
        missing = [p for p in nested_pairs(self.ground) if p not in self.table.entries]
        if missing:
            raise MatroidError(f"rank table is partial: {len(missing)} nested pairs missing")

    def r(self, a: int, b: int) -> int:
        return self.table.entries[(a, b)]

    @classmethod
    def from_absolute(cls, ground: GroundSet, R: Callable[[int], int]) -> "RankInput":
        return cls(ground, RelRankTable(ground, {(a, b): R(a) - R(b) for a, b in nested_pairs(ground)}))

    def independents(self) -> frozenset[int]:
        return frozenset(I for I in self.ground.all_masks() if all(self.r(I, I & ~(1 << x)) > 0 for x in bits(I)))


R4_EXHAUSTIVE_MAX_N = 3


def _r4_failure(inp: RankInput, exhaustive: bool):
    ground = inp.ground
    for B in ground.all_masks():
        zeros = [A for A in ground.all_masks() if A & B == B and inp.r(A, B) == 0]
        if exhaustive:
            for k in range(1, len(zeros) + 1):
                for fam in combinations(zeros, k):
                    A = 0
                    for x in fam:
                        A |= x
                    if inp.r(A, B) != 0:
                        return fam, B
        else:
            # closure under pairwise unions gives closure under all finite unions
            zs = set(zeros)
            for a, b in combinations(zeros, 2):
                if a | b not in zs:
                    return (a, b), B
    return None


def verify_rank(inp: RankInput, exhaustive_r4: bool | None = None) -> AxiomReport:
    ground = inp.ground
    masks = list(ground.all_masks())
    r = inp.r
    if exhaustive_r4 is None:
        exhaustive_r4 = len(ground) <= R4_EXHAUSTIVE_MAX_N
    checks: dict[str, Any] = {}
    # relative ranks live in N: R1 covers the range check 0 <= r(A|B) <= |A - B|
    checks["R1"] = next(((a, b) for a, b in nested_pairs(ground) if r(a, b) is None or not 0 <= r(a, b) <= popcount(a & ~b)), None)
    checks["R2"] = next(((a, b) for a in masks for b in masks if r(a, a & b) < r(a | b, b)), None)
    checks["R3"] = next(
        ((a, b, c) for a in masks for b in submasks(a) for c in submasks(b) if r(a, c) != r(a, b) + r(b, c)),
        None,
    )
    checks["R4"] = _r4_failure(inp, exhaustive_r4)
    checks["RM"] = _m_failure(ground, inp.independents())
    return _report("rank", checks, inp)


# -- replay -------------------------------------------------------------------


def replay(report: AxiomReport, axiom: str) -> bool:
    """Re-check the stored witness for ``axiom``; True when the failure reproduces."""
    w = report.witnesses[axiom]
    s = report.subject
    if report.system == "independence":
        fam = s.as_set
        if axiom == "I1":
            return 0 not in fam
        if axiom == "I2":
            I, x = w
            return I in fam and I & ~(1 << x) not in fam
        if axiom == "I3":
            I, Ip = w
            maxi = {J for J in fam if not any(K != J and K & J == J for K in fam)}
            return I in fam and I not in maxi and Ip in maxi and not any((I | 1 << x) in fam for x in bits(Ip & ~I))
        if axiom == "IM":
            return _m_fails_at(fam, *w)
    if report.system == "basis":
        fam = s.as_set
        if axiom == "B1":
            return not fam
        if axiom == "B2":
            B1, B2, x = w
            return B1 in fam and B2 in fam and not any(((B1 & ~(1 << x)) | 1 << y) in fam for y in bits(B2 & ~B1))
        if axiom == "BM":
            return _m_fails_at(s.down_closure().as_set, *w)
    if report.system in ("circuit", "circuit-weak"):
        circ = list(s.members)
        if axiom == "C1":
            return 0 in s.as_set
        if axiom == "C2":
            a, b = w
            return a != b and a & b == a and a in s.as_set and b in s.as_set
        if axiom == "C3":
            C, X, fam, z = w
            union = 0
            for x, D in fam.items():
                if not (D >> x & 1) or D & X & ~(1 << x):
                    return False
                union |= D
            target = (C | union) & ~X
            return C in s.as_set and not union >> z & 1 and not any(D >> z & 1 and D & ~target == 0 for D in circ)
        if axiom == "CE":
            a, b, e = w
            target = (a | b) & ~(1 << e)
            return not any(c & ~target == 0 for c in circ)
        if axiom == "CM":
            indep = frozenset(m for m in s.ground.all_masks() if not any(c & m == c for c in circ))
            return _m_fails_at(indep, *w)
    if report.system == "closure":
        cl = s.map
        if axiom == "CL1":
            return cl[w] & w != w
        if axiom == "CL2":
            X, Y = w
            return X & Y == X and bool(cl[X] & ~cl[Y])
        if axiom == "CL3":
            return cl[cl[w]] != cl[w]
        if axiom == "CL4":
            Z, x, y = w
            return bool(cl[Z | 1 << x] >> y & 1) and not cl[Z] >> y & 1 and not cl[Z | 1 << y] >> x & 1
        if axiom == "CLM":
            return _m_fails_at(s.independents(), *w)
    if report.system == "rank":
        r = s.r
        if axiom == "R1":
            a, b = w
            return r(a, b) is None or not 0 <= r(a, b) <= popcount(a & ~b)
        if axiom == "R2":
            a, b = w
            return r(a, a & b) < r(a | b, b)
        if axiom == "R3":
            a, b, c = w
            return r(a, c) != r(a, b) + r(b, c)
        if axiom == "R4":
            fam, B = w
            A = 0
            for x in fam:
                A |= x
            return all(r(x, B) == 0 for x in fam) and r(A, B) != 0
        if axiom == "RM":
            return _m_fails_at(s.independents(), *w)
    raise ValueError(f"cannot replay {axiom} for system {report.system}")


def _m_fails_at(fam: frozenset[int], I: int, X: int) -> bool:
    between = [J for J in fam if J & I == I and J & X == J]
    return I in fam and not [J for J in between if not any(K != J and K & J == J for K in between)]


# -- conversion ---------------------------------------------------------------


class ConversionRefused(MatroidError):
    def __init__(self, report: AxiomReport):
        super().__init__(f"source fails its axioms: {report.summary()}")
        self.report = report


KINDS = ("independents", "bases", "circuits", "closure", "rank")


def kind_of(x) -> str:
    if isinstance(x, ClosureTable):
        return "closure"
    if isinstance(x, RankInput):
        return "rank"
    if isinstance(x, tuple) and len(x) == 2 and x[0] in KINDS:
        return x[0]
    raise TypeError(f"cannot tell the presentation kind of {x!r}")


def verify_any(x) -> AxiomReport:
    kind = kind_of(x)
    if kind == "closure":
        return verify_closure(x)
    if kind == "rank":
        return verify_rank(x)
    fam = x[1]
    return {"independents": verify_independence, "bases": verify_bases, "circuits": verify_circuits}[kind](fam)


def _to_independents(x) -> SetFamily:
    kind = kind_of(x)
    if kind == "closure":
        return SetFamily(x.ground, tuple(x.independents()))
    if kind == "rank":
        return SetFamily(x.ground, tuple(x.independents()))
    fam: SetFamily = x[1]
    if kind == "independents":
        return fam
    if kind == "bases":
        return fam.down_closure()
    circ = fam.members
    return SetFamily(fam.ground, tuple(m for m in fam.ground.all_masks() if not any(c & m == c for c in circ)))


def convert(source, target: str):
    """Convert between presentations.

    Set-system presentations are ``(kind, SetFamily)`` pairs with kind one of
    ``independents``, ``bases``, ``circuits``; closure and rank presentations
    are :class:`ClosureTable` and :class:`RankInput` values.
    """
    if target not in KINDS:
        raise MatroidError(f"unknown target presentation {target!r}")
    report = verify_any(source)
    if not report.passed:
        raise ConversionRefused(report)
    ind = _to_independents(source)
    M = FiniteMatroid(ind.ground, ind, validated=False)
    if target == "independents":
        return ("independents", ind)
    if target == "bases":
        return ("bases", M.bases())
    if target == "circuits":
        return ("circuits", M.circuits())
    if target == "closure":
        return ClosureTable.of(M)
    return RankInput(M.ground, rank_table(M))


def presentations_equal(a, b) -> bool:
    ka, kb = kind_of(a), kind_of(b)
    if ka != kb:
        return False
    if ka == "closure":
        return a.ground == b.ground and a.map == b.map
    if ka == "rank":
        return a.ground == b.ground and a.table.entries == b.table.entries
    return a[1].ground == b[1].ground and a[1].as_set == b[1].as_set


# -- enumeration --------------------------------------------------------------

ENUMERATION_BOUND = 4


def down_sets(n: int) -> list[frozenset[int]]:
    """All down-closed families on an n-element ground set (recursion on the last element)."""
    if n == 0:
        return [frozenset(), frozenset({0})]
    prev = down_sets(n - 1)
    bit = 1 << (n - 1)
    out = []
    for d0 in prev:
        for d1 in prev:
            if d1 <= d0:
                out.append(d0 | frozenset(m | bit for m in d1))
    return out


def _canonical(ms: list[FiniteMatroid]) -> list[FiniteMatroid]:
    uniq = {M.independents.as_set: M for M in ms}
    return [uniq[k] for k in sorted(uniq, key=lambda s: sorted(mask_key(m) for m in s))]


def enumerate_matroids(n: int, bound: int = ENUMERATION_BOUND) -> list[FiniteMatroid]:
    """All labelled matroids on n elements, built from basis families passing (B2)."""
    if n > bound:
        raise MatroidError(f"enumeration refused: n={n} exceeds the bound {bound}")
    from .core import labels_for

    ground = GroundSet(labels_for(n))
    out = []
    for k in range(n + 1):
        ks = [m for m in ground.all_masks() if popcount(m) == k]
        for pick in range(1, 1 << len(ks)):
            fam = SetFamily(ground, tuple(ks[i] for i in bits(pick)))
            if verify_bases(fam).results["B2"]:
                out.append(FiniteMatroid(ground, fam.down_closure(), validated=False))
    return _canonical(out)


def enumerate_matroids_by_filter(n: int, bound: int = ENUMERATION_BOUND) -> list[FiniteMatroid]:
    """Second code path: every down-closed family that passes verify_independence."""
    if n > bound:
        raise MatroidError(f"enumeration refused: n={n} exceeds the bound {bound}")
    from .core import labels_for

    ground = GroundSet(labels_for(n))
    out = []
    for d in down_sets(n):
        fam = SetFamily(ground, tuple(d))
        if verify_independence(fam).passed:
            out.append(FiniteMatroid(ground, fam, validated=False))
    return _canonical(out)


# -- finitary check over symbolic circuits ------------------------------------


def is_finitary_family(circuits: Iterable) -> bool:
    """True iff every circuit expression denotes a finite edge set."""
    return all(c.is_finite() for c in circuits)
