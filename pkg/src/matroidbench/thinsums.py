"""Thin families of functions A -> F_p, thin independence and the thin-sums matroid.

Finite families are decided by Gaussian elimination over F_p.  Two kinds of infinite input are
decided exactly over F_2 by finite automata:

* families over the coordinate set N built from the indexed kinds ``interval`` ({1..n}),
  ``singleton`` ({n}) and ``pair`` ({1, n}) with an ultimately periodic index set, plus finitely
  many ultimately periodic vectors;
* incidence families of structured graphs (one vector per edge, coordinates = vertices).

Anything else that is infinite is refused.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import lcm
from typing import Hashable, Iterable, Sequence

from .axioms import AxiomReport, verify_independence
from .core import GroundSet, MatroidError, SetFamily, bits
from .graphs import MultiGraph
from .infinite.sgraph import StructuredGraph
from .infinite.words import EdgeSetExpr, UPWord


class Unsupported(MatroidError):
    """The instance lies outside the shapes that can be decided exactly."""


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class FieldSpec:
    p: int = 2

    def __post_init__(self):
        if not _is_prime(self.p):
            raise MatroidError(f"{self.p} is not prime")


# -- vectors ------------------------------------------------------------------------


@dataclass(frozen=True)
class FnVec:
    """A finitely supported function A -> F_p, stored as sorted (coordinate, value) pairs."""

    items: tuple = ()

    @classmethod
    def of(cls, values: dict, p: int = 2) -> "FnVec":
        return cls(tuple(sorted(((a, v % p) for a, v in values.items() if v % p), key=lambda kv: repr(kv[0]))))

    @classmethod
    def indicator(cls, coords: Iterable[Hashable], p: int = 2) -> "FnVec":
        out: dict = {}
        for a in coords:
            out[a] = out.get(a, 0) + 1
        return cls.of(out, p)

    def __getitem__(self, a) -> int:
        return dict(self.items).get(a, 0)

    @property
    def support(self) -> frozenset:
        return frozenset(a for a, _ in self.items)

    def is_zero(self) -> bool:
        return not self.items


@dataclass(frozen=True)
class PVec:
    """A function N -> F_p whose value sequence is ultimately periodic: pre, then per repeated."""

    pre: tuple
    per: tuple
    p: int = 2

    def __post_init__(self):
        if not self.per:
            raise MatroidError("period must be non-empty")
        object.__setattr__(self, "pre", tuple(v % self.p for v in self.pre))
        object.__setattr__(self, "per", tuple(v % self.p for v in self.per))

    @classmethod
    def make(cls, start: int, pre: Sequence[int], per: Sequence[int], p: int = 2) -> "PVec":
        return cls((0,) * start + tuple(pre), tuple(per), p)

    @classmethod
    def from_word(cls, w: UPWord) -> "PVec":
        return cls(w.pre, w.per, 2)

    def __getitem__(self, k: int) -> int:
        if k < 0:
            return 0
        if k < len(self.pre):
            return self.pre[k]
        return self.per[(k - len(self.pre)) % len(self.per)]

    @property
    def window(self) -> int:
        return len(self.pre) + len(self.per)

    def is_finite(self) -> bool:
        return not any(self.per)

    def word(self) -> UPWord:
        if self.p != 2:
            raise Unsupported("periodic vectors are handled symbolically over F_2 only")
        return UPWord(self.pre, self.per)

    def as_fnvec(self) -> FnVec:
        if not self.is_finite():
            raise Unsupported("infinite support")
        return FnVec.of({k: v for k, v in enumerate(self.pre)}, self.p)


KINDS = ("interval", "singleton", "pair")


@dataclass(frozen=True)
class IndexedFamily:
    """{x_n : n in index}, x_n = indicator of {1..n}, {n} or {1, n} (n >= 1) over F_2."""

    kind: str
    index: UPWord

    def __post_init__(self):
        if self.kind not in KINDS:
            raise MatroidError(f"unknown family kind {self.kind}")

    def vector(self, n: int) -> UPWord:
        if self.kind == "interval":
            return UPWord.finite(range(1, n + 1))
        if self.kind == "singleton":
            return UPWord.finite([n])
        return UPWord.finite({1, n})


@dataclass
class ThinFamily:
    """Named members (FnVec or PVec) plus optional indexed families over N."""

    p: int = 2
    members: list = field(default_factory=list)  # (name, FnVec | PVec)
    indexed: list = field(default_factory=list)  # IndexedFamily
    coords: tuple | None = None

    def __post_init__(self):
        FieldSpec(self.p)

    @property
    def names(self) -> list[str]:
        return [n for n, _ in self.members]

    def vector(self, name: str):
        for n, v in self.members:
            if n == name:
                return v
        raise KeyError(name)

    def sub(self, names: Iterable[str]) -> "ThinFamily":
        keep = set(names)
        return ThinFamily(self.p, [(n, v) for n, v in self.members if n in keep], [], self.coords)

    def plus(self, name: str, v) -> "ThinFamily":
        return ThinFamily(self.p, self.members + [(name, v)], list(self.indexed), self.coords)

    @property
    def is_finite(self) -> bool:
        return not any(not f.index.is_finite() for f in self.indexed)

    def finite_vectors(self) -> list:
        """All members as FnVec/PVec, expanding finite indexed families."""
        out = [v for _, v in self.members]
        for f in self.indexed:
            if not f.index.is_finite():
                raise Unsupported("infinite indexed family")
            out += [PVec.from_word(f.vector(n)) for n in f.index.elements() if n >= 1]
        return out


def vectors(p: int, rows: Sequence[Sequence[int]], prefix: str = "x") -> ThinFamily:
    """Family of vectors over coordinates 0..d-1 from a list of rows."""
    d = max((len(r) for r in rows), default=0)
    return ThinFamily(p, [(f"{prefix}{i}", FnVec.of(dict(enumerate(r)), p)) for i, r in enumerate(rows)], coords=tuple(range(d)))


# -- finite linear algebra ------------------------------------------------------------


def rank_mod_p(rows: Sequence[dict], p: int) -> int:
    """Rank over F_p of vectors given as {coordinate: value} dicts."""
    pivots: dict = {}  # pivot coordinate -> row, kept free of the other pivot coordinates

    def axpy(dst: dict, c: int, src: dict):
        for b, w in src.items():
            v = (dst.get(b, 0) - c * w) % p
            if v:
                dst[b] = v
            else:
                dst.pop(b, None)

    for row in rows:
        r = {a: v % p for a, v in row.items() if v % p}
        for a, prow in pivots.items():
            if a in r:
                axpy(r, r[a], prow)
        if r:
            a = min(r, key=repr)
            inv = pow(r[a], p - 2, p)
            r = {b: w * inv % p for b, w in r.items()}
            for prow in pivots.values():
                if a in prow:
                    axpy(prow, prow[a], r)
            pivots[a] = r
    return len(pivots)


def _as_dict(v, window: int) -> dict:
    if isinstance(v, FnVec):
        return dict(v.items)
    if isinstance(v, PVec):
        return {k: v[k] for k in range(window) if v[k]}
    if isinstance(v, UPWord):
        return {k: 1 for k in range(window) if v[k]}
    raise TypeError(v)


def _window(vs) -> int:
    pre = max([len(v.pre) for v in vs if isinstance(v, (PVec, UPWord))] + [0])
    per = lcm(*([len(v.per) for v in vs if isinstance(v, (PVec, UPWord))] + [1]))
    return pre + per


def _finite_rank(vs: list, p: int) -> int:
    # finitely many ultimately periodic vectors: a combination vanishes iff it vanishes on the window
    w = _window(vs)
    return rank_mod_p([_as_dict(v, w) for v in vs], p)


# -- structured families over N (F_2) -------------------------------------------------


def _canonical_indexed(X: ThinFamily):
    """Index words per kind with the coincidences {1..1} = {1,1} = {1} and {1,2} = {1..2} folded;
    returns (Wi, Ws, Wp, duplicate) where duplicate reports a repeated member."""
    Wi, Ws, Wp = UPWord.zeros(), UPWord.zeros(), UPWord.zeros()
    dup = False
    nat = ~UPWord.finite([0])
    for f in X.indexed:
        w = f.index & nat
        if f.kind == "interval":
            moved = w & UPWord.finite([1])
            dup |= not (Wi & (w - moved)).is_empty() or not (Ws & moved).is_empty()
            Wi, Ws = Wi | (w - moved), Ws | moved
        elif f.kind == "singleton":
            dup |= not (Ws & w).is_empty()
            Ws = Ws | w
        else:
            one, two = w & UPWord.finite([1]), w & UPWord.finite([2])
            rest = w - one - two
            dup |= not (Ws & one).is_empty() or not (Wi & two).is_empty() or not (Wp & rest).is_empty()
            Ws, Wi, Wp = Ws | one, Wi | two, Wp | rest
    return Wi, Ws, Wp, dup


def _matches_indexed(v: UPWord, Wi, Ws, Wp) -> bool:
    if not v.is_finite():
        return False
    s = sorted(v.elements())
    if len(s) == 1 and s[0] in Ws:
        return True
    if s and s == list(range(1, s[-1] + 1)) and s[-1] in Wi:
        return True
    return len(s) == 2 and s[0] == 1 and s[1] in Wp


def _nat_dependent(Wi: UPWord, Ws: UPWord, Wp: UPWord, pvecs: list[UPWord], forced: UPWord | None = None) -> bool:
    """Is there a non-trivial thin combination of the members summing to 0 (with ``forced`` used
    with coefficient 1 when given)?  Scans coordinates downwards: state = (parity of chosen
    intervals reaching the current coordinate, parity of chosen pairs, anything chosen)."""
    if len(pvecs) > 12:
        raise Unsupported("too many periodic vectors for subset enumeration")
    for r in range(len(pvecs) + 1):
        for pick in combinations(range(len(pvecs)), r):
            Y = forced if forced is not None else UPWord.zeros()
            for k in pick:
                Y = Y ^ pvecs[k]
            chosen = bool(pick) or forced is not None
            bad = Y - Ws
            if not bad.is_finite():
                continue
            max_bad = max(bad.elements(), default=-1)
            words = [Wi, Ws, Wp, Y]
            pre = max(w.preperiod for w in words)
            per = lcm(*(w.period for w in words))
            H = max(pre, max_bad + 1) + 10 * per
            states: set = set()
            for k in range(H, -1, -1):
                if k >= max_bad:
                    states.add((0, 0, chosen))
                nxt = set()
                for pi, pp, ne in states:
                    for si in ((0, 1) if k >= 1 and Wi[k] else (0,)):
                        for sp in ((0, 1) if k >= 2 and Wp[k] else (0,)):
                            npi, npp = pi ^ si, pp ^ sp
                            if k == 0:
                                z = Y[0]
                            elif k == 1:
                                z = Y[1] ^ npi ^ npp
                            else:
                                z = Y[k] ^ npi ^ sp
                            if z and not Ws[k]:
                                continue
                            nxt.add((npi, npp, ne or bool(si or sp)))
                states = nxt
            if any(ne for _, _, ne in states):
                return True
    return False


def _nat_parts(X: ThinFamily):
    if X.p != 2:
        raise Unsupported("infinite families are decided over F_2 only")
    Wi, Ws, Wp, dup = _canonical_indexed(X)
    pv = []
    for _, v in X.members:
        if isinstance(v, FnVec):
            if any(not isinstance(a, int) or a < 0 for a in v.support):
                raise Unsupported("mixing named coordinates with families over N")
            v = PVec.make(0, [v[k] for k in range(max(v.support, default=-1) + 1)], [0])
        w = v.word()
        dup |= _matches_indexed(w, Wi, Ws, Wp) or w in pv
        pv.append(w)
    return Wi, Ws, Wp, pv, dup


# -- structured graphs: incidence automaton ---------------------------------------------


@dataclass(frozen=True)
class StructuredIncidence:
    """Incidence vectors over F_2 of the edges D of a structured graph (coordinates = vertices)."""

    G: StructuredGraph
    D: EdgeSetExpr

    def vector(self, edge) -> FnVec:
        a, b = self.G.endpoints(edge)
        return FnVec.indicator([a, b], 2)


def _incidence_dependent(G: StructuredGraph, D: EdgeSetExpr) -> bool:
    """Exists a non-empty Z within D, finite at every core vertex, with even degree everywhere?

    Levels are scanned upwards; an edge is decided at the level of its higher tail endpoint, and a
    tail vertex is checked once every edge at it has been decided.  Beyond the periodic start the
    transition pattern repeats, so the infinite runs are read off a finite graph on
    (state, phase): accept iff a reachable node with even core parities and something chosen can
    continue forever without using core-tail edges."""
    D = D & G.universe
    tails = list(G.tails)
    delta = G.max_delta
    hubs = sorted({r.vertex for k, r in enumerate(G.coretail) if not D.word(f"coretail:{k}").is_empty()})
    hub_ix = {u: i for i, u in enumerate(hubs)}
    core = list(G.core.vertices)
    finite = sorted(D.finite)
    L = max(D.preperiod, G.universe.preperiod, G.max_finite_level()) + delta + 1
    P = lcm(D.period, G.universe.period)

    owned: dict[int, list] = {}  # level -> edges decided there (for levels < L + P)

    def owned_at(level: int) -> list:
        if level not in owned:
            es = []
            for fam in G.families():
                w = D.word(fam)
                kind = fam.split(":", 1)[0]
                if kind == "rail":
                    if level >= 1 and w[level - 1]:
                        es.append((fam, level - 1))
                elif kind == "cross":
                    d = G.family_delta(fam)
                    i = level if d <= 0 else level - d
                    if i >= 0 and w[i]:
                        es.append((fam, i))
                elif w[level]:
                    es.append((fam, level))
            owned[level] = es
        return owned[level]

    def slot(v, level: int):
        t, lv = v
        return (lv - level + delta) * len(tails) + tails.index(t)  # window levels level-delta .. level

    # initial choices among finite edges
    starts = set()
    for r in range(len(finite) + 1):
        for pick in combinations(finite, r):
            par: dict = {}
            for e in pick:
                for x in G.endpoints(e):
                    par[x] = par.get(x, 0) ^ 1
            if any(par.get(v, 0) for v in core if v not in hub_ix):
                continue
            hub = tuple(par.get(u, 0) for u in hubs)
            extra = tuple(sorted((x, 1) for x, b in par.items() if isinstance(x, tuple) and b))
            starts.add((hub, extra, bool(pick)))

    def step(state, level: int, allow_hub: bool, extra_map) -> list:
        pend, hub, ne = state
        n = len(tails)
        # shift window: drop level-delta-1, add level
        pend = list(pend[n:]) + [0] * n
        for (t, lv), b in extra_map.get(level, ()):
            pend[slot((t, lv), level)] ^= b
        es = owned_at(level) if level < L + P else owned_at(L + (level - L) % P)
        shift = 0 if level < L + P else level - (L + (level - L) % P)
        out = []
        for mask in range(1 << len(es)):
            pe, hb, used_hub = list(pend), list(hub), False
            for j, (fam, i) in enumerate(es):
                if not mask >> j & 1:
                    continue
                a, b = G.endpoints((fam, i + shift))
                for x in (a, b):
                    if isinstance(x, tuple):
                        pe[slot(x, level)] ^= 1
                    else:
                        hb[hub_ix[x]] ^= 1
                        used_hub = True
            if used_hub and not allow_hub:
                continue
            if any(pe[:n]):  # vertices at level - delta are complete
                continue
            out.append((tuple(pe), tuple(hb), ne or bool(mask)))
        return out

    n = len(tails) * (delta + 1)
    frontier = set()
    for hub, extra, ne in starts:
        ex: dict = {}
        for (t, lv), b in extra:
            ex.setdefault(lv, []).append(((t, lv), b))
        cur = {((0,) * n, hub, ne)}
        for level in range(L):
            cur = {s for st in cur for s in step(st, level, True, ex)}
        frontier |= cur
    # periodic part: nodes (state, phase); edges for level L + phase
    nodes = {(s, 0) for s in frontier}
    edges: dict = {}
    todo = list(nodes)
    while todo:
        s, ph = todo.pop()
        succ_all = [(t, (ph + 1) % P) for t in set(step(s, L + ph, True, {}))]
        succ_free = [(t, (ph + 1) % P) for t in set(step(s, L + ph, False, {}))]
        edges[(s, ph)] = (succ_all, succ_free)
        for x in succ_all:
            if x not in nodes:
                nodes.add(x)
                todo.append(x)
    # nodes with an infinite hub-free continuation (greatest fixed point)
    alive = set(nodes)
    changed = True
    while changed:
        changed = False
        for x in list(alive):
            if not any(y in alive for y in edges[x][1]):
                alive.discard(x)
                changed = True
    return any(x in alive and x[0][2] and not any(x[0][1]) for x in nodes)


# -- public operations ------------------------------------------------------------------


def incidence_family(G):
    """One vector per edge with a 1 at each endpoint (a loop gives the zero vector)."""
    if isinstance(G, MultiGraph):
        return ThinFamily(2, [(lab, FnVec.indicator([u, v])) for lab, u, v in G.edges], coords=G.vertices)
    if isinstance(G, StructuredGraph):
        return StructuredIncidence(G, G.universe)
    raise TypeError(G)


def is_thin(X) -> bool:
    """Every coordinate is non-zero in only finitely many members."""
    if isinstance(X, StructuredIncidence):
        return all(X.D.word(f"coretail:{k}").is_finite() for k in range(len(X.G.coretail)))
    if not X.indexed:
        return True
    return all(f.kind == "singleton" or f.index.is_finite() for f in X.indexed)


def thinly_independent(X, require_thin: bool = False) -> bool:
    """No thin sub-family has a non-trivial combination summing to 0.

    With ``require_thin`` the alternative notion is used: X itself must also be thin (this notion
    carries no matroid guarantee)."""
    if require_thin and not is_thin(X):
        return False
    if isinstance(X, StructuredIncidence):
        return not _incidence_dependent(X.G, X.D)
    if X.is_finite:
        vs = X.finite_vectors()
        return _finite_rank(vs, X.p) == len(vs)
    Wi, Ws, Wp, pv, dup = _nat_parts(X)
    if dup:
        return False
    return not _nat_dependent(Wi, Ws, Wp, pv)


def span_membership(y, X: ThinFamily) -> bool:
    """y is a thin combination of members of X."""
    if isinstance(y, UPWord):
        y = PVec.from_word(y)
    if X.is_finite:
        vs = X.finite_vectors()
        return _finite_rank(vs, X.p) == _finite_rank(vs + [y], X.p)
    Wi, Ws, Wp, pv, _ = _nat_parts(X)
    yw = y.word() if isinstance(y, PVec) else PVec.make(0, [y[k] for k in range(max(y.support, default=-1) + 1)], [0]).word()
    if yw.is_empty():
        return True
    # a dependence using y is a combination of the rest equal to y; the rest may itself be dependent
    return _nat_dependent(Wi, Ws, Wp, pv, forced=yw)


def thin_basis_extend(I: Sequence[str], X: ThinFamily, order: Sequence[str] | None = None) -> list[str]:
    """Greedy extension: walking through X - I in the given order, keep x unless it is a
    combination of I and the elements after it.  Postconditions are asserted."""
    if not X.is_finite:
        raise Unsupported("basis extension is implemented for finite families")
    names = X.names
    I = list(I)
    if not set(I) <= set(names):
        raise MatroidError("I must be a subset of X")
    if not thinly_independent(X.sub(I)):
        raise MatroidError(f"I is dependent: rank {_finite_rank([X.vector(n) for n in I], X.p)} < {len(I)}")
    rest = [n for n in (order or names) if n not in I]
    if sorted(rest + I) != sorted(names):
        raise MatroidError("order must enumerate X - I exactly once")
    B = list(I)
    for k, x in enumerate(rest):
        later = [X.vector(n) for n in I + rest[k + 1:]]
        if not span_membership(X.vector(x), ThinFamily(X.p, [(str(j), v) for j, v in enumerate(later)])):
            B.append(x)
    assert thinly_independent(X.sub(B)), "basis extension produced a dependent set"
    assert all(span_membership(X.vector(n), X.sub(B)) for n in names), "basis extension does not span"
    return B


def independent_family(X: ThinFamily) -> SetFamily:
    """All thinly independent subsets of a finite family, as masks over its member names."""
    ground = GroundSet(tuple(X.names))
    vs = [X.vector(n) for n in X.names]
    w = _window(vs)
    rows = [_as_dict(v, w) for v in vs]
    ind = [m for m in ground.all_masks() if rank_mod_p([rows[i] for i in bits(m)], X.p) == bin(m).count("1")]
    return SetFamily(ground, tuple(ind))


def verify_theorem8(E: ThinFamily) -> AxiomReport:
    """The thinly independent subsets of a thin family satisfy the independence axioms."""
    if not is_thin(E):
        raise MatroidError("E is not thin")
    return verify_independence(independent_family(E))


def random_thin_family(rng: random.Random, p: int, max_coords: int = 7, max_vectors: int = 7) -> ThinFamily:
    d = rng.randint(1, max_coords)
    n = rng.randint(1, max_vectors)
    rows = [[rng.randrange(p) if rng.random() < 0.6 else 0 for _ in range(d)] for _ in range(n)]
    return vectors(p, rows)


# -- the (I3) counterexample ------------------------------------------------------------


@dataclass
class DemoReport:
    lines: list[str]
    dependences_ok: bool
    only_one_truncated: dict
    only_one_infinite: dict
    infinite_facts: dict

    def text(self) -> str:
        return "\n".join(self.lines)


def _truncated_statuses(members_I: list[frozenset], N: int) -> dict[int, bool]:
    """For each singleton x = {n} of I', is I + x thinly independent (x in I leaves I unchanged)?"""
    out = {}
    for n in range(1, N + 1):
        x = frozenset([n])
        fam = list(members_I) + ([] if x in members_I else [x])
        rows = [{k: 1 for k in s} for s in fam]
        out[n] = rank_mod_p(rows, 2) == len(rows)
    return out


def i3_counterexample_demo(N: int = 10) -> DemoReport:
    """The family I of sets containing 1 and the singletons I' over N = {1, 2, ...}, read both as
    intervals {1..n} and as pairs {1, n}; decided on the truncation {1..N} and symbolically."""
    if N < 3:
        raise MatroidError("N must be at least 3")
    lines = []
    dep_ok = True
    for n in range(2, N + 1):
        a = UPWord.finite(range(1, n + 1)) ^ UPWord.finite(range(1, n))
        ok = a == UPWord.finite([n])
        dep_ok &= ok
        lines.append(f"interval: chi{{{n}}} = chi{{1..{n}}} + chi{{1..{n - 1}}} {'holds' if ok else 'FAILS'}")
    readings = {
        "interval": [frozenset(range(1, n + 1)) for n in range(1, N + 1)],
        "pair": list(dict.fromkeys(frozenset({1, n}) for n in range(1, N + 1))),
    }
    trunc = {}
    for name, fam in readings.items():
        st = _truncated_statuses(fam, N)
        good = [n for n, v in st.items() if v]
        trunc[name] = good
        lines.append(f"{name}: truncation N={N}: I+x independent exactly for x in {{{', '.join('{%d}' % n for n in good)}}}")
    nat = ~UPWord.finite([0])
    infinite = {}
    facts = {}
    for name in readings:
        I = ThinFamily(2, [], [IndexedFamily(name, nat)])
        Ip = ThinFamily(2, [], [IndexedFamily("singleton", nat)])
        allN = PVec.from_word(nat)
        facts[name] = {
            "I independent": thinly_independent(I),
            "I' independent": thinly_independent(Ip),
            "I + N independent": thinly_independent(I.plus("N", allN)),
            "I' + N independent": thinly_independent(Ip.plus("N", allN)),
            "I thin": is_thin(I),
        }
        good = []
        for n in range(1, N + 1):
            x = UPWord.finite([n])
            if _matches_indexed(x, *_canonical_indexed(I)[:3]) or thinly_independent(I.plus("x", PVec.from_word(x))):
                good.append(n)
        infinite[name] = good
        lines.append(f"{name}: over N: I+x independent for x in {{{', '.join('{%d}' % n for n in good)}}} (n <= {N})")
        lines.append(f"{name}: over N: " + "; ".join(f"{k}: {v}" for k, v in facts[name].items()))
    return DemoReport(lines, dep_ok, trunc, infinite, facts)


# -- algebraic cycles versus thin sums --------------------------------------------------


def mac_thin_equivalence(G, samples: list[EdgeSetExpr] | None = None, seed: int = 0) -> bool:
    """Thin independence of incidence vectors agrees with independence in M_AC: exhaustively for
    a finite multigraph, on the standard sample for a structured graph."""
    if isinstance(G, MultiGraph):
        X = incidence_family(G)
        fam = independent_family(X)
        ground = GroundSet(tuple(X.names))
        return all((m in fam) == G.acyclic(m) for m in ground.all_masks())
    from .infinite.oracles import mac_oracle, standard_sample

    mac = mac_oracle(G)
    for D in samples if samples is not None else standard_sample(G, seed):
        if thinly_independent(StructuredIncidence(G, D)) != mac.is_independent(D):
            return False
    return True
