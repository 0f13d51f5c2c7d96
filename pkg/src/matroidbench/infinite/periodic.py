"""Exact structure of the subgraph (V, D) of a structured graph for a symbolic edge set D.

Beyond a level L every word involved is periodic with a common period P (chosen >= the largest
cross-rule offset), so the tail region above L is the one-sided lift of a finite quotient graph Q
whose vertices are (tail, residue) pairs and whose edges carry a voltage in {-1, 0, 1}: the block
difference of their endpoints.  For a connected piece Qc of Q let g be the gcd of its cycle voltages.

* g = 0: the lift is a sequence of finite copies of Qc, one per block offset.
* g > 0: far enough up, the lift is g infinite components (classes), vertex (q, b) lying in class
  (b - pot(q)) mod g.  Every vertex at block >= 3|Qc| lies in an infinite component, because a
  closed walk of length <= 3|Qc| with positive voltage exists at every vertex.

The analysis keeps an explicit window of K = 3 max|Qc| + 3 blocks (g = 0 pieces are kept as whole
copies), joins the top block of each g > 0 class to a virtual node ``("#V", c, cls)`` standing for the
infinite remainder, and represents the far copies of a g = 0 piece by a node ``("#C", c)``.  Hub
vertices (core vertices with infinitely many edges into a tail) attach to these virtual nodes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm

from ..graphs import UnionFind
from .sgraph import StructuredGraph
from .words import EdgeSetExpr

INF = float("inf")


@dataclass
class QPiece:
    index: int
    vertices: list  # (tail, residue)
    edges: list  # (q1, q2, voltage)
    pot: dict
    g: int
    beta: int
    end: int = -1

    @property
    def infinite(self) -> bool:
        return self.g > 0


@dataclass
class EndInfo:
    index: int
    tails: frozenset
    hubs: frozenset  # core vertices indistinguishable from this end


def _quotient(G: StructuredGraph, D: EdgeSetExpr, L: int, P: int):
    """Q-vertices, Q-edges (with voltages) and periodic hub attachments of D above level L."""
    qv = [(t, r) for t in G.tails for r in range(P)]
    qe = []
    attach: dict[str, set] = {}
    for fam in G.families():
        w = D.word(fam)
        if w.is_empty():
            continue
        kind = fam.split(":", 1)[0]
        if kind == "coretail":
            r = G.coretail[int(fam.split(":")[1])]
            for i in range(L, L + P):
                if w[i]:
                    attach.setdefault(r.vertex, set()).add((r.tail, (i - L) % P))
            continue
        m = max(0, -G.family_delta(fam))
        for i in range(L + m, L + m + P):
            if w[i]:
                (t1, l1), (t2, l2) = G.endpoints((fam, i))
                qe.append(((t1, (l1 - L) % P), (t2, (l2 - L) % P), (l2 - L) // P - (l1 - L) // P))
    return qv, qe, attach


def _pieces(qv, qe) -> list[QPiece]:
    adj: dict = {v: [] for v in qv}
    for k, (a, b, v) in enumerate(qe):
        adj[a].append((b, v, k))
        adj[b].append((a, -v, k))
    seen: dict = {}
    out = []
    for root in qv:
        if root in seen:
            continue
        pot = {root: 0}
        order = [root]
        tree_edges = set()
        stack = [root]
        while stack:
            x = stack.pop()
            for y, v, k in adj[x]:
                if y not in pot:
                    pot[y] = pot[x] + v
                    tree_edges.add(k)
                    order.append(y)
                    stack.append(y)
        vs = set(order)
        es = [(a, b, v) for (a, b, v) in qe if a in vs]
        g = 0
        for k, (a, b, v) in enumerate(qe):
            if a in vs and k not in tree_edges:
                g = gcd(g, abs(pot[a] + v - pot[b]))
        if g == 0:
            lo = min(pot.values())
            pot = {x: p - lo for x, p in pot.items()}
        for x in order:
            seen[x] = len(out)
        out.append(QPiece(len(out), order, es, pot, g, len(es) - len(vs) + 1))
    return out


def end_structure(G: StructuredGraph) -> tuple[dict, list[EndInfo]]:
    """Edge-ends of G: tails are merged when they share a component of the quotient of E(G)
    (infinitely many edge-disjoint connections) or a hub joined infinitely often to both."""
    if "ends" in G._cache:
        return G._cache["ends"]
    E = G.universe
    L = max(E.preperiod, G.max_finite_level())
    P = E.period * -(-G.max_delta // E.period)
    qv, qe, attach = _quotient(G, E, L, P)
    uf = UnionFind(G.tails)
    for a, b, _ in qe:
        uf.union(a[0], b[0])
    for u, qs in attach.items():
        ts = sorted({q[0] for q in qs})
        for t in ts[1:]:
            uf.union(ts[0], t)
    groups = {}
    for t in G.tails:
        groups.setdefault(uf.find(t), []).append(t)
    ends = []
    tail_end = {}
    for k, ts in enumerate(sorted(groups.values(), key=lambda ts: G.tails.index(ts[0]))):
        hubs = frozenset(u for u, qs in attach.items() if any(q[0] in ts for q in qs))
        ends.append(EndInfo(k, frozenset(ts), hubs))
        for t in ts:
            tail_end[t] = k
    G._cache["ends"] = (tail_end, ends)
    return tail_end, ends


@dataclass
class Analysis:
    G: StructuredGraph
    D: EdgeSetExpr
    spanning: bool
    L: int = 0
    P: int = 1
    K: int = 0
    pieces: list = field(default_factory=list)
    piece_of: dict = field(default_factory=dict)
    attach: dict = field(default_factory=dict)
    uf: UnionFind = None
    present: set = field(default_factory=set)
    window_cycle: bool = False
    free_pieces: list = field(default_factory=list)
    explicit_edges: list = field(default_factory=list)

    # -- construction -------------------------------------------------------

    def __post_init__(self):
        G, D = self.G, self.D & self.G.universe
        self.D = D
        E = G.universe
        self.L = L = max(E.preperiod, D.preperiod, G.max_finite_level())
        P0 = lcm(E.period, D.period)
        self.P = P = P0 * -(-G.max_delta // P0)
        qv, qe, self.attach = _quotient(G, D, L, P)
        self.pieces = _pieces(qv, qe)
        self.piece_of = {q: p.index for p in self.pieces for q in p.vertices}
        tail_end, self.ends = end_structure(G)
        for p in self.pieces:
            p.end = tail_end[p.vertices[0][0]]
        self.tail_end = tail_end
        self.K = 3 * max([len(p.vertices) for p in self.pieces] + [0]) + 3
        self.hub_ends = {u: e.index for e in self.ends for u in e.hubs}
        self._build()

    def level_block(self, level: int) -> tuple[int, int]:
        return divmod(level - self.L, self.P)

    def explicit(self, v) -> bool:
        if not isinstance(v, tuple):
            return True
        t, lv = v
        if lv < self.L:
            return True
        b, r = self.level_block(lv)
        p = self.pieces[self.piece_of[(t, r)]]
        return b < self.K + (0 if p.infinite else p.pot[(t, r)])

    def top_level(self) -> int:
        # one past the highest explicit tail level
        extra = max([max(p.pot.values()) for p in self.pieces if not p.infinite] + [0])
        return self.L + (self.K + extra) * self.P

    def _build(self):
        G, D, L, P = self.G, self.D, self.L, self.P
        uf = UnionFind()
        self.uf = uf
        top = self.top_level()
        vertices = list(G.core.vertices) + [(t, i) for t in G.tails for i in range(top) if self.explicit((t, i))]
        for v in vertices:
            uf.add(v)
        edges = []
        for lab in sorted(D.finite):
            edges.append((lab,) + tuple(G.endpoints(lab)))
        for fam in G.families():
            w = D.word(fam)
            if w.is_empty():
                continue
            for i in range(top + G.max_delta):
                if not w[i]:
                    continue
                a, b = G.endpoints((fam, i))
                if self.explicit(a) and self.explicit(b):
                    edges.append(((fam, i), a, b))
        self.explicit_edges = edges
        touched = set()
        for e, a, b in edges:
            touched.add(a)
            touched.add(b)
            if not uf.union(a, b):
                self.window_cycle = True
        # periodic vertices whose edges leave the window still count as incident to D
        qdeg = {q: 0 for q in self.piece_of}
        for p in self.pieces:
            for a, b, _ in p.edges:
                qdeg[a] += 1
                qdeg[b] += 1
        hubbed = {q for qs in self.attach.values() for q in qs}
        for v in vertices:
            if isinstance(v, tuple) and v[1] >= L:
                q = (v[0], (v[1] - L) % P)
                if qdeg[q] or q in hubbed:
                    touched.add(v)
        for u in self.attach:
            touched.add(u)
        # virtual nodes
        for p in self.pieces:
            if p.infinite:
                for c in range(p.g):
                    uf.add(("#V", p.index, c))
                    touched.add(("#V", p.index, c))
                b = self.K - 1
                for q in p.vertices:
                    v = (q[0], L + b * P + q[1])
                    uf.union(v, ("#V", p.index, (b - p.pot[q]) % p.g))
            else:
                hubs = [u for u, qs in self.attach.items() if any(self.piece_of[q] == p.index for q in qs)]
                has_edges = bool(p.edges)
                if self.spanning or has_edges or hubs:
                    uf.add(("#C", p.index))
                    touched.add(("#C", p.index))
                    if not hubs:
                        self.free_pieces.append(p.index)
        for u, qs in self.attach.items():
            for q in qs:
                p = self.pieces[self.piece_of[q]]
                if p.infinite:
                    for c in range(p.g):
                        uf.union(u, ("#V", p.index, c))
                else:
                    uf.union(u, ("#C", p.index))
        if self.spanning:
            self.present = set(uf.parent)
        else:
            self.present = touched

    # -- derived facts ------------------------------------------------------

    @property
    def has_finite_cycle(self) -> bool:
        if self.window_cycle:
            return True
        for p in self.pieces:
            if p.beta >= 2 or (p.beta >= 1 and p.g == 0):
                return True
        per_copy: dict[int, int] = {}
        for u, qs in self.attach.items():
            for q in qs:
                p = self.pieces[self.piece_of[q]]
                if p.infinite:
                    return True
                per_copy[p.index] = per_copy.get(p.index, 0) + 1
        return any(n >= 2 for n in per_copy.values())

    def components(self) -> dict:
        """root -> list of present nodes."""
        out: dict = {}
        for x in self.present:
            out.setdefault(self.uf.find(x), []).append(x)
        return out

    def rays(self, root) -> list:
        """Virtual ray classes (one ray-end each) in the component with this root."""
        return [x for x in self.components().get(root, []) if isinstance(x, tuple) and len(x) == 3 and x[0] == "#V"]

    def comp_rays(self) -> dict:
        out: dict = {}
        for x in self.present:
            if isinstance(x, tuple) and len(x) == 3 and x[0] == "#V":
                out.setdefault(self.uf.find(x), []).append(x)
        return out

    def comp_of(self, v):
        """Component root of any vertex of G (far tail vertices are mapped through the virtual nodes)."""
        if self.explicit(v):
            return self.uf.find(v)
        t, lv = v
        b, r = self.level_block(lv)
        q = (t, r)
        p = self.pieces[self.piece_of[q]]
        if p.infinite:
            return self.uf.find(("#V", p.index, (b - p.pot[q]) % p.g))
        if p.index in self.free_pieces:
            return ("#free", p.index, b - p.pot[q])
        return self.uf.find(("#C", p.index))

    def present_ends(self) -> set[int]:
        if self.spanning:
            return {e.index for e in self.ends}
        out = set()
        for x in self.present:
            if isinstance(x, tuple) and x and x[0] in ("#V", "#C") and len(x) in (2, 3) and isinstance(x[1], int):
                out.add(self.pieces[x[1]].end)
            elif not isinstance(x, tuple) and x in self.hub_ends:
                out.add(self.hub_ends[x])
        return out

    def link_structure(self) -> UnionFind:
        """Components joined to the ends they accumulate at or whose hubs they contain."""
        if hasattr(self, "_links"):
            return self._links
        links = UnionFind()
        ends = self.present_ends()
        for x in self.present:
            root = self.uf.find(x)
            links.add(("comp", root))
            if isinstance(x, tuple) and x and x[0] in ("#V", "#C") and len(x) in (2, 3) and isinstance(x[1], int):
                if x[0] == "#C" and x[1] in self.free_pieces:
                    continue
                links.union(("comp", root), ("end", self.pieces[x[1]].end))
            elif not isinstance(x, tuple) and x in self.hub_ends and self.hub_ends[x] in ends:
                links.union(("comp", root), ("end", self.hub_ends[x]))
        for e in ends:
            links.add(("end", e))
        self._links = links
        return links

    def linked(self, x, y) -> bool:
        links = self.link_structure()
        rx, ry = self.comp_of(x), self.comp_of(y)
        if rx == ry:
            return True
        if isinstance(rx, tuple) and rx and rx[0] == "#free" or isinstance(ry, tuple) and ry and ry[0] == "#free":
            return False
        return links.find(("comp", rx)) == links.find(("comp", ry))

    def closure_connected(self) -> bool:
        if self.free_pieces:
            return False
        links = self.link_structure()
        roots = {links.find(x) for x in links.parent}
        return len(roots) <= 1

    def graph_component_count(self) -> float:
        if self.free_pieces:
            return INF
        return len({self.uf.find(x) for x in self.present})

    def degree(self, v) -> float:
        G, D = self.G, self.D
        if isinstance(v, tuple):
            return sum(1 for e in G.incident(v) if D.contains(e))
        n = 0
        for lab in D.finite:
            a, b = G.endpoints(lab)
            n += (a == v) + (b == v)
        for fam in G.hub_families(v):
            w = D.word(fam)
            if not w.is_finite():
                return INF
            n += w.cardinality()
        return n

    def check_levels(self) -> range:
        """Tail levels whose vertex degrees represent all tail vertices."""
        return range(self.L + 2 * self.P)

    def rep_limit(self) -> int:
        gl = lcm(*([p.g for p in self.pieces if p.g] + [1]))
        return self.top_level() + (gl + 2) * self.P + self.G.max_delta


def analyse(G: StructuredGraph, D: EdgeSetExpr, spanning: bool = False) -> Analysis:
    return Analysis(G, D, spanning)


def representative_edges(G: StructuredGraph, D: EdgeSetExpr, limit: int) -> list:
    """Finite edges of D plus every family edge of D with index below ``limit``."""
    D = D & G.universe
    out: list = sorted(D.finite)
    for fam, w in D.words.items():
        out.extend((fam, i) for i in range(limit) if w[i])
    return out
