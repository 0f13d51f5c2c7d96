"""Finite multigraphs with their cycle and bond matroids."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .core import FiniteMatroid, GroundSet, MatroidError, SetFamily, bits, dual


class UnionFind:
    def __init__(self, items: Iterable = ()):
        self.parent = {}
        for x in items:
            self.parent[x] = x

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        self.add(x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True

    def groups(self) -> dict:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


@dataclass(frozen=True)
class MultiGraph:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]  # (label, u, v)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if len(set(self.vertices)) != len(self.vertices):
            raise MatroidError("duplicate vertex labels")
        vs = set(self.vertices)
        labels = [e[0] for e in self.edges]
        if len(set(labels)) != len(labels):
            raise MatroidError("duplicate edge labels")
        for lab, u, v in self.edges:
            if u not in vs or v not in vs:
                raise MatroidError(f"edge {lab} has an endpoint outside the vertex set")

    @classmethod
    def of(cls, edges: Sequence[tuple[str, str, str]], vertices: Sequence[str] = ()) -> "MultiGraph":
        vs = list(vertices)
        for _, u, v in edges:
            for x in (u, v):
                if x not in vs:
                    vs.append(x)
        return cls(tuple(vs), tuple(edges))

    @property
    def ground(self) -> GroundSet:
        return GroundSet(tuple(e[0] for e in self.edges))

    def components(self, edge_mask: int | None = None) -> list[set[str]]:
        uf = UnionFind(self.vertices)
        for i, (_, u, v) in enumerate(self.edges):
            if edge_mask is None or edge_mask >> i & 1:
                uf.union(u, v)
        return [set(g) for g in uf.groups().values()]

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def acyclic(self, edge_mask: int) -> bool:
        uf = UnionFind(self.vertices)
        for i in bits(edge_mask):
            _, u, v = self.edges[i]
            if not uf.union(u, v):
                return False
        return True

    def cut(self, side: Iterable[str]) -> "Cut":
        a = frozenset(side)
        b = frozenset(self.vertices) - a
        crossing = sum(1 << i for i, (_, u, v) in enumerate(self.edges) if (u in a) != (v in a))
        return Cut((a, b), crossing)

    def delete_edges(self, mask: int) -> "MultiGraph":
        return MultiGraph(self.vertices, tuple(e for i, e in enumerate(self.edges) if not mask >> i & 1))

    def contract_edges(self, mask: int) -> "MultiGraph":
        uf = UnionFind(self.vertices)
        for i in bits(mask):
            _, u, v = self.edges[i]
            uf.union(u, v)
        # representative: first vertex of each class in vertex order
        rep = {}
        for x in self.vertices:
            rep.setdefault(uf.find(x), x)
        name = {x: rep[uf.find(x)] for x in self.vertices}
        vs = tuple(dict.fromkeys(name[x] for x in self.vertices))
        es = tuple((lab, name[u], name[v]) for i, (lab, u, v) in enumerate(self.edges) if not mask >> i & 1)
        return MultiGraph(vs, es)


@dataclass(frozen=True)
class Cut:
    sides: tuple[frozenset, frozenset]
    crossing: int


def finite_cycle_matroid(G: MultiGraph) -> FiniteMatroid:
    ground = G.ground
    ind = [m for m in ground.all_masks() if G.acyclic(m)]
    return FiniteMatroid(ground, SetFamily(ground, tuple(ind)), validated=False)


def cuts(G: MultiGraph) -> set[int]:
    vs = G.vertices
    out = set()
    for pick in range(1 << len(vs)):
        side = [vs[i] for i in range(len(vs)) if pick >> i & 1]
        out.add(G.cut(side).crossing)
    out.discard(0)
    return out


def bonds(G: MultiGraph) -> SetFamily:
    """Minimal non-empty cuts, by exhaustive scan of vertex bipartitions."""
    cs = cuts(G)
    minimal = [c for c in cs if not any(d != c and d & c == d for d in cs)]
    return SetFamily(G.ground, tuple(minimal))


def is_bond(G: MultiGraph, F: int | Iterable[str]) -> bool:
    """F is a cut whose two sides induce connected subgraphs within one component of G."""
    f = G.ground.mask(F)
    if f == 0:
        return False
    for comp in G.components():
        inside = sum(1 << i for i, (_, u, v) in enumerate(G.edges) if u in comp)
        if f & ~inside:
            continue
        sub_vertices = [v for v in G.vertices if v in comp]
        rest = MultiGraph(tuple(sub_vertices), tuple(e for i, e in enumerate(G.edges) if inside >> i & 1 and not f >> i & 1))
        parts = rest.components()
        if len(parts) != 2:
            return False
        a = parts[0]
        return G.cut(a).crossing & inside == f
    return False


def finite_bond_matroid(G: MultiGraph) -> FiniteMatroid:
    return FiniteMatroid.from_circuits(G.ground, bonds(G).members)


def spanning_trees(G: MultiGraph) -> list[int]:
    """Bases of the cycle matroid: maximal acyclic edge sets (a spanning tree in every component)."""
    return list(finite_cycle_matroid(G).bases())


def transversal_cocircuits(G: MultiGraph) -> SetFamily:
    """Minimal edge sets meeting every spanning tree, found by direct search."""
    trees = spanning_trees(G)
    hitting = [m for m in G.ground.all_masks() if m and all(m & t for t in trees)]
    return SetFamily(G.ground, tuple(m for m in hitting if not any(h != m and h & m == h for h in hitting)))


def verify_theorem1(G: MultiGraph) -> bool:
    """Cocircuits of the cycle matroid = bonds = minimal spanning-tree transversals."""
    M = finite_cycle_matroid(G)
    co = dual(M).circuits().as_set
    return co == bonds(G).as_set == transversal_cocircuits(G).as_set


# -- small graph constructors and the exhaustive generator ------------------


def triangle() -> MultiGraph:
    return MultiGraph.of([("e1", "x", "y"), ("e2", "y", "z"), ("e3", "z", "x")])


def complete_graph(n: int) -> MultiGraph:
    vs = [f"v{i}" for i in range(n)]
    es = [(f"e{i}{j}", vs[i], vs[j]) for i, j in combinations(range(n), 2)]
    return MultiGraph(tuple(vs), tuple(es))


def path_graph(n: int) -> MultiGraph:
    vs = [f"v{i}" for i in range(n)]
    return MultiGraph(tuple(vs), tuple((f"p{i}", vs[i], vs[i + 1]) for i in range(n - 1)))


def _canon(nv: int, edges: tuple[tuple[int, int], ...]) -> tuple:
    from itertools import permutations

    best = None
    for perm in permutations(range(nv)):
        es = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or es < best:
            best = es
    return (nv, best)


def connected_multigraphs(max_edges: int) -> list[MultiGraph]:
    """All connected multigraphs (loops and parallels allowed) with at most ``max_edges`` edges,
    up to isomorphism, plus the single vertex.  Built by adding one edge at a time:
    between existing vertices, as a loop, or to a new vertex."""
    level = {_canon(1, ())}
    seen = set(level)
    for _ in range(max_edges):
        nxt = set()
        for nv, es in level:
            options = [(u, v) for u in range(nv) for v in range(u, nv)] + [(u, nv) for u in range(nv)]
            for u, v in options:
                n2 = max(nv, v + 1)
                key = _canon(n2, es + ((u, v),))
                if key not in seen:
                    seen.add(key)
                    nxt.add(key)
        level = nxt
    out = []
    for nv, es in sorted(seen, key=lambda k: (len(k[1]), k)):
        vs = tuple(f"v{i}" for i in range(nv))
        out.append(MultiGraph(vs, tuple((f"e{j}", vs[u], vs[v]) for j, (u, v) in enumerate(es))))
    return out


def all_multigraphs(max_edges: int, max_vertices: int = 4) -> list[MultiGraph]:
    """Connected ones plus disjoint unions of two connected pieces (for the direct-sum rules)."""
    conn = connected_multigraphs(max_edges)
    out = list(conn)
    for a in conn:
        for b in conn:
            if len(a.edges) + len(b.edges) <= max_edges and len(a.vertices) + len(b.vertices) <= max_vertices and a.edges and b.edges:
                vs = tuple(f"a{v}" for v in a.vertices) + tuple(f"b{v}" for v in b.vertices)
                es = tuple((f"a{l}", f"a{u}", f"a{v}") for l, u, v in a.edges) + tuple((f"b{l}", f"b{u}", f"b{v}") for l, u, v in b.edges)
                out.append(MultiGraph(vs, es))
    return out
