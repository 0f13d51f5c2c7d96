"""Finitely presented infinite graphs: a finite core, one-way infinite tails with periodic
cross and core-to-tail edge rules, and a finite patch of added or removed edges.

Vertices are core labels (``str``) or tail vertices ``(tail, i)``.  Edges are finite labels
(core and patch edges) or ``(family, i)`` pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ..core import MatroidError
from ..graphs import MultiGraph
from .words import EdgeSetExpr, UPWord, edge_name


@dataclass(frozen=True)
class CrossRule:
    tail: str
    tail2: str
    delta: int
    start: int
    period: int
    residues: tuple[int, ...]


@dataclass(frozen=True)
class CoreTailRule:
    vertex: str
    tail: str
    start: int
    period: int
    residues: tuple[int, ...]


@dataclass(frozen=True)
class PatchEdge:
    label: str
    u: object
    v: object


def vertex_name(v) -> str:
    return f"{v[0]}.{v[1]}" if isinstance(v, tuple) else str(v)


def parse_vertex(text: str):
    if "." in text:
        t, i = text.rsplit(".", 1)
        if i.isdigit():
            return (t, int(i))
    return text


@dataclass(frozen=True)
class StructuredGraph:
    core: MultiGraph
    tails: tuple[str, ...] = ()
    cross: tuple[CrossRule, ...] = ()
    coretail: tuple[CoreTailRule, ...] = ()
    added: tuple[PatchEdge, ...] = ()
    removed: tuple = ()  # finite labels or (family, i)
    name: str = ""
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        for f in ("tails", "cross", "coretail", "added", "removed"):
            object.__setattr__(self, f, tuple(getattr(self, f)))
        if len(set(self.tails)) != len(self.tails):
            raise MatroidError("duplicate tail names")
        core_v = set(self.core.vertices)
        for t in self.tails:
            if not t or t[0] == "#" or any(c in t for c in ".: "):
                raise MatroidError(f"bad tail name {t!r}: must be non-empty, not start with '#', no '.', ':' or spaces")
        if core_v & set(self.tails):
            raise MatroidError("tail names must differ from core vertex labels")
        for r in self.cross:
            if r.tail not in self.tails or r.tail2 not in self.tails:
                raise MatroidError(f"cross rule refers to unknown tail: {r}")
            if r.period < 1 or r.start < max(0, -r.delta):
                raise MatroidError(f"cross rule needs period >= 1 and start >= max(0, -delta): {r}")
            if r.tail == r.tail2 and r.delta == 0:
                raise MatroidError("cross rule with delta 0 on one tail would generate loops")
        for r in self.coretail:
            if r.vertex not in core_v or r.tail not in self.tails:
                raise MatroidError(f"core-tail rule refers to unknown vertex or tail: {r}")
            if r.period < 1:
                raise MatroidError("core-tail rule needs period >= 1")
        labels = {e[0] for e in self.core.edges}
        for p in self.added:
            if p.label in labels:
                raise MatroidError(f"duplicate edge label {p.label}")
            labels.add(p.label)
            for x in (p.u, p.v):
                if not self.has_vertex(x):
                    raise MatroidError(f"patch edge {p.label} has unknown endpoint {x}")
        for r in self.removed:
            if isinstance(r, tuple):
                if r[0] not in self.families():
                    raise MatroidError(f"cannot remove {r}: unknown family")
            elif r not in labels:
                raise MatroidError(f"cannot remove unknown edge {r}")

    # -- structure ------------------------------------------------------------

    def has_vertex(self, x) -> bool:
        if isinstance(x, tuple):
            return x[0] in self.tails and isinstance(x[1], int) and x[1] >= 0
        return x in self.core.vertices

    def families(self) -> list[str]:
        return (
            [f"rail:{t}" for t in self.tails]
            + [f"cross:{k}" for k in range(len(self.cross))]
            + [f"coretail:{k}" for k in range(len(self.coretail))]
        )

    def rule_word(self, family: str) -> UPWord:
        kind, key = family.split(":", 1)
        if kind == "rail":
            w = UPWord.ones()
        elif kind == "cross":
            r = self.cross[int(key)]
            w = UPWord.residues(r.start, r.period, r.residues)
        else:
            r = self.coretail[int(key)]
            w = UPWord.residues(r.start, r.period, r.residues)
        gone = [e[1] for e in self.removed if isinstance(e, tuple) and e[0] == family]
        return w - UPWord.finite(gone) if gone else w

    def finite_labels(self) -> frozenset:
        labs = {e[0] for e in self.core.edges} | {p.label for p in self.added}
        return frozenset(labs - {r for r in self.removed if not isinstance(r, tuple)})

    @property
    def universe(self) -> EdgeSetExpr:
        if "universe" not in self._cache:
            self._cache["universe"] = EdgeSetExpr(self.finite_labels(), {f: self.rule_word(f) for f in self.families()})
        return self._cache["universe"]

    def endpoints(self, edge):
        if isinstance(edge, tuple):
            fam, i = edge
            kind, key = fam.split(":", 1)
            if kind == "rail":
                return (key, i), (key, i + 1)
            if kind == "cross":
                r = self.cross[int(key)]
                return (r.tail, i), (r.tail2, i + r.delta)
            r = self.coretail[int(key)]
            return r.vertex, (r.tail, i)
        for lab, u, v in self.core.edges:
            if lab == edge:
                return u, v
        for p in self.added:
            if p.label == edge:
                return p.u, p.v
        raise MatroidError(f"unknown edge {edge_name(edge)}")

    def family_delta(self, family: str) -> int:
        kind, key = family.split(":", 1)
        if kind == "rail":
            return 1
        if kind == "cross":
            return self.cross[int(key)].delta
        return 0

    @property
    def max_delta(self) -> int:
        return max([1] + [abs(r.delta) for r in self.cross])

    def incident(self, v) -> list:
        """All edges of G at vertex v (core vertices with a core-tail rule: only the rule families are
        reported, since they are infinite)."""
        out = []
        E = self.universe
        for lab in sorted(E.finite):
            a, b = self.endpoints(lab)
            if a == v:
                out.append(lab)
            if b == v:
                out.append(lab)
        if isinstance(v, tuple):
            t, i = v
            for fam in self.families():
                kind, key = fam.split(":", 1)
                w = E.word(fam)
                if kind == "rail" and key == t:
                    for j in (i - 1, i):
                        if j >= 0 and j in w:
                            out.append((fam, j))
                elif kind == "cross":
                    r = self.cross[int(key)]
                    if r.tail == t and i in w:
                        out.append((fam, i))
                    if r.tail2 == t and i - r.delta >= 0 and (i - r.delta) in w:
                        out.append((fam, i - r.delta))
                elif kind == "coretail":
                    r = self.coretail[int(key)]
                    if r.tail == t and i in w:
                        out.append((fam, i))
        return out

    def hub_families(self, u) -> list[str]:
        return [f"coretail:{k}" for k, r in enumerate(self.coretail) if r.vertex == u]

    def hubs(self) -> list[str]:
        """Core vertices joined to some tail by infinitely many edges."""
        E = self.universe
        return [u for u in self.core.vertices if any(not E.word(f).is_finite() for f in self.hub_families(u))]

    def max_finite_level(self) -> int:
        """1 + largest tail level mentioned by a patch edge."""
        lv = 0
        for p in self.added:
            for x in (p.u, p.v):
                if isinstance(x, tuple):
                    lv = max(lv, x[1] + 1)
        return lv

    def with_name(self, name: str) -> "StructuredGraph":
        return StructuredGraph(self.core, self.tails, self.cross, self.coretail, self.added, self.removed, name)

    def complement(self, D: EdgeSetExpr) -> EdgeSetExpr:
        return self.universe - D

    def check_subset(self, D: EdgeSetExpr) -> None:
        extra = D - self.universe
        if not extra.is_empty():
            raise MatroidError(f"edge set is not contained in E(G): {sorted(map(edge_name, extra.edges(8)))[:5]}")

    @property
    def is_finite(self) -> bool:
        return not self.tails


def finite_embed(G: MultiGraph, name: str = "") -> StructuredGraph:
    return StructuredGraph(G, name=name)


def expr(finite: Iterable = (), **words: UPWord) -> EdgeSetExpr:
    """Convenience constructor: ``expr(['e1'], **{'rail:a': UPWord.ones()})``."""
    return EdgeSetExpr(frozenset(finite), dict(words))
