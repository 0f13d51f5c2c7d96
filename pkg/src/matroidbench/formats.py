"""Plain-text formats with parse/print round-trips.

matroid::

    matroid 3
    elements: a b c
    bases:            (or independents: / circuits:)
    a b
    -                 (the empty set)

Closure tables use ``closure:`` with lines ``a -> a b`` and rank tables ``rank:`` with lines
``a b | a = 1`` (every nested pair, ``-`` for the empty set).

graph::

    graph
    vertices: x y z
    edge e1 x y

sgraph: ``sgraph`` then the graph block, ``tail <name>``,
``cross <t> <t'> <delta> <start> <period> <r1,r2>``, ``coretail <u> <t> <start> <period> <r1,..>``,
``patch + <label> <u> <v>`` and ``patch - <edge>``; tail vertices are written ``t.i``.

expr: ``finite: <edges>`` and ``word <family> <start> <preperiod-bits> <period-bits>``.

thinfam: ``thinfam p=<prime>``, ``vec <name> <coord:value ...>``,
``pvec <name> <start> <preperiod> <period>``, an optional ``coords: <a ...>`` line and ``family <interval|singleton|pair> <start> <pre> <per>``.
"""

from __future__ import annotations

import re

from .axioms import ClosureTable, RankInput, kind_of
from .core import GroundSet, MatroidError, RelRankTable, SetFamily, nested_pairs
from .graphs import MultiGraph
from .infinite.sgraph import CoreTailRule, CrossRule, PatchEdge, StructuredGraph, parse_vertex, vertex_name
from .infinite.words import EdgeSetExpr, UPWord, edge_name, parse_edge_name
from .thinsums import KINDS as FAMILY_KINDS
from .thinsums import FnVec, IndexedFamily, PVec, ThinFamily


class ParseError(MatroidError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(f"line {line}, column {col}: {message}" if line else message)
        self.line = line
        self.col = col


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].rstrip() if not raw.lstrip().startswith("#") else ""
        if s.strip():
            yield no, s.strip(), len(raw) - len(raw.lstrip()) + 1


def _set_text(ground: GroundSet, m: int) -> str:
    return " ".join(ground.labels(m)) or "-"


def _parse_set(ground: GroundSet, s: str, no: int, col: int) -> int:
    if s.strip() == "-":
        return 0
    m = 0
    for tok in re.finditer(r"\S+", s):
        if tok.group() not in ground.elements:
            raise ParseError(f"label {tok.group()!r} is not in the ground set", no, col + tok.start())
        m |= ground.mask([tok.group()])
    return m


# -- matroid ------------------------------------------------------------------------------


def parse_matroid(text: str):
    rows = list(_lines(text))
    if not rows or not rows[0][1].startswith("matroid"):
        raise ParseError("expected header 'matroid <n>'", rows[0][0] if rows else 1, 1)
    no, head, col = rows[0]
    parts = head.split()
    if len(parts) != 2 or not parts[1].isdigit():
        raise ParseError("header must be 'matroid <n>'", no, col)
    n = int(parts[1])
    if len(rows) < 2 or not rows[1][1].startswith("elements:"):
        raise ParseError("expected 'elements:' line", rows[1][0] if len(rows) > 1 else no + 1, 1)
    labels = tuple(rows[1][1][len("elements:"):].split())
    if len(labels) != n:
        raise ParseError(f"header says {n} elements, found {len(labels)}", rows[1][0], 1)
    if len(set(labels)) != n:
        raise ParseError("duplicate element labels", rows[1][0], 1)
    ground = GroundSet(labels)
    if len(rows) < 3 or rows[2][1].rstrip(":") not in ("independents", "bases", "circuits", "closure", "rank") or not rows[2][1].endswith(":"):
        raise ParseError("expected one of 'independents:', 'bases:', 'circuits:', 'closure:', 'rank:'", rows[2][0] if len(rows) > 2 else rows[1][0] + 1, 1)
    kind = rows[2][1][:-1]
    body = rows[3:]
    if kind == "closure":
        table = {}
        for no, s, col in body:
            if "->" not in s:
                raise ParseError("closure lines look like 'a b -> a b c'", no, col)
            left, right = s.split("->", 1)
            table[_parse_set(ground, left, no, col)] = _parse_set(ground, right, no, col + len(left) + 2)
        try:
            return ClosureTable(ground, table)
        except MatroidError as exc:
            raise ParseError(str(exc), body[-1][0] if body else rows[2][0], 1) from None
    if kind == "rank":
        entries = {}
        for no, s, col in body:
            if "|" not in s or "=" not in s:
                raise ParseError("rank lines look like 'a b | a = 1'", no, col)
            left, rest = s.split("|", 1)
            right, val = rest.rsplit("=", 1)
            a, b = _parse_set(ground, left, no, col), _parse_set(ground, right, no, col)
            if b & ~a:
                raise ParseError("rank entries need B a subset of A", no, col)
            try:
                entries[(a, b)] = int(val)
            except ValueError:
                raise ParseError(f"bad rank value {val.strip()!r}", no, col + s.rindex("=") + 1 + len(val) - len(val.lstrip())) from None
        try:
            return RankInput(ground, RelRankTable(ground, entries))
        except MatroidError as exc:
            raise ParseError(str(exc), rows[2][0], 1) from None
    masks = []
    for no, s, col in body:
        masks.append(_parse_set(ground, s, no, col))
    return (kind, SetFamily(ground, tuple(dict.fromkeys(masks))))


def print_matroid(pres) -> str:
    kind = kind_of(pres)
    ground = pres[1].ground if isinstance(pres, tuple) else pres.ground
    out = [f"matroid {len(ground)}", "elements: " + " ".join(ground), f"{kind}:"]
    if kind == "closure":
        out += [f"{_set_text(ground, X)} -> {_set_text(ground, pres.map[X])}" for X in ground.all_masks()]
    elif kind == "rank":
        out += [f"{_set_text(ground, a)} | {_set_text(ground, b)} = {pres.table.entries[(a, b)]}" for a, b in nested_pairs(ground)]
    else:
        out += [_set_text(ground, m) for m in pres[1].members]
    return "\n".join(out) + "\n"


# -- graphs -----------------------------------------------------------------------------------


def _graph_block(rows, start: int):
    vertices: list = []
    edges = []
    k = start
    while k < len(rows):
        no, s, col = rows[k]
        if s.startswith("vertices:"):
            vertices += s[len("vertices:"):].split()
        elif s.startswith("edge "):
            parts = s.split()
            if len(parts) != 4:
                raise ParseError("edge lines look like 'edge <label> <u> <v>'", no, col)
            edges.append(tuple(parts[1:]))
        else:
            break
        k += 1
    for lab, u, v in edges:
        for x in (u, v):
            if x not in vertices:
                vertices.append(x)
    return vertices, edges, k


def parse_graph(text: str) -> MultiGraph:
    rows = list(_lines(text))
    if not rows or rows[0][1] != "graph":
        raise ParseError("expected header 'graph'", rows[0][0] if rows else 1, 1)
    vertices, edges, k = _graph_block(rows, 1)
    if k < len(rows):
        raise ParseError(f"unexpected line {rows[k][1]!r}", rows[k][0], rows[k][2])
    try:
        return MultiGraph(tuple(vertices), tuple(edges))
    except MatroidError as exc:
        raise ParseError(str(exc), rows[0][0], 1) from None


def _graph_lines(G: MultiGraph) -> list[str]:
    return [" ".join(["vertices:", *G.vertices])] + [f"edge {lab} {u} {v}" for lab, u, v in G.edges]


def print_graph(G: MultiGraph) -> str:
    return "\n".join(["graph"] + _graph_lines(G)) + "\n"


def _ints(s: str, no: int, col: int) -> int:
    try:
        return int(s)
    except ValueError:
        raise ParseError(f"expected an integer, got {s!r}", no, col) from None


def parse_sgraph(text: str) -> StructuredGraph:
    rows = list(_lines(text))
    if not rows or rows[0][1].split()[0] != "sgraph":
        raise ParseError("expected header 'sgraph [name]'", rows[0][0] if rows else 1, 1)
    name = rows[0][1][len("sgraph"):].strip()
    vertices, edges, k = _graph_block(rows, 1)
    tails, cross, coretail, added, removed = [], [], [], [], []
    for no, s, col in rows[k:]:
        parts = s.split()
        head = parts[0]
        if head == "tail" and len(parts) == 2:
            tails.append(parts[1])
        elif head == "cross" and len(parts) == 7:
            residues = tuple(_ints(r, no, col) for r in parts[6].split(","))
            cross.append(CrossRule(parts[1], parts[2], *(_ints(x, no, col) for x in parts[3:6]), residues))
        elif head == "coretail" and len(parts) == 6:
            residues = tuple(_ints(r, no, col) for r in parts[5].split(","))
            coretail.append(CoreTailRule(parts[1], parts[2], _ints(parts[3], no, col), _ints(parts[4], no, col), residues))
        elif head == "patch" and len(parts) == 5 and parts[1] == "+":
            added.append(PatchEdge(parts[2], parse_vertex(parts[3]), parse_vertex(parts[4])))
        elif head == "patch" and len(parts) == 3 and parts[1] == "-":
            removed.append(parse_edge_name(parts[2]))
        else:
            raise ParseError(f"unexpected line {s!r}", no, col)
    try:
        return StructuredGraph(MultiGraph(tuple(vertices), tuple(edges)), tuple(tails), tuple(cross), tuple(coretail), tuple(added), tuple(removed), name)
    except MatroidError as exc:
        raise ParseError(str(exc), rows[0][0], 1) from None


def print_sgraph(G: StructuredGraph) -> str:
    out = [("sgraph " + G.name).strip()] + _graph_lines(G.core)
    out += [f"tail {t}" for t in G.tails]
    out += [f"cross {r.tail} {r.tail2} {r.delta} {r.start} {r.period} {','.join(map(str, r.residues))}" for r in G.cross]
    out += [f"coretail {r.vertex} {r.tail} {r.start} {r.period} {','.join(map(str, r.residues))}" for r in G.coretail]
    out += [f"patch + {p.label} {vertex_name(p.u)} {vertex_name(p.v)}" for p in G.added]
    out += [f"patch - {edge_name(e)}" for e in G.removed]
    return "\n".join(out) + "\n"


# -- edge set expressions -------------------------------------------------------------------


def _bits(s: str, no: int, col: int, base: int = 2) -> tuple:
    if s == "-":
        return ()
    if not all(c.isdigit() and int(c) < base for c in s):
        raise ParseError(f"expected digits below {base}, got {s!r}", no, col)
    return tuple(int(c) for c in s)


def parse_expr(text: str) -> EdgeSetExpr:
    finite: set = set()
    words = {}
    for no, s, col in _lines(text):
        if s.startswith("finite:"):
            finite |= {x for x in s[len("finite:"):].split() if x != "-"}
        elif s.startswith("word "):
            parts = s.split()
            if len(parts) != 5:
                raise ParseError("word lines look like 'word <family> <start> <preperiod-bits> <period-bits>'", no, col)
            per = _bits(parts[4], no, col)
            if not per:
                raise ParseError("period must be non-empty", no, col)
            w = UPWord.make(_ints(parts[2], no, col), _bits(parts[3], no, col), per)
            words[parts[1]] = words.get(parts[1], UPWord.zeros()) | w
        else:
            raise ParseError(f"unexpected line {s!r}", no, col)
    return EdgeSetExpr(frozenset(finite), words)


def print_expr(D: EdgeSetExpr) -> str:
    out = ["finite: " + (" ".join(sorted(map(str, D.finite))) or "-")]
    for fam, w in D.words.items():
        out.append(f"word {fam} 0 {''.join(map(str, w.pre)) or '-'} {''.join(map(str, w.per))}")
    return "\n".join(out) + "\n"


# -- thin families -----------------------------------------------------------------------------


def _coord(s: str):
    return int(s) if s.lstrip("-").isdigit() else s


def parse_thinfam(text: str) -> ThinFamily:
    rows = list(_lines(text))
    if not rows or not rows[0][1].startswith("thinfam"):
        raise ParseError("expected header 'thinfam p=<prime>'", rows[0][0] if rows else 1, 1)
    no, head, col = rows[0]
    parts = head.split()
    if len(parts) != 2 or not parts[1].startswith("p="):
        raise ParseError("header must be 'thinfam p=<prime>'", no, col)
    p = _ints(parts[1][2:], no, col + 8)
    try:
        X = ThinFamily(p)
    except MatroidError as exc:
        raise ParseError(str(exc), no, col) from None
    names = set()
    for no, s, col in rows[1:]:
        parts = s.split()
        if parts[0] == "coords:":
            X.coords = tuple(_coord(a) for a in parts[1:])
            continue
        if parts[0] == "vec" and len(parts) >= 2:
            vals = {}
            for item in parts[2:]:
                if ":" not in item:
                    raise ParseError(f"expected coord:value, got {item!r}", no, col)
                a, v = item.rsplit(":", 1)
                vals[_coord(a)] = _ints(v, no, col)
            member = (parts[1], FnVec.of(vals, p))
        elif parts[0] == "pvec" and len(parts) == 5:
            per = _bits(parts[4], no, col, p)
            if not per:
                raise ParseError("period must be non-empty", no, col)
            member = (parts[1], PVec.make(_ints(parts[2], no, col), _bits(parts[3], no, col, p), per, p))
        elif parts[0] == "family" and len(parts) == 5 and parts[1] in FAMILY_KINDS:
            per = _bits(parts[4], no, col)
            if not per:
                raise ParseError("period must be non-empty", no, col)
            X.indexed.append(IndexedFamily(parts[1], UPWord.make(_ints(parts[2], no, col), _bits(parts[3], no, col), per)))
            continue
        else:
            raise ParseError(f"unexpected line {s!r}", no, col)
        if member[0] in names:
            raise ParseError(f"duplicate member name {member[0]}", no, col)
        names.add(member[0])
        X.members.append(member)
    return X


def print_thinfam(X: ThinFamily) -> str:
    out = [f"thinfam p={X.p}"]
    if X.coords is not None:
        out.append(" ".join(["coords:"] + [str(a) for a in X.coords]))
    for name, v in X.members:
        if isinstance(v, FnVec):
            out.append(" ".join([f"vec {name}"] + [f"{a}:{x}" for a, x in v.items]))
        else:
            out.append(f"pvec {name} 0 {''.join(map(str, v.pre)) or '-'} {''.join(map(str, v.per))}")
    for f in X.indexed:
        out.append(f"family {f.kind} 0 {''.join(map(str, f.index.pre)) or '-'} {''.join(map(str, f.index.per))}")
    return "\n".join(out) + "\n"
