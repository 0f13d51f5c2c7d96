"""Ultimately periodic 0/1 words over the naturals and symbolic edge sets built from them."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Callable, Iterable, Iterator, Mapping


def _primitive(per: tuple[int, ...]) -> tuple[int, ...]:
    n = len(per)
    for d in range(1, n + 1):
        if n % d == 0 and per == per[:d] * (n // d):
            return per[:d]
    return per


@dataclass(frozen=True)
class UPWord:
    """The word pre + per + per + ...; stored in canonical (minimal) form."""

    pre: tuple[int, ...]
    per: tuple[int, ...]

    def __post_init__(self):
        pre = tuple(int(b) & 1 for b in self.pre)
        per = tuple(int(b) & 1 for b in self.per)
        if not per:
            raise ValueError("period must be non-empty")
        per = _primitive(per)
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = (per[-1],) + per[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    @classmethod
    def make(cls, start: int, pre: Iterable[int], per: Iterable[int]) -> "UPWord":
        return cls((0,) * start + tuple(pre), tuple(per))

    @classmethod
    def zeros(cls) -> "UPWord":
        return cls((), (0,))

    @classmethod
    def ones(cls, start: int = 0) -> "UPWord":
        return cls((0,) * start, (1,))

    @classmethod
    def finite(cls, indices: Iterable[int]) -> "UPWord":
        idx = set(indices)
        if not idx:
            return cls.zeros()
        if min(idx) < 0:
            raise ValueError("negative index")
        return cls(tuple(int(i in idx) for i in range(max(idx) + 1)), (0,))

    @classmethod
    def residues(cls, start: int, period: int, residues: Iterable[int]) -> "UPWord":
        rs = {r % period for r in residues}
        # align the period so that index start + j has residue (start + j) mod period
        per = tuple(int((start + j) % period in rs) for j in range(period))
        return cls((0,) * start, per)

    @classmethod
    def from_predicate(cls, pred: Callable[[int], bool], preperiod: int, period: int) -> "UPWord":
        return cls(tuple(int(pred(i)) for i in range(preperiod)), tuple(int(pred(preperiod + j)) for j in range(period)))

    def __getitem__(self, i: int) -> int:
        if i < 0:
            return 0
        if i < len(self.pre):
            return self.pre[i]
        return self.per[(i - len(self.pre)) % len(self.per)]

    def __contains__(self, i: int) -> bool:
        return bool(self[i])

    @property
    def preperiod(self) -> int:
        return len(self.pre)

    @property
    def period(self) -> int:
        return len(self.per)

    def _zip(self, other: "UPWord", op) -> "UPWord":
        n = max(self.preperiod, other.preperiod)
        p = lcm(self.period, other.period)
        return UPWord(tuple(op(self[i], other[i]) for i in range(n)), tuple(op(self[n + j], other[n + j]) for j in range(p)))

    def __or__(self, other):
        return self._zip(other, lambda a, b: a | b)

    def __and__(self, other):
        return self._zip(other, lambda a, b: a & b)

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a & (1 - b))

    def __xor__(self, other):
        return self._zip(other, lambda a, b: a ^ b)

    def __invert__(self):
        return UPWord(tuple(1 - b for b in self.pre), tuple(1 - b for b in self.per))

    def is_empty(self) -> bool:
        return self.per == (0,) and not any(self.pre)

    def is_finite(self) -> bool:
        return self.per == (0,)

    def cardinality(self) -> int | None:
        return sum(self.pre) if self.is_finite() else None

    def elements(self, limit: int | None = None) -> Iterator[int]:
        if limit is None:
            if not self.is_finite():
                raise ValueError("infinite word: give a limit")
            limit = self.preperiod
        return (i for i in range(limit) if self[i])

    def shift(self, k: int) -> "UPWord":
        """Word w' with w'[i] = w[i - k] (k > 0 shifts right, k < 0 drops the first -k letters)."""
        if k >= 0:
            return UPWord((0,) * k + self.pre, self.per)
        k = -k
        n = max(self.preperiod, k)
        return UPWord(tuple(self[i] for i in range(k, n)), tuple(self[n + j] for j in range(self.period)))

    def with_bit(self, i: int, value: int) -> "UPWord":
        n = max(self.preperiod, i + 1)
        pre = [self[j] for j in range(n)]
        pre[i] = value & 1
        return UPWord(tuple(pre), tuple(self[n + j] for j in range(self.period)))

    def __str__(self):
        pre = "".join(map(str, self.pre)) or "-"
        return f"0 {pre} {''.join(map(str, self.per))}"


ZERO = UPWord.zeros()


@dataclass(frozen=True)
class EdgeSetExpr:
    """Finite labelled edges plus one ultimately periodic word per infinite edge family.

    Families are named ``rail:<tail>``, ``cross:<k>`` and ``coretail:<k>``; index ``i`` of a
    family word selects the ``i``-th generated edge.  Words equal to the empty word are dropped
    so that equality of expressions is equality of denotations.
    """

    finite: frozenset = frozenset()
    words: Mapping[str, UPWord] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "finite", frozenset(self.finite))
        object.__setattr__(self, "words", {k: v for k, v in sorted(self.words.items()) if not v.is_empty()})

    def __eq__(self, other):
        return isinstance(other, EdgeSetExpr) and self.finite == other.finite and self.words == other.words

    def __hash__(self):
        return hash((self.finite, tuple(self.words.items())))

    def word(self, family: str) -> UPWord:
        return self.words.get(family, ZERO)

    def _combine(self, other: "EdgeSetExpr", fset, fword) -> "EdgeSetExpr":
        fams = set(self.words) | set(other.words)
        return EdgeSetExpr(fset(self.finite, other.finite), {f: fword(self.word(f), other.word(f)) for f in fams})

    def __or__(self, other):
        return self._combine(other, frozenset.__or__, UPWord.__or__)

    def __and__(self, other):
        return self._combine(other, frozenset.__and__, UPWord.__and__)

    def __sub__(self, other):
        return self._combine(other, frozenset.__sub__, UPWord.__sub__)

    def __xor__(self, other):
        return self._combine(other, frozenset.__xor__, UPWord.__xor__)

    def __le__(self, other):
        return (self - other).is_empty()

    def is_empty(self) -> bool:
        return not self.finite and not self.words

    def is_finite(self) -> bool:
        return all(w.is_finite() for w in self.words.values())

    def cardinality(self) -> int | None:
        if not self.is_finite():
            return None
        return len(self.finite) + sum(w.cardinality() for w in self.words.values())

    def contains(self, edge) -> bool:
        if isinstance(edge, tuple):
            fam, i = edge
            return i in self.word(fam)
        return edge in self.finite

    def edges(self, limit: int | None = None) -> list:
        """Finite labels then (family, index) pairs; ``limit`` bounds indices of infinite words."""
        out: list = sorted(self.finite)
        for f, w in self.words.items():
            out.extend((f, i) for i in w.elements(limit if not w.is_finite() else None))
        return out

    def add(self, edge) -> "EdgeSetExpr":
        return self | single(edge)

    def remove(self, edge) -> "EdgeSetExpr":
        return self - single(edge)

    @property
    def preperiod(self) -> int:
        return max((w.preperiod for w in self.words.values()), default=0)

    @property
    def period(self) -> int:
        return lcm(*(w.period for w in self.words.values())) if self.words else 1


def single(edge) -> EdgeSetExpr:
    if isinstance(edge, tuple):
        fam, i = edge
        return EdgeSetExpr(frozenset(), {fam: UPWord.finite([i])})
    return EdgeSetExpr(frozenset([edge]))


def edge_name(edge) -> str:
    if isinstance(edge, tuple):
        return f"{edge[0]}:{edge[1]}"
    return str(edge)


def parse_edge_name(text: str):
    parts = text.split(":")
    if len(parts) == 3 and parts[0] in ("rail", "cross", "coretail") and parts[2].lstrip("-").isdigit():
        return (f"{parts[0]}:{parts[1]}", int(parts[2]))
    return text


def words_up_to(max_pre: int, max_per: int) -> list[UPWord]:
    """All canonical words with preperiod <= max_pre and period <= max_per."""
    out = set()
    for p in range(1, max_per + 1):
        for pb in range(1 << p):
            per = tuple(pb >> j & 1 for j in range(p))
            for n in range(max_pre + 1):
                for qb in range(1 << n):
                    out.add(UPWord(tuple(qb >> j & 1 for j in range(n)), per))
    return sorted(out, key=lambda w: (w.preperiod + w.period, w.pre, w.per))
