"""Finite matroids as explicit set systems over a labelled ground set.

Subsets of the ground set are stored as integer bitmasks; bit ``i`` stands for
``ground.elements[i]``.  Every derived view (bases, circuits, closure, rank)
is computed by brute force from the independence family, which keeps the
kernel small enough to be checked exhaustively on ground sets of size <= 5.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class MatroidError(ValueError):
    """Domain error: a label outside the ground set, overlapping minors, ..."""


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def mask_key(mask: int) -> tuple[int, ...]:
    # lexicographic order on sorted index tuples
    return tuple(bits(mask))


@dataclass(frozen=True)
class GroundSet:
    elements: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if len(set(self.elements)) != len(self.elements):
            raise MatroidError(f"duplicate labels in ground set {self.elements}")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @property
    def full(self) -> int:
        return (1 << len(self.elements)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise MatroidError(f"label {label!r} is not in the ground set") from None

    def mask(self, labels: Iterable[str] | int) -> int:
        if isinstance(labels, int):
            if labels & ~self.full:
                raise MatroidError(f"mask {labels:#b} exceeds ground set")
            return labels
        m = 0
        for lab in labels:
            m |= 1 << self.index(lab)
        return m

    def labels(self, mask: int) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in bits(mask))

    def all_masks(self) -> range:
        return range(1 << len(self.elements))


@dataclass(frozen=True)
class SetFamily:
    ground: GroundSet
    members: tuple[int, ...]

    def __post_init__(self):
        full = self.ground.full
        uniq = set(self.members)
        for m in uniq:
            if m & ~full:
                raise MatroidError("family member not contained in the ground set")
        object.__setattr__(self, "members", tuple(sorted(uniq, key=mask_key)))

    @classmethod
    def of(cls, ground: GroundSet, sets: Iterable[Iterable[str] | int]) -> "SetFamily":
        return cls(ground, tuple(ground.mask(s) for s in sets))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in self.as_set

    @cached_property
    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def maximal(self) -> "SetFamily":
        ms = self.members
        return SetFamily(self.ground, tuple(a for a in ms if not any(a != b and a & b == a for b in ms)))

    def minimal(self) -> "SetFamily":
        ms = self.members
        return SetFamily(self.ground, tuple(a for a in ms if not any(a != b and a & b == b for b in ms)))

    def down_closure(self) -> "SetFamily":
        out: set[int] = set()
        for m in self.members:
            if m not in out:
                out.update(submasks(m))
        return SetFamily(self.ground, tuple(out))

    def as_labels(self) -> list[tuple[str, ...]]:
        return [self.ground.labels(m) for m in self.members]


@dataclass(frozen=True)
class RelRankTable:
    """Relative rank values r(A|B) keyed by nested mask pairs ``(A, B)``.

    ``None`` is the infinity marker; it never occurs for finite ground sets.
    """

    ground: GroundSet
    entries: dict = field(hash=False, compare=True)

    def __getitem__(self, key: tuple[int, int]) -> int | None:
        return self.entries[key]


def nested_pairs(ground: GroundSet) -> Iterator[tuple[int, int]]:
    for a in ground.all_masks():
        for b in submasks(a):
            yield a, b


@dataclass(frozen=True)
class FiniteMatroid:
    ground: GroundSet
    independents: SetFamily
    validated: bool = True

    def __post_init__(self):
        if self.independents.ground != self.ground:
            raise MatroidError("independence family lives on a different ground set")
        if self.validated:
            # local import: axioms imports this module
            from .axioms import verify_independence

            report = verify_independence(self.independents)
            if not report.passed:
                raise MatroidError(f"not a matroid: {report.summary()}")

    @classmethod
    def unchecked(cls, ground: GroundSet, independents: SetFamily) -> "FiniteMatroid":
        return cls(ground, independents, validated=False)

    @classmethod
    def from_bases(cls, ground: GroundSet, bases: Iterable[int | Iterable[str]]) -> "FiniteMatroid":
        fam = SetFamily.of(ground, bases)
        return cls(ground, fam.down_closure())

    @classmethod
    def from_circuits(cls, ground: GroundSet, circuits: Iterable[int | Iterable[str]]) -> "FiniteMatroid":
        cs = [ground.mask(c) for c in circuits]
        ind = [m for m in ground.all_masks() if not any(c & m == c for c in cs)]
        return cls(ground, SetFamily(ground, tuple(ind)))

    def __eq__(self, other):
        if not isinstance(other, FiniteMatroid):
            return NotImplemented
        return self.ground == other.ground and self.independents.as_set == other.independents.as_set

    def __hash__(self):
        return hash((self.ground, self.independents.as_set))

    def __repr__(self):
        return f"FiniteMatroid({list(self.ground)}, bases={self.bases().as_labels()})"

    @property
    def full(self) -> int:
        return self.ground.full

    @cached_property
    def _ind(self) -> frozenset[int]:
        return self.independents.as_set

    def indep(self, mask: int) -> bool:
        return mask in self._ind

    def rank_of(self, mask: int) -> int:
        """Absolute rank: size of a largest independent subset of ``mask``."""
        return max(popcount(i) for i in self.independents if i & mask == i)

    @cached_property
    def rank(self) -> int:
        return self.rank_of(self.full)

    def bases(self) -> SetFamily:
        return self.independents.maximal()

    def circuits(self) -> SetFamily:
        ind = self._ind
        out = []
        for m in self.ground.all_masks():
            if m in ind:
                continue
            if all((m & ~(1 << i)) in ind for i in bits(m)):
                out.append(m)
        return SetFamily(self.ground, tuple(out))

    def cocircuits(self) -> SetFamily:
        return dual(self).circuits()


def _sub(M: FiniteMatroid, S: Iterable[str] | int) -> int:
    return M.ground.mask(S)


def is_independent(M: FiniteMatroid, S: Iterable[str] | int) -> bool:
    return M.indep(_sub(M, S))


def closure(M: FiniteMatroid, X: Iterable[str] | int) -> int:
    """cl(X) = X together with every x such that I+x is dependent for some independent I in X."""
    x = _sub(M, X)
    out = x
    inside = [i for i in M.independents if i & x == i]
    for e in range(len(M.ground)):
        bit = 1 << e
        if out & bit:
            continue
        if any(not M.indep(i | bit) for i in inside):
            out |= bit
    return out


def maximal_independent_in(M: FiniteMatroid, X: int) -> list[int]:
    inside = [i for i in M.independents if i & X == i]
    return [i for i in inside if not any(j != i and j & i == i for j in inside)]


def relative_rank(M: FiniteMatroid, A: Iterable[str] | int, B: Iterable[str] | int, J: int | None = None) -> int:
    """max |I \\ J| over independent I with J <= I <= A, J maximal independent in B.

    ``J`` defaults to the first maximal independent subset of ``B`` in canonical order;
    the value does not depend on that choice (checked in the test-suite).
    """
    a, b = _sub(M, A), _sub(M, B)
    if b & ~a:
        raise MatroidError("relative rank needs B to be a subset of A")
    if J is None:
        J = min(maximal_independent_in(M, b), key=mask_key)
    elif J not in maximal_independent_in(M, b):
        raise MatroidError("J is not a maximal independent subset of B")
    return max(popcount(i & ~J) for i in M.independents if i & a == i and i & J == J)


def rank_table(M: FiniteMatroid) -> RelRankTable:
    return RelRankTable(M.ground, {(a, b): relative_rank(M, a, b) for a, b in nested_pairs(M.ground)})


def dual(M: FiniteMatroid) -> FiniteMatroid:
    full = M.full
    return FiniteMatroid.from_bases(M.ground, [full & ~b for b in M.bases()])


def bases(M: FiniteMatroid) -> SetFamily:
    return M.bases()


def circuits(M: FiniteMatroid) -> SetFamily:
    return M.circuits()


def cocircuits(M: FiniteMatroid) -> SetFamily:
    return M.cocircuits()


def minor(M: FiniteMatroid, delete: Iterable[str] | int = (), contract: Iterable[str] | int = ()) -> FiniteMatroid:
    d, c = _sub(M, delete), _sub(M, contract)
    if d & c:
        raise MatroidError("delete and contract sets overlap")
    J = min(maximal_independent_in(M, c), key=mask_key)
    keep = [i for i in range(len(M.ground)) if not (d | c) >> i & 1]
    ground = GroundSet(tuple(M.ground.elements[i] for i in keep))

    def lift(sub: int) -> int:
        return sum(1 << keep[k] for k in bits(sub))

    ind = [s for s in ground.all_masks() if M.indep(lift(s) | J)]
    return FiniteMatroid(ground, SetFamily(ground, tuple(ind)), validated=M.validated)


def fundamental_circuit(M: FiniteMatroid, B: Iterable[str] | int, e: str | int) -> int:
    b = _sub(M, B)
    if b not in M.bases():
        raise MatroidError("B is not a base")
    bit = (1 << M.ground.index(e)) if isinstance(e, str) else (1 << e)
    if b & bit:
        raise MatroidError("element already lies in the base")
    found = [c for c in M.circuits() if c & bit and c & ~(b | bit) == 0]
    # circuit elimination makes this unique
    assert len(found) == 1, found
    return found[0]


# -- small constructors used across the package and its tests ---------------


def labels_for(n: int) -> tuple[str, ...]:
    return tuple("abcdefghijklmnopqrstuvwxyz"[:n]) if n <= 26 else tuple(f"e{i}" for i in range(n))


def uniform(k: int, n: int, elements: Sequence[str] | None = None) -> FiniteMatroid:
    ground = GroundSet(tuple(elements) if elements else labels_for(n))
    ind = [m for m in ground.all_masks() if popcount(m) <= k]
    return FiniteMatroid(ground, SetFamily(ground, tuple(ind)))


def free(elements: Sequence[str]) -> FiniteMatroid:
    return uniform(len(elements), len(elements), elements)


def from_independents(elements: Sequence[str], sets: Iterable[Iterable[str]], validated: bool = True) -> FiniteMatroid:
    ground = GroundSet(tuple(elements))
    return FiniteMatroid(ground, SetFamily.of(ground, sets), validated=validated)


def k_subsets(ground: GroundSet, k: int) -> list[int]:
    return [sum(1 << i for i in c) for c in combinations(range(len(ground)), k)]
