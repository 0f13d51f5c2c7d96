"""Matroid workbench: finite matroids, axiom systems, graph matroids of
finitely presented infinite graphs, and thin-sums representations."""

from .core import (
    FiniteMatroid,
    GroundSet,
    MatroidError,
    RelRankTable,
    SetFamily,
    bases,
    circuits,
    closure,
    cocircuits,
    dual,
    fundamental_circuit,
    is_independent,
    minor,
    relative_rank,
)

__version__ = "0.1.0"
