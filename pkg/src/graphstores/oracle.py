"""Ground-truth reference store for differential testing.

A dense boolean adjacency matrix answers membership by direct indexing,
and per-vertex insertion logs keep the exact order in which targets
arrived. It exists to be obviously correct, not fast, and its n-squared
matrix is the memory cost the compact stores avoid.
"""

from __future__ import annotations

import numpy as np

from .core import ConfigError, EdgeStore, VertexRangeError
from .counters import OpCounters

#: Matrix stores are kept at desk scale; 4096 vertices is a 16 MiB matrix.
ORACLE_MAX_VERTICES = 4096


class OracleGraph(EdgeStore):
    """Adjacency matrix plus insertion logs; the correctness baseline."""

    __slots__ = ("_n", "_matrix", "_logs", "_count", "counters")

    def __init__(self, vertex_count: int) -> None:
        if vertex_count < 1:
            raise ConfigError("vertex_count must be positive")
        self._n = vertex_count
        self._matrix = np.zeros((vertex_count, vertex_count), dtype=bool)
        self._logs: list[list[int]] = [[] for _ in range(vertex_count)]
        self._count = 0
        self.counters = OpCounters()

    def _check_pair(self, x: int, y: int) -> None:
        n = self._n
        if x < 0 or x >= n or y < 0 or y >= n:
            raise VertexRangeError(f"edge ({x}, {y}) outside vertex range [0, {n})")

    def add_edge(self, x: int, y: int) -> bool:
        self._check_pair(x, y)
        self.counters.add.record_traversals(1)
        if self._matrix[x, y]:
            return False
        self._matrix[x, y] = True
        self._logs[x].append(y)
        self._count += 1
        return True

    def contains(self, x: int, y: int) -> bool:
        self._check_pair(x, y)
        self.counters.contains.record_traversals(1)
        return bool(self._matrix[x, y])

    def neighbors(self, x: int) -> list[int]:
        """Targets in insertion order (the logs' native order)."""
        if x < 0 or x >= self._n:
            raise VertexRangeError(f"vertex {x} outside range [0, {self._n})")
        log = self._logs[x]
        self.counters.enumerate.record_traversals(len(log))
        return list(log)

    def neighbors_newest_first(self, x: int) -> list[int]:
        """Reversed log; comparable to the head-insertion stores' order."""
        if x < 0 or x >= self._n:
            raise VertexRangeError(f"vertex {x} outside range [0, {self._n})")
        log = self._logs[x]
        self.counters.enumerate.record_traversals(len(log))
        return log[::-1]

    def recount_edges(self) -> int:
        """Independent tally by full matrix scan; must equal edge_count."""
        return int(np.count_nonzero(self._matrix))

    @property
    def edge_count(self) -> int:
        return self._count

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def slots_allocated(self) -> int:
        """Matrix cells: n * n, the quadratic footprint the other stores avoid."""
        return self._n * self._n
