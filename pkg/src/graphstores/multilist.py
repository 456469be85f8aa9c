"""Adjacency lists over three flat int arrays with a shared cell pool.

``heads[x]`` holds the index of the newest cell in x's list, ``next``
chains cells together, ``data`` holds the target vertex. Index 0 is the
end-of-chain sentinel, so cell 0 is never handed out; a single ``used``
counter is the allocator (next free cell is ``used + 1``). Insertion
prepends, so enumeration yields targets newest first.
"""

from __future__ import annotations

from .core import CapacityError, ConfigError, EdgeStore, VertexRangeError
from .counters import OpCounters


class MultiList(EdgeStore):
    """Fixed-capacity collection of per-vertex adjacency lists.

    Duplicate edges are rejected (the add scans the target list first), so
    this store carries the same set semantics as the hash-backed ones and
    can be compared against them operation for operation.

    Single-writer: mutation needs exclusive access; once mutation stops,
    any number of threads may read concurrently.
    """

    __slots__ = ("_n", "_m", "_heads", "_next", "_data", "_used", "counters")

    def __init__(self, vertex_count: int, edge_capacity: int) -> None:
        if vertex_count < 1:
            raise ConfigError("vertex_count must be positive")
        if edge_capacity < 0:
            raise ConfigError("edge_capacity must be nonnegative")
        self._n = vertex_count
        self._m = edge_capacity
        self._heads = [0] * vertex_count
        self._next = [0] * (edge_capacity + 1)
        self._data = [0] * (edge_capacity + 1)
        self._used = 0
        self.counters = OpCounters()

    def _check_pair(self, x: int, y: int) -> None:
        n = self._n
        if x < 0 or x >= n or y < 0 or y >= n:
            raise VertexRangeError(f"edge ({x}, {y}) outside vertex range [0, {n})")

    def add_edge(self, x: int, y: int) -> bool:
        self._check_pair(x, y)
        nxt = self._next
        data = self._data
        steps = 0
        i = self._heads[x]
        while i:
            steps += 1
            if data[i] == y:
                self.counters.add.record_traversals(steps)
                return False
            i = nxt[i]
        if self._used >= self._m:
            raise CapacityError(f"all {self._m} cells are in use")
        self._used += 1
        cell = self._used
        data[cell] = y
        nxt[cell] = self._heads[x]
        self._heads[x] = cell
        self.counters.add.record_traversals(steps + 1)
        return True

    def contains(self, x: int, y: int) -> bool:
        self._check_pair(x, y)
        nxt = self._next
        data = self._data
        steps = 0
        i = self._heads[x]
        while i:
            steps += 1
            if data[i] == y:
                self.counters.contains.record_traversals(steps)
                return True
            i = nxt[i]
        self.counters.contains.record_traversals(steps)
        return False

    def neighbors(self, x: int) -> list[int]:
        if x < 0 or x >= self._n:
            raise VertexRangeError(f"vertex {x} outside range [0, {self._n})")
        nxt = self._next
        data = self._data
        out = []
        i = self._heads[x]
        while i:
            out.append(data[i])
            i = nxt[i]
        self.counters.enumerate.record_traversals(len(out))
        return out

    @property
    def edge_count(self) -> int:
        return self._used

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_capacity(self) -> int:
        return self._m

    @property
    def slots_allocated(self) -> int:
        """Cells in the shared pool, including the reserved sentinel cell 0."""
        return self._m + 1

    def memory_ints(self) -> int:
        """Total ints across heads/next/data: n + 2*(m + 1)."""
        return self._n + 2 * (self._m + 1)
