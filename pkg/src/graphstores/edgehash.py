"""Open-addressing edge table with linear probing; add and membership only.

Entries are packed edge codes in a flat slot array plus a parallel
occupancy array (codes cannot double as their own empty marker because
pack(0, 0) == 0 is a legal edge). There is no removal, which keeps probe
chains intact forever: an entry is always reachable from its home slot
without crossing an empty slot.
"""

from __future__ import annotations

from .core import (
    CapacityError,
    ConfigError,
    EdgeStore,
    StoreConfig,
    UnsupportedOperationError,
    VertexRangeError,
    compat_hash,
    mixer_hash,
    pack_edge,
    unpack_edge,
)
from .counters import OpCounters


class EdgeHash(EdgeStore):
    """Hash table of directed edges keyed by their packed 64-bit codes.

    Membership cost does not depend on vertex degree, only on load factor.
    Per-vertex enumeration is deliberately unsupported: nothing short of a
    full slot scan could answer it, and pretending otherwise would hide an
    O(capacity) cost behind an innocent-looking call.

    Single-writer: mutation needs exclusive access; once mutation stops,
    any number of threads may read concurrently.
    """

    __slots__ = (
        "config",
        "counters",
        "rebuilds",
        "_n",
        "_cap",
        "_mask",
        "_data",
        "_used",
        "_count",
        "_mixer",
        "_growth_enabled",
        "_growth_limit",
    )

    def __init__(self, config: StoreConfig) -> None:
        self.config = config
        self._n = config.vertex_count
        cap = config.initial_capacity
        self._cap = cap
        self._mask = cap - 1
        self._data = [0] * cap
        self._used = bytearray(cap)
        self._count = 0
        self._mixer = config.hash_mode == "mixer"
        self._growth_enabled = config.growth_enabled
        self._growth_limit = config.growth_limit(cap)
        self.rebuilds = 0
        self.counters = OpCounters()

    def _check_pair(self, x: int, y: int) -> None:
        n = self._n
        if x < 0 or x >= n or y < 0 or y >= n:
            raise VertexRangeError(f"edge ({x}, {y}) outside vertex range [0, {n})")

    def _home_slot(self, x: int, y: int, code: int) -> int:
        if self._mixer:
            return mixer_hash(code, self._cap)
        return compat_hash(x, y, self._cap)

    def add_edge(self, x: int, y: int) -> bool:
        self._check_pair(x, y)
        if self._growth_enabled and self._count + 1 > self._growth_limit:
            self._rebuild(self._cap * 2)
        code = pack_edge(x, y)
        data = self._data
        used = self._used
        mask = self._mask
        slot = self._home_slot(x, y, code)
        probes = 0
        for _ in range(self._cap):
            probes += 1
            if not used[slot]:
                used[slot] = 1
                data[slot] = code
                self._count += 1
                self.counters.add.record_probes(probes)
                return True
            if data[slot] == code:
                self.counters.add.record_probes(probes)
                return False
            slot = (slot + 1) & mask
        # Only reachable with growth disabled, every slot occupied, and the
        # edge absent; the bounded loop is what keeps probing from hanging.
        raise CapacityError(f"table full at capacity {self._cap} with growth disabled")

    def contains(self, x: int, y: int) -> bool:
        self._check_pair(x, y)
        code = pack_edge(x, y)
        data = self._data
        used = self._used
        mask = self._mask
        slot = self._home_slot(x, y, code)
        probes = 0
        for _ in range(self._cap):
            probes += 1
            if not used[slot]:
                self.counters.contains.record_probes(probes)
                return False
            if data[slot] == code:
                self.counters.contains.record_probes(probes)
                return True
            slot = (slot + 1) & mask
        self.counters.contains.record_probes(probes)
        return False

    def neighbors(self, x: int) -> list[int]:
        raise UnsupportedOperationError(
            "EdgeHash cannot enumerate neighbors; use HashList or MultiList"
        )

    def grow(self) -> None:
        """Double capacity and re-seat every code; membership answers are unchanged."""
        if not self._growth_enabled:
            raise ConfigError("growth is disabled for this store")
        self._rebuild(self._cap * 2)

    def _rebuild(self, new_cap: int) -> None:
        old_data = self._data
        old_used = self._used
        self._cap = new_cap
        self._mask = new_cap - 1
        self._data = [0] * new_cap
        self._used = bytearray(new_cap)
        self._growth_limit = self.config.growth_limit(new_cap)
        mask = self._mask
        data = self._data
        used = self._used
        for s, occupied in enumerate(old_used):
            if not occupied:
                continue
            code = old_data[s]
            if self._mixer:
                slot = mixer_hash(code, new_cap)
            else:
                hx, hy = unpack_edge(code)
                slot = compat_hash(hx, hy, new_cap)
            while used[slot]:
                slot = (slot + 1) & mask
            used[slot] = 1
            data[slot] = code
        self.rebuilds += 1

    @property
    def edge_count(self) -> int:
        return self._count

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def capacity(self) -> int:
        return self._cap

    @property
    def load_factor(self) -> float:
        return self._count / self._cap

    @property
    def slots_allocated(self) -> int:
        return self._cap

    def memory_ints(self) -> int:
        """Slot cells across data + used: 2 * capacity."""
        return 2 * self._cap
