"""Fused store: every occupied hash slot is also an adjacency-list node.

Insertion picks the slot by probing exactly as the edge hash does, then
threads the slot onto the source vertex's chain (``next[slot] = heads[x];
heads[x] = slot``). Membership inherits the hash table's degree-independent
cost; enumeration walks the chain and touches exactly deg(x) slots. Chains
use the out-of-band NONE sentinel because slot 0 is a legitimate hash slot.
"""

from __future__ import annotations

from .core import (
    NONE,
    CapacityError,
    ConfigError,
    EdgeStore,
    StoreConfig,
    U32_MASK,
    VertexRangeError,
    compat_hash,
    mixer_hash,
    pack_edge,
    unpack_edge,
)
from .counters import OpCounters


class HashList(EdgeStore):
    """Edge hash whose slots double as linked-list nodes, one list per source.

    Growth rebuilds preserve observable enumeration order: each chain is
    collected, reversed back into insertion order, and re-added, so the
    rebuilt chains enumerate exactly as before. An optional weight array
    (``StoreConfig.weighted``) rides along with the slots.

    Single-writer: mutation needs exclusive access; once mutation stops,
    any number of threads may read concurrently. No internal locking.
    """

    __slots__ = (
        "config",
        "counters",
        "rebuilds",
        "_n",
        "_cap",
        "_mask",
        "_heads",
        "_data",
        "_used",
        "_next",
        "_weights",
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
        self._heads = [NONE] * config.vertex_count
        self._data = [0] * cap
        self._used = bytearray(cap)
        self._next = [NONE] * cap
        self._weights: list | None = [None] * cap if config.weighted else None
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
                self._next[slot] = self._heads[x]
                self._heads[x] = slot
                self._count += 1
                self.counters.add.record_probes(probes)
                return True
            if data[slot] == code:
                self.counters.add.record_probes(probes)
                return False
            slot = (slot + 1) & mask
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
        if x < 0 or x >= self._n:
            raise VertexRangeError(f"vertex {x} outside range [0, {self._n})")
        nxt = self._next
        data = self._data
        out = []
        i = self._heads[x]
        while i != NONE:
            out.append(data[i] & U32_MASK)
            i = nxt[i]
        self.counters.enumerate.record_traversals(len(out))
        return out

    def _find_slot(self, x: int, y: int) -> int:
        """Uncounted probe used by the weight accessors; NONE when absent."""
        code = pack_edge(x, y)
        data = self._data
        used = self._used
        mask = self._mask
        slot = self._home_slot(x, y, code)
        for _ in range(self._cap):
            if not used[slot]:
                return NONE
            if data[slot] == code:
                return slot
            slot = (slot + 1) & mask
        return NONE

    def set_weight(self, x: int, y: int, weight: float) -> bool:
        """Attach a weight to an existing edge; False if the edge is absent."""
        if self._weights is None:
            raise ConfigError("weights are not enabled (StoreConfig.weighted)")
        self._check_pair(x, y)
        slot = self._find_slot(x, y)
        if slot == NONE:
            return False
        self._weights[slot] = weight
        return True

    def get_weight(self, x: int, y: int) -> float | None:
        """Stored weight of (x, y); None when the edge is absent or unweighted."""
        if self._weights is None:
            raise ConfigError("weights are not enabled (StoreConfig.weighted)")
        self._check_pair(x, y)
        slot = self._find_slot(x, y)
        if slot == NONE:
            return None
        return self._weights[slot]

    def grow(self) -> None:
        """Double capacity; contains answers, enumeration order, and weights survive."""
        if not self._growth_enabled:
            raise ConfigError("growth is disabled for this store")
        self._rebuild(self._cap * 2)

    def _rebuild(self, new_cap: int) -> None:
        old_data = self._data
        old_next = self._next
        old_heads = self._heads
        old_weights = self._weights
        self._cap = new_cap
        self._mask = new_cap - 1
        self._data = [0] * new_cap
        self._used = bytearray(new_cap)
        self._next = [NONE] * new_cap
        self._heads = [NONE] * self._n
        if old_weights is not None:
            self._weights = [None] * new_cap
        mask = self._mask
        data = self._data
        used = self._used
        nxt = self._next
        heads = self._heads
        for x in range(self._n):
            chain = []
            i = old_heads[x]
            while i != NONE:
                chain.append(i)
                i = old_next[i]
            # Chains enumerate newest-first; re-add oldest-first so the
            # rebuilt chain reads back in the same order.
            for s in reversed(chain):
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
                nxt[slot] = heads[x]
                heads[x] = slot
                if old_weights is not None:
                    self._weights[slot] = old_weights[s]
        self._growth_limit = self.config.growth_limit(new_cap)
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
        """heads + data/used/next slot arrays, plus weights when enabled."""
        total = self._n + 3 * self._cap
        if self._weights is not None:
            total += self._cap
        return total
