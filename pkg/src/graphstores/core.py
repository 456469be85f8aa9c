"""Shared vocabulary for the graph edge stores.

Vertex ids are plain ints below 2**32. A directed edge (x, y) is packed
into a single 64-bit code with x in the high half, so one integer compare
decides edge equality. Two slot-hash functions are provided: a production
avalanche mixer, and a legacy multiply-offset hash kept bit-exact for
compatibility tests. ``StoreConfig.hash_mode`` selects between them.
"""

from __future__ import annotations

import abc
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

U32_MASK = 0xFFFFFFFF
U64_MASK = 0xFFFFFFFFFFFFFFFF

#: Out-of-band sentinel for slot-index chains (slot 0 is a legal hash slot,
#: so "no slot" must live outside the index range).
NONE = -1

#: Smallest slot capacity any hash-backed store will allocate.
MIN_CAPACITY = 16

_MIX_MULT_1 = 0xFF51AFD7ED558CCD
_MIX_MULT_2 = 0xC4CEB9FE1A85EC53


class GraphStoreError(Exception):
    """Base class for every error raised by this package."""


class VertexRangeError(GraphStoreError):
    """A vertex id is negative or >= the store's declared vertex count."""


class CapacityError(GraphStoreError):
    """A fixed-size store ran out of cells, or a non-growing table filled up."""


class ConfigError(GraphStoreError):
    """Invalid construction parameters, or an operation the configuration forbids."""


class UnsupportedOperationError(GraphStoreError):
    """The store cannot perform the requested operation at all."""


def pack_edge(x: int, y: int) -> int:
    """Pack the directed edge (x, y) into one 64-bit code, x in the high half.

    Callers validate that x and y fit in 32 bits; this stays a bare shift
    because it sits on every store's hot path.
    """
    return (x << 32) | y


def unpack_edge(code: int) -> tuple[int, int]:
    """Inverse of :func:`pack_edge`: (high half, low half)."""
    return code >> 32, code & U32_MASK


def compat_hash(x: int, y: int, size: int) -> int:
    """Legacy multiply-offset slot hash, reproduced bit-for-bit.

    Computes ``(x + 111111) * (y - 333333)`` in wrapping signed 64-bit
    arithmetic, takes the *truncated* remainder by ``size`` (the remainder
    carries the sign of the dividend, unlike Python's floored ``%``), then
    the absolute value. For a positive ``size`` the absolute value of the
    truncated remainder equals ``abs(product) % size``, which is how it is
    evaluated here.

    Kept only for ``hash_mode="paper_compat"`` fidelity: it collides
    heavily whenever ``y == 333333`` or ``x + 111111`` is a multiple of
    ``size``, so it is not the default. The most-negative product
    ``-2**63`` has no well-defined absolute value in the original signed
    arithmetic; Python ints make it unambiguous here, and callers should
    not rely on that corner.
    """
    product = ((x + 111111) * (y - 333333)) & U64_MASK
    if product >= 1 << 63:
        product -= 1 << 64
    return abs(product) % size


def mixer_hash(code: int, capacity: int) -> int:
    """Slot index from a fixed 64-bit avalanche finalizer, masked to capacity.

    The finalizer is xor-shift by 33, multiply by 0xFF51AFD7ED558CCD,
    xor-shift by 33, multiply by 0xC4CEB9FE1A85EC53, xor-shift by 33.
    ``capacity`` must be a power of two; the result is ``finalized & (capacity - 1)``,
    deterministic across runs and platforms.
    """
    z = code & U64_MASK
    z = ((z ^ (z >> 33)) * _MIX_MULT_1) & U64_MASK
    z = ((z ^ (z >> 33)) * _MIX_MULT_2) & U64_MASK
    z ^= z >> 33
    return z & (capacity - 1)


def mixer_hash_array(codes: np.ndarray, capacity: int) -> np.ndarray:
    """Vectorized :func:`mixer_hash` over an array of codes.

    Bit-identical to the scalar version; handy for bulk distribution
    checks where a Python loop over millions of codes would crawl.
    """
    z = np.asarray(codes, dtype=np.uint64)
    s33 = np.uint64(33)
    z = (z ^ (z >> s33)) * np.uint64(_MIX_MULT_1)
    z = (z ^ (z >> s33)) * np.uint64(_MIX_MULT_2)
    z = z ^ (z >> s33)
    return (z & np.uint64(capacity - 1)).astype(np.int64)


def ceil_pow2(value: int) -> int:
    """Smallest power of two >= value (value >= 1)."""
    return 1 << (value - 1).bit_length()


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    raise ConfigError(f"expected a rational number, got {value!r}")


HASH_MODES = ("mixer", "paper_compat")


@dataclass(frozen=True)
class StoreConfig:
    """Sizing and behavior knobs shared by the hash-backed stores.

    max_load_factor governs initial sizing: the initial slot capacity is
    the smallest power of two >= expected_edges / max_load_factor, never
    below MIN_CAPACITY. growth_threshold is the occupancy fraction whose
    crossing triggers a doubling rebuild (when growth_enabled).
    """

    vertex_count: int
    expected_edges: int
    max_load_factor: Fraction = Fraction(1, 2)
    growth_threshold: Fraction = Fraction(7, 10)
    growth_enabled: bool = True
    hash_mode: str = "mixer"
    weighted: bool = False

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ConfigError("vertex_count must be positive")
        if self.vertex_count > 1 << 32:
            raise ConfigError("vertex ids are limited to 32 bits")
        if self.expected_edges < 1:
            raise ConfigError("expected_edges must be positive")
        object.__setattr__(self, "max_load_factor", _as_fraction(self.max_load_factor))
        object.__setattr__(self, "growth_threshold", _as_fraction(self.growth_threshold))
        if not (0 < self.max_load_factor < self.growth_threshold < 1):
            raise ConfigError(
                "need 0 < max_load_factor < growth_threshold < 1, got "
                f"{self.max_load_factor} and {self.growth_threshold}"
            )
        if self.hash_mode not in HASH_MODES:
            raise ConfigError(f"hash_mode must be one of {HASH_MODES}, got {self.hash_mode!r}")

    @property
    def initial_capacity(self) -> int:
        mlf = self.max_load_factor
        needed = -(-self.expected_edges * mlf.denominator // mlf.numerator)
        return max(MIN_CAPACITY, ceil_pow2(needed))

    def growth_limit(self, capacity: int) -> int:
        """Largest occupied count that does not force a rebuild at this capacity."""
        thr = self.growth_threshold
        return thr.numerator * capacity // thr.denominator


class EdgeStore(abc.ABC):
    """Contract shared by every store: a *set* of directed edges.

    After any operation sequence, ``contains(x, y)`` is true iff some
    ``add_edge(x, y)`` occurred. There is no removal.
    """

    __slots__ = ()

    @abc.abstractmethod
    def add_edge(self, x: int, y: int) -> bool:
        """Insert (x, y); returns True if the edge is new, False on duplicate."""

    @abc.abstractmethod
    def contains(self, x: int, y: int) -> bool:
        """True iff (x, y) was ever added."""

    @abc.abstractmethod
    def neighbors(self, x: int) -> list[int]:
        """Targets of x's outgoing edges, in the store's enumeration order."""

    @property
    @abc.abstractmethod
    def edge_count(self) -> int:
        """Number of distinct edges accepted so far."""

    @property
    @abc.abstractmethod
    def vertex_count(self) -> int:
        """Declared vertex count n; valid ids are 0..n-1."""
