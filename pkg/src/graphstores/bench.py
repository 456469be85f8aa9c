"""Workload generation, differential execution, and operation-count reports.

Complexity claims are validated by counting probes and traversals, never by
asserting on wall time; the clock is reported for context only. Workloads
are generated by a self-contained 64-bit linear congruential generator so
that a (spec, seed) pair reproduces the identical operation stream on any
platform or language:

    state' = state * 6364136223846793005 + 1442695040888963407  (mod 2**64)

with the high 32 bits of the state as each draw, and bounded draws taken by
the multiply-shift reduction ``(u64 * n) >> 64``.

Every structure in a run executes the same operation stream; answers are
compared as the run proceeds, and any disagreement aborts with a
bisection-minimized failing stream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from time import perf_counter_ns
from typing import Callable, Sequence

from .core import ConfigError, GraphStoreError, StoreConfig, U64_MASK
from .edgehash import EdgeHash
from .hashlist import HashList
from .multilist import MultiList
from .oracle import ORACLE_MAX_VERTICES, OracleGraph

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407

STRUCTURE_NAMES = ("hashlist", "multilist", "edgehash", "oracle")
GENERATORS = ("uniform", "star", "grid")
OPERATIONS = ("add", "contains", "enumerate")

CSV_HEADER = "structure,operation,count_ops,mean_counter,max_counter,wall_ns,slots_allocated"

#: Rejection budget when sampling an absent edge before falling back.
_MISS_TRIES = 256


class Lcg64:
    """Seeded 64-bit LCG (constants above); deterministic across platforms."""

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & U64_MASK

    def next_u64(self) -> int:
        self._state = (self._state * LCG_MULTIPLIER + LCG_INCREMENT) & U64_MASK
        return self._state

    def next_u32(self) -> int:
        return self.next_u64() >> 32

    def next_below(self, n: int) -> int:
        """Uniform draw in [0, n) via multiply-shift reduction."""
        return (self.next_u64() * n) >> 64


@dataclass(frozen=True)
class WorkloadSpec:
    """A reproducible operation stream: generator shape, sizes, mix, seed.

    ``m`` is the total operation budget; the add fraction of the mix decides
    how many of those are insertions. mix = (add, contains-hit,
    contains-miss, enumerate) fractions, summing to 1.
    """

    generator: str
    n: int
    m: int
    mix: tuple[float, float, float, float] = (0.6, 0.2, 0.15, 0.05)
    seed: int = 1

    def __post_init__(self) -> None:
        if self.generator not in GENERATORS:
            raise ConfigError(f"generator must be one of {GENERATORS}, got {self.generator!r}")
        if self.n < 1:
            raise ConfigError("n must be positive")
        if self.generator == "star" and self.n < 2:
            raise ConfigError("star workloads need at least 2 vertices")
        if self.generator == "grid" and math.isqrt(self.n) < 2:
            raise ConfigError("grid workloads need at least 4 vertices")
        if self.m < 0:
            raise ConfigError("m must be nonnegative")
        if len(self.mix) != 4 or any(f < 0 for f in self.mix):
            raise ConfigError("mix must be four nonnegative fractions")
        if abs(sum(self.mix) - 1.0) > 1e-9:
            raise ConfigError(f"mix fractions must sum to 1, got {sum(self.mix)}")
        if not 0 <= self.seed <= U64_MASK:
            raise ConfigError("seed must fit in 64 bits")


def generate_ops(spec: WorkloadSpec) -> list[tuple]:
    """The deterministic operation stream for a spec.

    Ops are ``("add", x, y)``, ``("has", x, y)``, ``("nbrs", x)``. A
    contains-hit drawn before any edge exists degrades to a miss, and a
    miss that cannot find an absent pair within the rejection budget
    degrades to an enumerate, so every stream is well-formed for any mix.
    """
    rng = Lcg64(spec.seed)
    n = spec.n

    acc = 0.0
    cut = []
    for frac in spec.mix:
        acc += frac
        cut.append(min(int(round(acc * (1 << 32))), 1 << 32))
    cut[-1] = 1 << 32

    if spec.generator == "uniform":
        def sample_add() -> tuple[int, int]:
            return rng.next_below(n), rng.next_below(n)
    elif spec.generator == "star":
        def sample_add() -> tuple[int, int]:
            return 0, 1 + rng.next_below(n - 1)
    else:  # grid: torus with right/down neighbors, vertices 0..side*side-1
        side = math.isqrt(n)

        def sample_add() -> tuple[int, int]:
            v = rng.next_below(side * side)
            row, col = divmod(v, side)
            if rng.next_below(2):
                return v, row * side + (col + 1) % side
            return v, ((row + 1) % side) * side + col

    def sample_miss() -> tuple[int, int] | None:
        for _ in range(_MISS_TRIES):
            if spec.generator == "star":
                pair = 0, 1 + rng.next_below(n - 1)
            else:
                pair = rng.next_below(n), rng.next_below(n)
            if pair not in present_set:
                return pair
        if spec.generator == "star" and n >= 2:
            return 1 + rng.next_below(n - 1), 0  # star never adds edges out of spokes
        return None

    present_list: list[tuple[int, int]] = []
    present_set: set[tuple[int, int]] = set()
    ops: list[tuple] = []

    for _ in range(spec.m):
        r = rng.next_u32()
        if r < cut[0]:
            kind = 0
        elif r < cut[1]:
            kind = 1
        elif r < cut[2]:
            kind = 2
        else:
            kind = 3

        if kind == 1 and not present_list:
            kind = 2
        if kind == 2:
            pair = sample_miss()
            if pair is None:
                kind = 3

        if kind == 0:
            pair = sample_add()
            ops.append(("add", pair[0], pair[1]))
            if pair not in present_set:
                present_set.add(pair)
                present_list.append(pair)
        elif kind == 1:
            pair = present_list[rng.next_below(len(present_list))]
            ops.append(("has", pair[0], pair[1]))
        elif kind == 2:
            ops.append(("has", pair[0], pair[1]))
        else:
            ops.append(("nbrs", rng.next_below(n)))

    return ops


@dataclass(frozen=True)
class BenchRow:
    structure: str
    operation: str
    count_ops: int
    mean_counter: float
    max_counter: int
    wall_ns: int
    slots_allocated: int

    def csv_line(self) -> str:
        return (
            f"{self.structure},{self.operation},{self.count_ops},"
            f"{self.mean_counter:.6f},{self.max_counter},{self.wall_ns},{self.slots_allocated}"
        )


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)

    def to_csv(self) -> str:
        lines = [CSV_HEADER]
        lines.extend(row.csv_line() for row in self.rows)
        return "\n".join(lines) + "\n"

    def find(self, structure: str, operation: str) -> BenchRow:
        for row in self.rows:
            if row.structure == structure and row.operation == operation:
                return row
        raise KeyError((structure, operation))


class DifferentialMismatch(GraphStoreError):
    """Structures disagreed on an answer; carries a minimized failing stream."""

    def __init__(self, ops: list[tuple], index: int, op: tuple, answers: list[tuple[str, object]]):
        self.ops = ops
        self.index = index
        self.op = op
        self.answers = answers
        shown = ", ".join(repr(o) for o in ops[:20])
        if len(ops) > 20:
            shown += f", ... ({len(ops) - 20} more)"
        got = "; ".join(f"{name}={value!r}" for name, value in answers)
        super().__init__(
            f"structures disagree on {op!r} (op {index} of minimized stream): {got}\n"
            f"minimized stream ({len(ops)} ops): [{shown}]"
        )


def _build_stores(spec: WorkloadSpec, structures: Sequence[str], hash_mode: str, adds: int):
    stores = []
    for name in structures:
        if name == "multilist":
            store = MultiList(spec.n, adds)
        elif name == "oracle":
            store = OracleGraph(spec.n)
        else:
            cfg = StoreConfig(
                vertex_count=spec.n, expected_edges=max(1, adds), hash_mode=hash_mode
            )
            store = HashList(cfg) if name == "hashlist" else EdgeHash(cfg)
        stores.append((name, store))
    return stores


def _execute(ops, stores, wall=None):
    """Run the stream against every store, comparing answers op by op.

    Returns None on full agreement, else (index, op, answers). ``wall``
    optionally accumulates per-(structure, class) nanoseconds.
    """
    timing = wall is not None
    for index, op in enumerate(ops):
        kind = op[0]
        answers = []
        if kind == "nbrs":
            x = op[1]
            for name, store in stores:
                if name == "edgehash":
                    continue  # no per-vertex enumeration on the bare table
                if timing:
                    t0 = perf_counter_ns()
                if name == "oracle":
                    ans = store.neighbors_newest_first(x)
                else:
                    ans = store.neighbors(x)
                if timing:
                    wall[name, "enumerate"] += perf_counter_ns() - t0
                answers.append((name, ans))
        else:
            x, y = op[1], op[2]
            cls = "add" if kind == "add" else "contains"
            for name, store in stores:
                if timing:
                    t0 = perf_counter_ns()
                ans = store.add_edge(x, y) if kind == "add" else store.contains(x, y)
                if timing:
                    wall[name, cls] += perf_counter_ns() - t0
                answers.append((name, ans))
        if len(answers) > 1:
            base = answers[0][1]
            for _, other in answers[1:]:
                if other != base:
                    return index, op, answers
    return None


def _minimize(ops: list[tuple], fails: Callable[[list[tuple]], bool]) -> list[tuple]:
    """Shrink a failing stream by chunked bisection while it keeps failing."""
    current = list(ops)
    granularity = 2
    while len(current) >= 2:
        chunk = -(-len(current) // granularity)
        reduced = False
        for start in range(0, len(current), chunk):
            candidate = current[:start] + current[start + chunk:]
            if candidate and fails(candidate):
                current = candidate
                granularity = max(granularity - 1, 2)
                reduced = True
                break
        if not reduced:
            if granularity >= len(current):
                break
            granularity = min(len(current), granularity * 2)
    return current


def run_workload(
    spec: WorkloadSpec,
    structures: Sequence[str] = ("hashlist", "multilist", "edgehash"),
    hash_mode: str = "mixer",
) -> BenchReport:
    """Execute one spec against the selected structures and report counters.

    Raises :class:`DifferentialMismatch` if any two structures ever
    disagree; the exception carries a minimized failing stream.
    """
    structures = tuple(structures)
    for name in structures:
        if name not in STRUCTURE_NAMES:
            raise ConfigError(f"unknown structure {name!r}; choose from {STRUCTURE_NAMES}")
    if len(set(structures)) != len(structures):
        raise ConfigError("duplicate structure selection")
    if "oracle" in structures and spec.n > ORACLE_MAX_VERTICES:
        raise ConfigError(f"oracle is capped at {ORACLE_MAX_VERTICES} vertices, got n={spec.n}")

    ops = generate_ops(spec)
    adds = sum(1 for op in ops if op[0] == "add")
    stores = _build_stores(spec, structures, hash_mode, adds)
    wall = {(name, cls): 0 for name, _ in stores for cls in OPERATIONS}

    mismatch = _execute(ops, stores, wall)
    if mismatch is not None:
        index = mismatch[0]

        def fails(candidate: list[tuple]) -> bool:
            fresh = _build_stores(spec, structures, hash_mode, adds)
            return _execute(candidate, fresh) is not None

        minimized = _minimize(ops[: index + 1], fails)
        fresh = _build_stores(spec, structures, hash_mode, adds)
        final = _execute(minimized, fresh)
        raise DifferentialMismatch(minimized, final[0], final[1], final[2])

    report = BenchReport()
    for name, store in stores:
        for cls in OPERATIONS:
            channel = store.counters.channel(cls)
            report.rows.append(
                BenchRow(
                    structure=name,
                    operation=cls,
                    count_ops=channel.ops,
                    mean_counter=channel.mean,
                    max_counter=channel.peak,
                    wall_ns=wall[name, cls],
                    slots_allocated=store.slots_allocated,
                )
            )
    return report


def scaling_sweep(
    base: WorkloadSpec,
    factors: Sequence[int],
    structures: Sequence[str] = ("hashlist", "multilist", "edgehash"),
    hash_mode: str = "mixer",
) -> list[tuple[int, BenchReport]]:
    """Run the base spec at several operation budgets (m scaled by factor).

    Store capacities are derived from each run's own add count, so the
    hash structures sit at the same load factor at every size; flat mean
    probe counts across factors are the constant-cost witness, while list
    scans grow with the mean degree.
    """
    results = []
    for factor in factors:
        if factor < 1:
            raise ConfigError("sweep factors must be >= 1")
        spec = replace(base, m=base.m * factor)
        results.append((factor, run_workload(spec, structures, hash_mode)))
    return results
