"""Membership cost: degree-independent probing vs chain scanning.

Builds star graphs of increasing center degree and queries random spokes.
The fused store answers in a couple of slot probes no matter the degree;
the adjacency list walks half the chain on average, so its cost tracks
the degree linearly. Counters, not wall clocks, make the contrast exact.
"""

import numpy as np

from graphstores import HashList, Lcg64, MultiList, StoreConfig

QUERIES = 1000

print(f"{'degree':>8} | {'hash probes (mean/max)':>24} | {'list traversals (mean/max)':>28}")
print("-" * 70)

for degree in (500, 1000, 2000, 4000, 8000):
    n = degree + 1
    hl = HashList(StoreConfig(vertex_count=n, expected_edges=degree))
    ml = MultiList(n, degree)
    for y in range(1, degree + 1):
        hl.add_edge(0, y)
        ml.add_edge(0, y)

    rng = Lcg64(degree)
    targets = [1 + rng.next_below(degree) for _ in range(QUERIES)]
    hl.counters.reset()
    ml.counters.reset()
    for y in targets:
        assert hl.contains(0, y) and ml.contains(0, y)

    h, l = hl.counters.contains, ml.counters.contains
    print(f"{degree:>8} | {h.mean:>16.2f} / {h.peak:<5} | {l.mean:>19.1f} / {l.peak:<6}")

print("\nhalf the chain on average is exactly what uniform queries predict:")
degrees = np.array([500, 1000, 2000, 4000, 8000])
print("  expected list means ~ degree/2 =", (degrees / 2).tolist())
