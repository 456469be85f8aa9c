"""Growth rebuilds and the linear-memory guarantee.

A fused store seeded with a tiny capacity doubles whenever occupancy
would cross the growth threshold. Rebuilds are observable only through
the capacity: membership answers, enumeration order, and stored weights
all read back unchanged. Allocated slots stay within 2*E/max_load_factor
(power-of-two rounded), which is the linear-memory bound.
"""

from graphstores import HashList, Lcg64, StoreConfig

cfg = StoreConfig(vertex_count=500, expected_edges=1, weighted=True)
store = HashList(cfg)
rng = Lcg64(0xD1CE)

print(f"growth threshold: {cfg.growth_threshold}, initial capacity: {store.capacity}")
print(f"{'edges':>6} {'capacity':>9} {'load':>6} {'rebuilds':>9}")

snapshots = []
added = 0
while added < 3000:
    x, y = rng.next_below(500), rng.next_below(500)
    before_cap = store.capacity
    if store.add_edge(x, y):
        store.set_weight(x, y, float(added))
        added += 1
    if store.capacity != before_cap:
        print(f"{store.edge_count:>6} {store.capacity:>9} {store.load_factor:>6.2f} "
              f"{store.rebuilds:>9}")
    if added in (100, 1000, 3000) and len(snapshots) < 3:
        snapshots.append((added, store.neighbors(7), store.get_weight(x, y)))

print("\nenumeration order sampled after 100/1000/3000 edges, then re-read now:")
for edges, nbrs, _ in snapshots:
    current = store.neighbors(7)
    prefix_intact = current[-len(nbrs):] == nbrs if nbrs else True
    print(f"  after {edges:>5} edges neighbors(7) started {nbrs[:6]}... "
          f"still a suffix of today's chain: {prefix_intact}")

mlf = cfg.max_load_factor
bound = 2 * store.edge_count * mlf.denominator // mlf.numerator
print(f"\nmemory check: capacity {store.capacity} <= 2*E/max_load = {bound}:",
      store.capacity <= bound)
print("total ints allocated (heads + 3 slot arrays + weights):", store.memory_ints())

print("\none more manual doubling changes nothing observable:")
sample = [(rng.next_below(500), rng.next_below(500)) for _ in range(5000)]
before = [store.contains(x, y) for x, y in sample]
store.grow()
after = [store.contains(x, y) for x, y in sample]
print("  5000 membership answers identical after grow():", before == after)
