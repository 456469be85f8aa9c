from __future__ import annotations

import pytest

import graphstores.bench as bench_module
from graphstores import (
    CSV_HEADER,
    ConfigError,
    DifferentialMismatch,
    HashList,
    Lcg64,
    WorkloadSpec,
    generate_ops,
    run_workload,
    scaling_sweep,
)

from _reference import EdgeSetOracle


class TestLcg64:
    def test_reproducible(self):
        a, b = Lcg64(12345), Lcg64(12345)
        assert [a.next_u64() for _ in range(100)] == [b.next_u64() for _ in range(100)]

    def test_constants_pinned(self):
        # first step of the documented recurrence, computed independently
        seed = 42
        expected = (seed * 6364136223846793005 + 1442695040888963407) % 2**64
        assert Lcg64(seed).next_u64() == expected

    def test_next_below_range(self):
        rng = Lcg64(7)
        draws = [rng.next_below(13) for _ in range(5000)]
        assert set(draws) == set(range(13))


class TestWorkloadSpec:
    def test_valid(self):
        WorkloadSpec("uniform", n=10, m=100)

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(generator="ring", n=10, m=10),
            dict(generator="uniform", n=0, m=10),
            dict(generator="star", n=1, m=10),
            dict(generator="grid", n=3, m=10),
            dict(generator="uniform", n=10, m=-1),
            dict(generator="uniform", n=10, m=10, mix=(0.5, 0.5, 0.5, 0.5)),
            dict(generator="uniform", n=10, m=10, mix=(1.5, -0.5, 0, 0)),
            dict(generator="uniform", n=10, m=10, seed=2**64),
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ConfigError):
            WorkloadSpec(**kwargs)


class TestGenerateOps:
    def test_byte_for_byte_determinism(self):
        spec = WorkloadSpec("uniform", n=50, m=5000, seed=99)
        assert repr(generate_ops(spec)) == repr(generate_ops(spec))

    def test_different_seeds_differ(self):
        a = generate_ops(WorkloadSpec("uniform", n=50, m=500, seed=1))
        b = generate_ops(WorkloadSpec("uniform", n=50, m=500, seed=2))
        assert a != b

    def test_stream_well_formed(self):
        spec = WorkloadSpec("uniform", n=30, m=4000, seed=4)
        ops = generate_ops(spec)
        assert len(ops) == 4000
        shadow = EdgeSetOracle(30)
        for op in ops:
            if op[0] == "add":
                shadow.add(op[1], op[2])
            elif op[0] == "nbrs":
                assert 0 <= op[1] < 30
            else:
                assert op[0] == "has"
            for v in op[1:]:
                assert 0 <= v < 30

    def test_hit_queries_target_present_edges(self):
        # replaying the shadow: every hit drawn from edges added earlier
        spec = WorkloadSpec("uniform", n=20, m=3000, mix=(0.3, 0.7, 0.0, 0.0), seed=5)
        ops = generate_ops(spec)
        shadow = EdgeSetOracle(20)
        for op in ops:
            if op[0] == "add":
                shadow.add(op[1], op[2])
            elif shadow.edges:
                assert shadow.has(op[1], op[2])

    def test_miss_queries_target_absent_edges(self):
        spec = WorkloadSpec("uniform", n=40, m=3000, mix=(0.3, 0.0, 0.7, 0.0), seed=6)
        shadow = EdgeSetOracle(40)
        for op in generate_ops(spec):
            if op[0] == "add":
                shadow.add(op[1], op[2])
            elif op[0] == "has":
                assert not shadow.has(op[1], op[2])

    def test_star_ops_center_out(self):
        for op in generate_ops(WorkloadSpec("star", n=50, m=1000, seed=3)):
            if op[0] == "add":
                assert op[1] == 0 and op[2] != 0

    def test_mix_fractions_respected(self):
        spec = WorkloadSpec("uniform", n=100, m=20_000, seed=8)
        ops = generate_ops(spec)
        adds = sum(1 for op in ops if op[0] == "add")
        nbrs = sum(1 for op in ops if op[0] == "nbrs")
        assert abs(adds / len(ops) - 0.6) < 0.02
        assert abs(nbrs / len(ops) - 0.05) < 0.01


class TestRunWorkload:
    @pytest.mark.parametrize("generator", ["uniform", "star", "grid"])
    def test_all_structures_agree(self, generator):
        spec = WorkloadSpec(generator, n=64, m=4000, seed=11)
        report = run_workload(spec, ("hashlist", "multilist", "edgehash", "oracle"))
        assert len(report.rows) == 4 * 3

    def test_compat_mode_agrees(self):
        spec = WorkloadSpec("uniform", n=64, m=3000, seed=12)
        run_workload(spec, ("hashlist", "multilist", "edgehash", "oracle"), hash_mode="paper_compat")

    def test_counter_determinism(self):
        spec = WorkloadSpec("uniform", n=80, m=5000, seed=13)
        a = run_workload(spec, ("hashlist", "multilist"))
        b = run_workload(spec, ("hashlist", "multilist"))
        strip = lambda rows: [
            (r.structure, r.operation, r.count_ops, r.mean_counter, r.max_counter, r.slots_allocated)
            for r in rows
        ]
        assert strip(a.rows) == strip(b.rows)

    def test_enumerate_counts_equal_across_list_stores(self):
        spec = WorkloadSpec("uniform", n=50, m=4000, seed=14)
        report = run_workload(spec, ("hashlist", "multilist", "oracle"))
        totals = {
            name: report.find(name, "enumerate")
            for name in ("hashlist", "multilist", "oracle")
        }
        base = totals["hashlist"]
        for row in totals.values():
            assert row.count_ops == base.count_ops
            assert row.mean_counter == base.mean_counter

    def test_uniform_hash_contains_cheap(self):
        spec = WorkloadSpec("uniform", n=1000, m=100_000, seed=19)
        report = run_workload(spec, ("hashlist", "edgehash"))
        assert report.find("hashlist", "contains").mean_counter <= 4.0
        assert report.find("edgehash", "contains").mean_counter <= 4.0

    def test_star_contrast_through_workload(self):
        # membership on the star center: chain scans grow with degree,
        # probing does not
        spec = WorkloadSpec("star", n=2001, m=5000, seed=20)
        report = run_workload(spec, ("hashlist", "multilist"))
        list_mean = report.find("multilist", "contains").mean_counter
        hash_mean = report.find("hashlist", "contains").mean_counter
        assert hash_mean <= 4.0
        assert list_mean >= 50 * hash_mean

    def test_enumerate_total_is_sum_of_degrees_seen(self):
        spec = WorkloadSpec("uniform", n=50, m=4000, seed=14)
        ops = generate_ops(spec)
        shadow = EdgeSetOracle(50)
        expected_total = 0
        expected_ops = 0
        for op in ops:
            if op[0] == "add":
                shadow.add(op[1], op[2])
            elif op[0] == "nbrs":
                expected_total += len(shadow.newest_first(op[1]))
                expected_ops += 1
        row = run_workload(spec, ("hashlist",)).find("hashlist", "enumerate")
        assert row.count_ops == expected_ops
        assert row.mean_counter == expected_total / expected_ops

    def test_unknown_structure_rejected(self):
        with pytest.raises(ConfigError):
            run_workload(WorkloadSpec("uniform", n=10, m=10), ("btree",))

    def test_oracle_size_cap(self):
        with pytest.raises(ConfigError):
            run_workload(WorkloadSpec("uniform", n=5000, m=10), ("oracle",))

    def test_csv_schema(self):
        spec = WorkloadSpec("uniform", n=30, m=500, seed=2)
        csv = run_workload(spec, ("hashlist",)).to_csv()
        lines = csv.strip().split("\n")
        assert lines[0] == CSV_HEADER
        assert len(lines) == 1 + 3
        assert all(len(line.split(",")) == 7 for line in lines[1:])


class TestScalingSweep:
    def test_flat_hash_costs_growing_list_costs(self):
        base = WorkloadSpec("uniform", n=500, m=10_000, seed=21)
        results = scaling_sweep(base, [1, 2, 4], ("hashlist", "multilist"))
        hash_adds = [rep.find("hashlist", "add").mean_counter for _, rep in results]
        list_contains = [rep.find("multilist", "contains").mean_counter for _, rep in results]
        spread = max(hash_adds) / min(hash_adds)
        assert spread <= 1.10
        # mean degree doubles with m, so list scans roughly double
        assert list_contains[2] > list_contains[0] * 2
        assert hash_adds[0] <= 3.0

    def test_rejects_bad_factor(self):
        with pytest.raises(ConfigError):
            scaling_sweep(WorkloadSpec("uniform", n=10, m=10), [0])


class TestMismatchShrinking:
    def test_broken_store_yields_minimized_stream(self, monkeypatch):
        # corrupt the build: membership lies whenever the target is even
        original = HashList.contains

        def lying_contains(self, x, y):
            answer = original(self, x, y)
            return False if y % 2 == 0 else answer

        monkeypatch.setattr(bench_module.HashList, "contains", lying_contains)
        spec = WorkloadSpec("uniform", n=30, m=3000, seed=17)
        with pytest.raises(DifferentialMismatch) as excinfo:
            run_workload(spec, ("hashlist", "multilist", "oracle"))
        err = excinfo.value
        # bisection should strip the stream to an add plus the lying query
        assert len(err.ops) <= 4
        assert err.op[0] == "has"
        answers = dict(err.answers)
        assert answers["hashlist"] != answers["oracle"]

    def test_message_mentions_stream(self, monkeypatch):
        monkeypatch.setattr(
            bench_module.HashList, "add_edge", lambda self, x, y: True
        )
        spec = WorkloadSpec("uniform", n=10, m=500, seed=18)
        with pytest.raises(DifferentialMismatch) as excinfo:
            run_workload(spec, ("hashlist", "oracle"))
        assert "minimized stream" in str(excinfo.value)
