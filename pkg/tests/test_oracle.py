import random
import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eqarbor import (
    CapExceeded,
    FailureKind,
    TreeColoring,
    classify_regime,
    equitable_tree_coloring,
    exact_a_eq,
    exists_equitable_k_tree_coloring,
    find_equitable_coloring,
    gamma,
    gen_random,
    sweep_conjecture,
    verify,
)
from eqarbor.construct import Regime
from eqarbor.oracle import (
    SweepReport,
    brute_matching_size,
    graph_from_mask,
    mask_of_graph,
    pair_count,
)
from helpers import (
    complete,
    complete_bipartite,
    cycle,
    empty,
    oracle_is_forest,
    path_graph,
    random_graph,
    star,
)

graphs = st.integers(min_value=1, max_value=7).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, (1 << pair_count(n)) - 1))
).map(lambda t: graph_from_mask(*t))


class TestVerify:
    def test_good_pairs_on_k4(self):
        rep = verify(complete(4), TreeColoring(4, (0b0011, 0b1100)))
        assert rep.ok and rep.class_count == 2 and rep.size_histogram == {2: 2}

    def test_triangle_class_flagged(self):
        rep = verify(complete(4), TreeColoring(4, (0b0111, 0b1000)))
        kinds = {(i, k) for i, k in rep.failures}
        assert (0, FailureKind.NOT_FOREST) in kinds
        assert (0, FailureKind.NOT_EQUITABLE) in kinds
        assert (1, FailureKind.NOT_EQUITABLE) in kinds
        assert not rep.ok

    def test_star_strict_vs_lax(self):
        g = star(4)
        lax = verify(g, TreeColoring(4, (0b1111,)))
        assert lax.ok and lax.linear_violations == (0,)
        strict = verify(g, TreeColoring(4, (0b1111,)), strict_linear=True)
        assert not strict.ok
        assert (0, FailureKind.NOT_LINEAR_FOREST) in strict.failures

    def test_overlap_and_gap_flagged(self):
        rep = verify(complete(4), TreeColoring(4, (0b0011, 0b0110)))
        assert (1, FailureKind.NOT_PARTITION) in rep.failures
        assert (-1, FailureKind.NOT_PARTITION) in rep.failures

    def test_order_mismatch_rejected(self):
        with pytest.raises(ValueError):
            verify(complete(4), TreeColoring(5, (0b11111,)))

    def test_report_text(self):
        rep = verify(complete(4), TreeColoring(4, (0b0011, 0b1100)))
        assert rep.to_text() == "ok yes\nclasses 2\nsize 2 x 2\n"

    @given(graphs)
    def test_agrees_with_counting_oracle(self, g):
        coloring = None
        try:
            coloring = equitable_tree_coloring(g)
        except Exception:
            return
        rep = verify(g, coloring)
        assert rep.ok
        for mask in coloring.classes:
            members = {v for v in range(g.n) if mask >> v & 1}
            assert oracle_is_forest(g, members)


class TestExactOracle:
    def test_k4_decisions(self):
        g = complete(4)
        assert exists_equitable_k_tree_coloring(g, 2)
        assert not exists_equitable_k_tree_coloring(g, 1)

    def test_c5_decisions(self):
        g = cycle(5)
        assert not exists_equitable_k_tree_coloring(g, 1)
        w = find_equitable_coloring(g, 2)
        assert w is not None and verify(g, w).ok
        assert sorted(m.bit_count() for m in w.classes) == [2, 3]

    def test_witness_passes_verify(self):
        g = complete_bipartite(3, 3)
        w = find_equitable_coloring(g, 2)
        assert w is not None and verify(g, w).ok

    def test_complete_graphs_sharp(self):
        for n in range(2, 9):
            assert exact_a_eq(complete(n)) == (n + 1) // 2

    def test_forests_are_one(self):
        assert exact_a_eq(star(6)) == 1
        assert exact_a_eq(path_graph(7)) == 1
        assert exact_a_eq(empty(5)) == 1

    def test_k33(self):
        assert exact_a_eq(complete_bipartite(3, 3)) == 2

    def test_cap(self):
        with pytest.raises(CapExceeded):
            exact_a_eq(empty(13))
        with pytest.raises(CapExceeded):
            find_equitable_coloring(empty(13), 2)

    def test_cap_override_warns(self):
        with pytest.warns(RuntimeWarning):
            assert exact_a_eq(empty(13), cap=13) == 1

    def test_k_range_validated(self):
        with pytest.raises(ValueError):
            find_equitable_coloring(complete(3), 0)
        with pytest.raises(ValueError):
            find_equitable_coloring(complete(3), 4)

    @given(graphs)
    def test_bound_holds_at_small_order(self, g):
        assert exact_a_eq(g) <= gamma(g)

    @given(graphs)
    def test_construction_never_beats_oracle(self, g):
        if 2 * max(row.bit_count() for row in g.adj) < g.n:
            return
        coloring = equitable_tree_coloring(g)
        assert exact_a_eq(g) <= len(coloring.classes) == gamma(g)


class TestSweep:
    def test_n4_regime_only(self):
        rep = sweep_conjecture(4, regime_only=True)
        assert rep.ok and rep.graphs_tested == 64
        expected_in_regime = sum(
            1
            for mask in range(64)
            if 2 * max(r.bit_count() for r in graph_from_mask(4, mask).adj) >= 4
        )
        assert rep.in_regime == expected_in_regime == 54

    def test_n5_full(self):
        rep = sweep_conjecture(5, regime_only=False)
        assert rep.ok and rep.graphs_tested == 1024

    def test_n1(self):
        rep = sweep_conjecture(1, regime_only=False)
        assert rep.ok and rep.graphs_tested == 1

    def test_cap(self):
        with pytest.raises(CapExceeded):
            sweep_conjecture(8)

    def test_parallel_matches_sequential(self):
        # n=6 crosses the chunking threshold, so threads=2 really uses workers
        seq = sweep_conjecture(6, regime_only=True, threads=1)
        par = sweep_conjecture(6, regime_only=True, threads=2)
        assert seq == par and seq.ok

    def test_threads_env_cap(self, monkeypatch):
        from eqarbor.oracle import _resolve_threads

        monkeypatch.setenv("ARBOR_THREADS", "1")
        assert _resolve_threads(None) == 1

    def test_report_text(self):
        rep = SweepReport(4, 64, 54)
        assert rep.to_text() == "SWEEP n=4 tested=64 regime=54 failures=0\n"
        rep = SweepReport(4, 64, 54, construction_failures=(255,))
        assert rep.to_text() == "FAIL ff\nSWEEP n=4 tested=64 regime=54 failures=1\n"


class TestMaskCodec:
    @given(graphs)
    def test_round_trip(self, g):
        assert graph_from_mask(g.n, mask_of_graph(g)) == g

    def test_bit_order(self):
        # bit 0 is pair (0,1); bit n-2 is pair (0,n-1)
        g = graph_from_mask(4, 0b000001)
        assert list(g.edges()) == [(0, 1)]
        g = graph_from_mask(4, 0b000100)
        assert list(g.edges()) == [(0, 3)]


class TestGenRandom:
    def test_deterministic(self):
        assert gen_random(10, 1) == gen_random(10, 1)

    def test_seed_changes_graph(self):
        assert gen_random(10, 1) != gen_random(10, 2)

    def test_degree_floor(self):
        for seed in range(20):
            g = gen_random(10, seed)
            assert max(r.bit_count() for r in g.adj) >= 5

    def test_always_in_regime_at_n50(self):
        for seed in range(1000):
            g = gen_random(50, seed)
            assert classify_regime(g).regime is not Regime.OUT_OF_SCOPE

    def test_rejects_tiny(self):
        with pytest.raises(ValueError):
            gen_random(1, 0)


class TestBruteMatching:
    def test_matches_edge_recursion(self):
        rng = random.Random(9)
        from helpers import oracle_matching_size

        for _ in range(100):
            g = random_graph(rng, rng.randint(1, 8), rng.uniform(0.1, 0.9))
            assert brute_matching_size(g) == oracle_matching_size(g)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            brute_matching_size(empty(21))
