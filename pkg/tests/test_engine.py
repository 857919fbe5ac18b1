import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nimors.engine import (
    Analysis,
    MemoTable,
    NoMovesError,
    analyze,
    best_move,
    classify,
    mex,
    nim_sum,
    nim_value,
    nim_value_bruteforce,
)
from nimors.families import (
    cycle_graph,
    fused_cycle_graph,
    path_graph,
    petersen_graph,
    triangular_prism_graph,
)
from nimors.graph import Action, Graph, Move, blocks
from nimors.theory import Outcome

from conftest import all_graphs, random_graph, random_permutation

TRIANGLE_PLUS_PENDANT = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


class TestMexNimSum:
    def test_mex_examples(self):
        assert mex(set()) == 0
        assert mex({0, 1}) == 2
        assert mex({1, 2}) == 0

    def test_nim_sum_examples(self):
        assert nim_sum([1, 1]) == 0
        assert nim_sum([2, 1]) == 3
        assert nim_sum([]) == 0

    @settings(max_examples=200, deadline=None)
    @given(st.sets(st.integers(min_value=0, max_value=40)))
    def test_mex_is_least_absent(self, values):
        r = mex(values)
        assert r not in values
        assert all(k in values for k in range(r))
        assert r <= len(values)

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.integers(min_value=0, max_value=1 << 20)))
    def test_nim_sum_bounded_by_ordinary_sum(self, values):
        assert nim_sum(values) <= sum(values)


class TestNimValue:
    def test_named_positions(self, memo):
        assert nim_value(cycle_graph(3), memo) == 2
        assert nim_value(cycle_graph(4), memo) == 0
        assert nim_value(fused_cycle_graph(3, 4), memo) == 4
        assert nim_value(TRIANGLE_PLUS_PENDANT, memo) == 3
        assert nim_value(path_graph(2), memo) == 0
        assert nim_value(Graph(3), memo) == 0

    def test_bruteforce_examples(self, brute_memo):
        assert nim_value_bruteforce(cycle_graph(4), brute_memo) == 0
        assert nim_value_bruteforce(path_graph(2), brute_memo) == 0

    def test_oracle_equivalence_exhaustive_n5(self, memo, brute_memo):
        for n in range(1, 6):
            for g in all_graphs(n):
                assert nim_value(g, memo) == nim_value_bruteforce(g, brute_memo)

    def test_oracle_equivalence_random_n6(self, memo, brute_memo):
        rng = random.Random(7)
        for _ in range(200):
            g = random_graph(6, rng)
            assert nim_value(g, memo) == nim_value_bruteforce(g, brute_memo)

    @pytest.mark.extended
    def test_oracle_equivalence_exhaustive_n6(self, memo, brute_memo):
        for g in all_graphs(6):
            assert nim_value(g, memo) == nim_value_bruteforce(g, brute_memo)

    def test_fast_paths_off_matches_on(self, memo):
        rng = random.Random(13)
        plain = MemoTable()
        for _ in range(60):
            g = random_graph(6, rng, p=0.4)
            assert nim_value(g, memo) == nim_value(g, plain, fast_paths=False)

    def test_block_additivity(self, brute_memo):
        rng = random.Random(19)
        checked = 0
        for _ in range(300):
            g = random_graph(8, rng, p=0.2)
            bs = blocks(g)
            if len(bs) < 2 or g.m > 12:
                continue
            checked += 1
            assert nim_value_bruteforce(g, brute_memo) == nim_sum(
                nim_value_bruteforce(b, brute_memo) for b in bs
            )
        assert checked > 30

    def test_block_additivity_engine_recursion(self, memo):
        # with closed forms off the solver is forced down the
        # decomposition path; it must agree with per-block solving
        rng = random.Random(21)
        checked = 0
        for _ in range(200):
            g = random_graph(8, rng, p=0.3)
            bs = blocks(g)
            if len(bs) < 2:
                continue
            checked += 1
            whole = nim_value(g, MemoTable(), fast_paths=False)
            assert whole == nim_sum(nim_value(b, memo) for b in bs)
        assert checked > 50

    def test_edge_bound(self, memo):
        rng = random.Random(23)
        for _ in range(300):
            g = random_graph(7, rng)
            v = nim_value(g, memo)
            assert v <= g.m
            if g.m >= 2:
                assert v < g.m

    def test_isolated_vertices_ignored(self, memo):
        g = Graph(6, [(1, 3), (3, 5), (1, 5)])
        assert nim_value(g, memo) == 2

    def test_permutation_invariance(self, memo):
        rng = random.Random(29)
        for _ in range(100):
            g = random_graph(7, rng)
            v = nim_value(g, memo)
            perm = random_permutation(7, rng)
            assert nim_value(g.permuted(perm), memo) == v

    def test_cold_and_warm_caches_agree(self):
        rng = random.Random(31)
        graphs = [random_graph(6, rng) for _ in range(40)]
        warm = MemoTable()
        first = [nim_value(g, warm) for g in graphs]
        again = [nim_value(g, warm) for g in graphs]
        cold = [nim_value(g, MemoTable()) for g in graphs]
        assert first == again == cold

    def test_petersen(self, memo):
        assert nim_value(petersen_graph(), memo) == 1

    def test_prism(self, memo):
        assert nim_value(triangular_prism_graph(), memo) == 0


class TestClassify:
    def test_examples(self, memo):
        assert classify(Graph(4), memo) is Outcome.P_POSITION
        assert classify(cycle_graph(3), memo) is Outcome.N_POSITION
        assert classify(cycle_graph(4), memo) is Outcome.P_POSITION

    def test_matches_value(self, memo):
        rng = random.Random(37)
        for _ in range(100):
            g = random_graph(6, rng)
            expected = (
                Outcome.P_POSITION if nim_value(g, memo) == 0 else Outcome.N_POSITION
            )
            assert classify(g, memo) is expected


class TestAnalyze:
    def test_triangle(self, memo):
        result = analyze(cycle_graph(3), memo)
        assert result.value == 2
        assert len(result.per_move) == 6
        assert {v for _, v in result.per_move} == {0, 1}

    def test_fused_cycle_33(self, memo):
        result = analyze(fused_cycle_graph(3, 3), memo)
        assert result.value == 1
        assert {v for _, v in result.per_move} == {0, 2, 3}

    def test_edgeless(self, memo):
        result = analyze(Graph(2), memo)
        assert result == Analysis(value=0, per_move=[])

    def test_value_is_mex_of_per_move_values(self, memo):
        rng = random.Random(41)
        for _ in range(50):
            g = random_graph(6, rng)
            result = analyze(g, memo)
            assert result.value == nim_value(g, memo)
            assert result.value == mex({v for _, v in result.per_move})


class TestBestMove:
    def test_no_moves(self, memo):
        with pytest.raises(NoMovesError):
            best_move(Graph(3), memo)

    def test_k2_least_move(self, memo):
        assert best_move(Graph(2, [(0, 1)]), memo) == Move((0, 1), Action.DELETE)

    def test_triangle_moves_to_two_edge_path(self, memo):
        # deleting leaves the 2-edge path (value 0); contracting leaves a
        # single edge (value 1); so the winning move deletes the least edge
        mv = best_move(cycle_graph(3), memo)
        assert mv == Move((0, 1), Action.DELETE)
        child = cycle_graph(3).apply(mv)
        assert (child.n, child.m) == (3, 2)
        assert nim_value(child, memo) == 0

    def test_winning_move_reaches_zero(self, memo, brute_memo):
        rng = random.Random(43)
        checked = 0
        for _ in range(300):
            g = random_graph(5, rng)
            if g.m == 0 or nim_value(g, memo) == 0:
                continue
            checked += 1
            child = g.apply(best_move(g, memo))
            assert nim_value_bruteforce(child, brute_memo) == 0
        assert checked > 100

    def test_lost_position_returns_defined_move(self, memo):
        g = cycle_graph(4)
        mv = best_move(g, memo)
        assert mv in g.moves()
        # deterministic
        assert best_move(cycle_graph(4), MemoTable()) == mv
