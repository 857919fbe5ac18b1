import math
import random

import pytest

from nimors.canon import canonical_key
from nimors.engine import MemoTable, nim_value
from nimors.families import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    fused_cycle_graph,
    path_graph,
    petersen_graph,
)
from nimors.graph import Graph, girth, has_property_s, is_biconnected
from nimors.theory import (
    InvalidLengthError,
    InvalidParamsError,
    Outcome,
    PropertySViolatedError,
    acyclic_value,
    automorphisms,
    cycle_value,
    edge_orbit_bound,
    edge_orbit_count,
    fused_cycle_value,
    parity_heuristic_value,
    property_s_outcome,
)

from conftest import all_graphs, random_graph

TRIANGLE_PLUS_PENDANT = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


class TestClosedForms:
    def test_acyclic_parity(self):
        assert acyclic_value(0) == 0
        assert acyclic_value(1) == 1
        assert acyclic_value(7) == 1

    def test_cycle_values(self):
        assert cycle_value(3) == 2
        assert cycle_value(4) == 0
        assert cycle_value(9) == 1
        with pytest.raises(InvalidLengthError):
            cycle_value(2)

    def test_fused_cycle_values(self):
        assert fused_cycle_value(3, 3) == 1
        assert fused_cycle_value(3, 4) == 4
        assert fused_cycle_value(3, 7) == 2
        assert fused_cycle_value(3, 8) == 3
        assert fused_cycle_value(4, 5) == 0
        assert fused_cycle_value(4, 4) == 1
        with pytest.raises(InvalidParamsError):
            fused_cycle_value(4, 3)
        with pytest.raises(InvalidParamsError):
            fused_cycle_value(2, 5)

    def test_fused_cycle_builder_counts(self):
        for p, q in [(3, 3), (3, 4), (4, 4), (5, 9)]:
            g = fused_cycle_graph(p, q)
            assert (g.n, g.m) == (p + q - 2, p + q - 1)
            assert is_biconnected(g)

    def test_closed_forms_match_engine(self, memo):
        for k in range(3, 13):
            assert nim_value(cycle_graph(k), MemoTable(), fast_paths=False) == cycle_value(k)
        for m in range(0, 9):
            assert nim_value(path_graph(m), memo) == acyclic_value(m)

    def test_theorem_fused_cycles_vs_engine(self, memo):
        for p in range(3, 8):
            for q in range(p, 12):
                if p + q > 14:
                    continue
                g = fused_cycle_graph(p, q)
                assert nim_value(g, memo, fast_paths=False) == fused_cycle_value(p, q)


def _subdivide(g: Graph, rng: random.Random) -> Graph:
    """Subdivide every edge once or twice: the result always has the
    separation property."""
    edges = []
    n = g.n
    for u, v in g.edges():
        inner = [n + i for i in range(rng.randint(1, 2))]
        n += len(inner)
        chain = [u] + inner + [v]
        edges += list(zip(chain, chain[1:]))
    return Graph(n, edges)


class TestPropertyS:
    def test_outcome_requires_property(self):
        with pytest.raises(PropertySViolatedError):
            property_s_outcome(cycle_graph(3))

    def test_examples(self):
        # even edge count: previous player wins (value 0)
        assert property_s_outcome(complete_bipartite_graph(2, 4)) is Outcome.P_POSITION
        assert property_s_outcome(cycle_graph(6)) is Outcome.P_POSITION
        star = complete_bipartite_graph(1, 3)
        assert has_property_s(star)
        assert property_s_outcome(star) is Outcome.N_POSITION

    def test_orientation_matches_engine_exhaustively(self, memo):
        # value 0 exactly at even edge counts, for every graph with the
        # property up to n = 6
        for n in range(1, 7):
            for g in all_graphs(n):
                if not has_property_s(g):
                    continue
                value = nim_value(g, memo)
                assert (value == 0) == (g.m % 2 == 0)
                expected = (
                    Outcome.P_POSITION if value == 0 else Outcome.N_POSITION
                )
                assert property_s_outcome(g) is expected

    def test_random_subdivided_graphs(self, memo):
        rng = random.Random(53)
        for _ in range(100):
            base = random_graph(rng.randint(2, 5), rng)
            g = _subdivide(base, rng)
            assert has_property_s(g)
            assert (nim_value(g, memo) == 0) == (g.m % 2 == 0)


def _trees(n_max: int):
    """All non-isomorphic trees with 1..n_max vertices, by leaf addition."""
    level = {canonical_key(Graph(1)): Graph(1)}
    yield from level.values()
    for _ in range(n_max - 1):
        nxt = {}
        for t in level.values():
            for v in range(t.n):
                grown = Graph(t.n + 1, t.edges() + [(v, t.n)])
                nxt.setdefault(canonical_key(grown), grown)
        level = nxt
        yield from level.values()


class TestParityHeuristic:
    def test_prediction_is_edge_parity(self):
        assert parity_heuristic_value(cycle_graph(4)) == 0
        assert parity_heuristic_value(cycle_graph(3)) == 1  # true value is 2
        assert parity_heuristic_value(complete_bipartite_graph(4, 4)) == 0

    def test_holds_on_trees(self, memo):
        for t in _trees(8):
            assert nim_value(t, memo) == t.m % 2
            assert nim_value(t, MemoTable(), fast_paths=False) == t.m % 2

    def test_holds_on_acyclic_graphs_exhaustive(self, memo):
        from nimors.graph import is_acyclic

        for n in range(1, 7):
            for g in all_graphs(n):
                if is_acyclic(g):
                    assert nim_value(g, memo) == g.m % 2

    def test_holds_on_cycles_except_triangle(self, memo):
        for k in range(4, 13):
            assert nim_value(cycle_graph(k), memo) == k % 2

    def test_holds_on_fused_cycles_without_triangles(self, memo):
        for p in range(4, 9):
            for q in range(p, 9):
                g = fused_cycle_graph(p, q)
                assert nim_value(g, memo) == g.m % 2

    def test_holds_on_k2q(self, memo):
        for q in range(2, 9):
            assert nim_value(complete_bipartite_graph(2, q), memo) == 0


class TestEdgeOrbits:
    def test_edge_transitive_graphs(self):
        assert edge_orbit_count(complete_graph(5)) == 1
        assert edge_orbit_bound(complete_graph(5)) == 2
        assert edge_orbit_bound(complete_bipartite_graph(3, 3)) == 2
        assert edge_orbit_bound(petersen_graph()) == 2

    def test_triangle_plus_pendant_orbits(self):
        # only (0,1)<->(1,0) swaps: base edge, two sides, pendant -> 3 orbits
        assert edge_orbit_count(TRIANGLE_PLUS_PENDANT) == 3
        assert edge_orbit_bound(TRIANGLE_PLUS_PENDANT) == 6

    def test_automorphism_counts(self):
        assert sum(1 for _ in automorphisms(cycle_graph(5))) == 10      # dihedral
        assert sum(1 for _ in automorphisms(complete_graph(4))) == 24   # symmetric
        assert sum(1 for _ in automorphisms(petersen_graph())) == 120

    def test_bound_holds_on_small_biconnected_graphs(self, memo):
        from nimors.census import enumerate_biconnected

        for n in range(3, 8):
            for g in enumerate_biconnected(n):
                assert nim_value(g, memo) <= edge_orbit_bound(g)

    def test_girth_examples_from_named_graphs(self):
        assert girth(petersen_graph()) == 5
        assert girth(fused_cycle_graph(4, 4)) == 4
        assert girth(path_graph(5)) is math.inf
