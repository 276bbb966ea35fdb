import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import clique_number, graphs, random_graph
from hycolor.bounds import Clique, exact_lb, exact_lb_search, find_clique_heuristic, max_clique_exact
from hycolor.clock import TickClock
from hycolor.generators import complete, cycle, example13, hamming, petersen, star
from hycolor.graph import WorkingGraph


def heuristic(g, seed=1):
    return find_clique_heuristic(WorkingGraph.from_graph(g), np.random.default_rng(seed), 10.0)


class TestFindClique:
    def test_k5(self):
        assert heuristic(complete(5)).size == 5

    def test_example13(self):
        c = heuristic(example13())
        assert c.size == 4
        assert c.is_clique_in(example13())

    def test_petersen(self):
        assert heuristic(petersen()).size == 2

    def test_empty_graph_rejected(self):
        w = WorkingGraph.from_graph(complete(2))
        w.remove([0, 1])
        with pytest.raises(ValueError):
            find_clique_heuristic(w, np.random.default_rng(0))

    @given(graphs(min_n=1, max_n=14), st.integers(0, 2**32 - 1))
    def test_valid_and_reproducible(self, g, seed):
        a = heuristic(g, seed)
        b = heuristic(g, seed)
        assert a == b
        assert a.is_clique_in(g)
        assert 1 <= a.size <= clique_number(g)

    def test_respects_dead_vertices(self):
        g = complete(6)
        w = WorkingGraph.from_graph(g)
        w.remove([0, 3])
        c = find_clique_heuristic(w, np.random.default_rng(3))
        assert sorted(c.vertices) == [1, 2, 4, 5]


class TestMaxCliqueExact:
    def test_c5(self):
        r = max_clique_exact(cycle(5))
        assert r.clique.size == 2 and r.exact

    def test_example13(self):
        r = max_clique_exact(example13())
        assert r.clique.size == 4 and r.exact
        assert r.clique.is_clique_in(example13())
        assert max_clique_exact(example13().subgraph([3, 4, 11, 12])).clique.size == 4

    def test_hamming8_4(self):
        r = max_clique_exact(hamming(8, 4))
        assert r.clique.size == 16 and r.exact

    def test_matches_enumeration(self, backend):
        rng = np.random.default_rng(11)
        for _ in range(60):
            n = int(rng.integers(1, 26))
            g = random_graph(rng, n, float(rng.choice([0.2, 0.5, 0.8])))
            r = max_clique_exact(g)
            assert r.exact
            assert r.clique.is_clique_in(g)
            assert r.clique.size == clique_number(g)

    def test_lower_semantics(self):
        g = example13()
        r = max_clique_exact(g, lower=4)
        assert r.exact and r.clique.size <= 4
        r = max_clique_exact(g, lower=3)
        assert r.clique.size == 4

    def test_timeout_reports_best_so_far(self):
        g = random_graph(np.random.default_rng(0), 90, 0.9)
        r = max_clique_exact(g, clock=TickClock(1.0), budget=1.5, check_every=1)
        assert not r.exact
        assert r.clique.size >= 1 and r.clique.is_clique_in(g)


class TestExactLb:
    def test_k5(self):
        assert exact_lb(WorkingGraph.from_graph(complete(5)), 5) == 5

    def test_example13(self):
        assert exact_lb(WorkingGraph.from_graph(example13()), 3) == 4

    def test_star(self):
        assert exact_lb(WorkingGraph.from_graph(star(8)), 2) == 2

    def test_size_upper_stops_growth(self):
        w = WorkingGraph.from_graph(example13())
        assert exact_lb(w, 3, size_upper=2) == 3

    @given(graphs(min_n=1, max_n=14), st.integers(0, 6))
    def test_monotone_and_valid(self, g, lb):
        w = WorkingGraph.from_graph(g)
        found = exact_lb_search(w, lb)
        val = exact_lb(w, lb)
        assert val >= lb
        if found is not None:
            assert found.size == val > lb
            assert found.is_clique_in(g)

    def test_finds_omega_in_connected_small_graph(self):
        rng = np.random.default_rng(5)
        for _ in range(30):
            g = random_graph(rng, 20, 0.5)
            w = WorkingGraph.from_graph(g)
            assert exact_lb(w, 1) <= clique_number(g)


def test_clique_helpers():
    c = Clique.of([3, 1, 2])
    assert c.vertices == (1, 2, 3)
    assert c.size == 3
    assert c.is_clique_in(complete(4))
    assert not c.is_clique_in(cycle(4))
