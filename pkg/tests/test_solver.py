import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import chromatic_by_enumeration, graphs, is_proper, random_graph
from hycolor.coloring import verify_coloring
from hycolor.generators import complete, cycle, example13, hamming, petersen
from hycolor.graph import Graph, load_graph
from hycolor.solver import SolverConfig, brute_force_chromatic, solve

FAST = dict(cutoff=0.5, deterministic=True, tick=1e-3)


def run(g, seed=1, **kw):
    return solve(g, SolverConfig(seed=seed, **{**FAST, **kw}))


class TestExamples:
    @pytest.mark.parametrize("n", [1, 2, 5, 17, 50])
    def test_complete(self, n):
        r = run(complete(n))
        assert r.num_colors == n and r.optimal
        assert r.iterations == 1

    def test_example13(self):
        g = example13()
        r = run(g)
        assert r.lb_final == 4
        assert r.num_colors == brute_force_chromatic(g) == 4
        assert verify_coloring(g, r.coloring)

    def test_hamming8_4(self):
        r = run(hamming(8, 4), cutoff=60)
        assert r.num_colors == 16 and r.optimal

    def test_karate(self, karate_path):
        r = run(load_graph(karate_path), cutoff=60)
        assert r.num_colors == 5 and r.optimal

    def test_empty_graph(self):
        r = solve(Graph.from_edges(0, []))
        assert r.num_colors == 0 and r.optimal and r.iterations == 0

    def test_edgeless(self):
        r = run(Graph.from_edges(4, []))
        assert r.num_colors == 1 and r.optimal

    def test_summary_line(self):
        r = run(complete(3))
        assert r.summary().startswith("s 3 lb=3 optimal=true time=")
        assert r.clique and len(r.clique) == 3


class TestConfig:
    @pytest.mark.parametrize(
        "kw",
        [dict(cutoff=0), dict(cutoff=-1), dict(alpha=1.5), dict(lam=0.75), dict(lam=2), dict(size_upper=0), dict(tick=0)],
    )
    def test_invalid(self, kw):
        with pytest.raises(ValueError):
            SolverConfig(**kw)

    def test_defaults(self):
        cfg = SolverConfig()
        assert (cfg.cutoff, cfg.alpha, cfg.lam, cfg.exactlb_budget, cfg.size_upper) == (60.0, 0.2, 0.7, 1.0, 1000)


class TestBruteForce:
    def test_examples(self):
        assert brute_force_chromatic(cycle(5)) == 3
        assert brute_force_chromatic(complete(4)) == 4
        assert brute_force_chromatic(petersen()) == 3

    def test_petersen_hand_coloring(self):
        g = petersen()
        hand = [0, 1, 0, 1, 2, 1, 2, 2, 0, 0]
        assert is_proper(g, hand)

    def test_guard(self):
        with pytest.raises(ValueError):
            brute_force_chromatic(complete(17))

    @given(graphs(max_n=7))
    def test_matches_enumeration(self, g):
        assert brute_force_chromatic(g) == chromatic_by_enumeration(g)


class TestProperties:
    @given(graphs(max_n=12), st.integers(1, 10))
    def test_sandwich(self, g, seed):
        r = run(g, seed, cutoff=0.2)
        chi = brute_force_chromatic(g)
        assert r.lb_final <= chi <= r.num_colors
        assert verify_coloring(g, r.coloring)
        if r.optimal:
            assert r.num_colors == chi

    def test_properness_random(self, backend):
        rng = np.random.default_rng(2)
        for _ in range(40):
            g = random_graph(rng, int(rng.integers(1, 60)), float(rng.choice([0.05, 0.2, 0.5, 0.9])))
            r = run(g, int(rng.integers(1, 4)))
            assert verify_coloring(g, r.coloring)
            assert r.coloring.is_total

    def test_deterministic(self):
        g = random_graph(np.random.default_rng(9), 80, 0.3)
        a = run(g, 4, cutoff=2.0)
        b = run(g, 4, cutoff=2.0)
        assert np.array_equal(a.coloring.assign, b.coloring.assign)
        assert (a.num_colors, a.lb_final, a.iterations, a.trace, a.time_to_best, a.clique) == (
            b.num_colors, b.lb_final, b.iterations, b.trace, b.time_to_best, b.clique
        )

    def test_trace_monotone(self):
        rng = np.random.default_rng(4)
        for _ in range(15):
            g = random_graph(rng, 70, float(rng.choice([0.1, 0.3, 0.6])))
            r = run(g, cutoff=2.0)
            lbs = [t[1] for t in r.trace]
            ubs = [t[2] for t in r.trace]
            assert lbs == sorted(lbs)
            assert ubs == sorted(ubs, reverse=True)
            assert all(lo <= hi for lo, hi in zip(lbs, ubs))
            assert r.lb_final <= r.num_colors

    def test_backends_agree(self):
        from hycolor import _backend

        if "cython" not in _backend.available():
            pytest.skip("compiled kernels not built")
        g = random_graph(np.random.default_rng(12), 120, 0.25)
        out = {}
        prev = _backend.BACKEND
        try:
            for name in ("python", "cython"):
                _backend.use(name)
                r = run(g, 3, cutoff=3.0)
                out[name] = (r.coloring.assign.tolist(), r.lb_final, r.iterations, r.trace)
        finally:
            _backend.use(prev)
        assert out["python"] == out["cython"]
