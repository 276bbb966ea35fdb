import io

import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, naive_shells, random_graph, to_nx
from hycolor.generators import complete, example13, example13_edges, path
from hycolor.graph import (
    BadToken,
    EmptyGraph,
    Graph,
    MissingProblemLine,
    ParseError,
    VertexOutOfRange,
    WorkingGraph,
    core_decompose,
    load_graph,
    parse_dimacs,
    parse_edgelist,
    parse_graph,
    parse_mtx,
    remove_vertices,
    to_dimacs,
)


def check_structure(g: Graph) -> None:
    adj = g.adj
    assert sum(len(a) for a in adj) == 2 * g.m
    for v, a in enumerate(adj):
        assert all(x < y for x, y in zip(a, a[1:]))
        assert v not in a
        for u in a:
            assert v in adj[u]


class TestDimacs:
    def test_triangle(self):
        g = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
        assert (g.n, g.m) == (3, 3)
        check_structure(g)

    def test_duplicate_dropped_and_counted(self):
        g = parse_dimacs("p edge 2 1\ne 1 2\ne 2 1\n")
        assert g.m == 1
        assert g.stats.duplicates == 1

    def test_self_loop_dropped(self):
        g = parse_dimacs("c hi\np edge 2 2\ne 1 1\ne 1 2\n")
        assert g.m == 1 and g.stats.self_loops == 1

    def test_example13_degrees(self):
        text = "p edge 13 37\n" + "".join(f"e {u} {v}\n" for u, v in example13_edges())
        g = parse_dimacs(text)
        assert g.n == 13
        assert g.degrees.tolist() == [3, 7, 3, 5, 5, 3, 7, 6, 6, 6, 6, 9, 8]
        assert len(g.neighbors(0)) == 3

    def test_bytes_and_stream(self):
        src = b"p edge 2 1\ne 1 2\n"
        assert parse_dimacs(src).m == 1
        assert parse_dimacs(io.BytesIO(src)).m == 1
        assert parse_dimacs(io.StringIO(src.decode())).m == 1

    @pytest.mark.parametrize(
        "text, exc, line",
        [
            ("e 1 2\n", MissingProblemLine, 1),
            ("c only comments\n", MissingProblemLine, 0),
            ("p edge 3 1\ne 1 4\n", VertexOutOfRange, 2),
            ("p edge 3 1\ne 0 2\n", VertexOutOfRange, 2),
            ("p edge 3 1\ne 1 x\n", BadToken, 2),
            ("p edge three 1\n", BadToken, 1),
        ],
    )
    def test_errors(self, text, exc, line):
        with pytest.raises(exc) as info:
            parse_dimacs(text)
        assert info.value.lineno == line
        assert isinstance(info.value, ParseError)

    @given(graphs(max_n=15))
    def test_round_trip(self, g):
        h = parse_dimacs(to_dimacs(g))
        assert h.n == g.n
        assert np.array_equal(h.indptr, g.indptr)
        assert np.array_equal(h.indices, g.indices)


class TestEdgelist:
    def test_dedup_and_loop(self):
        g = parse_edgelist("0 1\n1 0\n1 1\n")
        assert (g.n, g.m) == (2, 1)
        assert g.stats.self_loops == 1

    def test_remap(self):
        g = parse_edgelist("# comment\n10 20\n20 30\n")
        assert g.n == 3
        assert g.edges().tolist() == [[0, 1], [1, 2]]
        assert g.external_labels().tolist() == [10, 20, 30]

    @pytest.mark.parametrize("text", ["1 2 3\n", "1\n", "a b\n", "1 -2\n"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_edgelist(text)

    def test_empty(self):
        with pytest.raises(EmptyGraph):
            parse_edgelist("% nothing\n")

    def test_karate(self, karate_path):
        g = load_graph(karate_path)
        assert (g.n, g.m) == (34, 78)
        ref = nx.karate_club_graph()
        assert sorted(d for _, d in ref.degree()) == sorted(g.degrees.tolist())


def test_autodetect():
    assert parse_graph("c x\np edge 2 1\ne 1 2\n").m == 1
    assert parse_graph("5 6\n").external_labels().tolist() == [5, 6]
    with pytest.raises(ValueError):
        parse_graph("1 2\n", fmt="nope")


def test_from_edges_rejects_out_of_range():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_subgraph():
    g = complete(5)
    h = g.subgraph([0, 2, 4])
    assert (h.n, h.m) == (3, 3)


class TestCore:
    def test_triangle(self):
        assert core_decompose(complete(3)).shell.tolist() == [2, 2, 2]

    def test_path(self):
        assert core_decompose(path(3)).shell.tolist() == [1, 1, 1]

    def test_example13(self):
        g = example13()
        cd = core_decompose(g)
        assert np.array_equal(cd.shell, naive_shells(g))
        assert all(cd.shell[v - 1] >= 3 for v in (4, 5, 12, 13))

    def test_against_naive_and_networkx(self, backend):
        rng = np.random.default_rng(7)
        for _ in range(40):
            g = random_graph(rng, int(rng.integers(1, 80)), float(rng.random()) * 0.3)
            cd = core_decompose(g)
            assert np.array_equal(cd.shell, naive_shells(g))
            ref = nx.core_number(to_nx(g))
            assert cd.shell.tolist() == [ref[v] for v in range(g.n)]
            assert cd.degeneracy == max(ref.values())

    @given(graphs(max_n=20))
    def test_peel_order_nondecreasing(self, g):
        cd = core_decompose(g)
        assert sorted(cd.peel_order.tolist()) == list(range(g.n))
        assert np.all(np.diff(cd.shell[cd.peel_order]) >= 0)
        b = cd.layer_boundaries()
        assert b[0] == 0 and b[-1] == g.n

    @given(graphs(max_n=16), st.data())
    def test_working_graph_matches_induced(self, g, data):
        alive = np.asarray(data.draw(st.lists(st.booleans(), min_size=g.n, max_size=g.n)), dtype=np.uint8)
        w = WorkingGraph.from_graph(g)
        remove_vertices(w, np.flatnonzero(alive == 0))
        cd = core_decompose(w)
        assert np.array_equal(cd.shell, naive_shells(g, alive))


class TestRemove:
    def test_k4(self):
        w = WorkingGraph.from_graph(complete(4))
        remove_vertices(w, [0])
        assert w.degree[1:].tolist() == [2, 2, 2]
        assert w.n_alive == 3

    def test_example13(self):
        w = WorkingGraph.from_graph(example13())
        remove_vertices(w, [0, 2, 5])
        low = [v + 1 for v in w.vertices().tolist() if w.degree[v] < 4]
        assert low == [4, 5]

    def test_remove_all(self):
        g = example13()
        w = WorkingGraph.from_graph(g)
        w.remove(range(g.n))
        assert w.is_empty
        assert not w.degree.any()

    def test_dead_vertex_rejected(self):
        w = WorkingGraph.from_graph(complete(3))
        w.remove([1])
        with pytest.raises(ValueError):
            w.remove([1])

    @given(graphs(max_n=16), st.data())
    def test_incremental_degrees(self, g, data):
        w = WorkingGraph.from_graph(g)
        for _ in range(data.draw(st.integers(0, 4))):
            live = w.vertices().tolist()
            if not live:
                break
            w.remove(data.draw(st.lists(st.sampled_from(live), max_size=4)))
        for v in w.vertices().tolist():
            assert w.degree[v] == sum(1 for u in g.adj[v] if w.alive[u])
        assert w.n_alive == int(w.alive.sum())


class TestMatrixMarket:
    TEXT = "%%MatrixMarket matrix coordinate pattern symmetric\n% c\n4 4 3\n2 1\n3 2\n3 1 1.0\n"

    def test_parse(self):
        g = parse_graph(self.TEXT)
        assert (g.n, g.m) == (4, 3)
        assert g.degrees.tolist() == [2, 2, 2, 0]
        assert g.external_labels().tolist() == [1, 2, 3, 4]

    @pytest.mark.parametrize(
        "text, exc",
        [
            ("%%MatrixMarket x\n1 2\n", MissingProblemLine),
            ("%%MatrixMarket x\n3 4 1\n1 2\n", BadToken),
            ("%%MatrixMarket x\n3 3 1\n1 5\n", VertexOutOfRange),
            ("%%MatrixMarket x\n3 3 1\n1 2 3 4\n", BadToken),
        ],
    )
    def test_errors(self, text, exc):
        with pytest.raises(exc):
            parse_mtx(text)
