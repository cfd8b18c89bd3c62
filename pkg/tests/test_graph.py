import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquekit.graph import (
    GraphInputError,
    build_csr,
    generate_hamming,
    generate_johnson,
    gnp_graph,
    parse_dimacs,
    parse_edge_list,
    to_dimacs,
    to_edge_list,
)

from conftest import cycle


def naive_adjacency(n, edges):
    a = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        if u != v:
            a[u, v] = a[v, u] = True
    return a


def csr_to_matrix(g):
    a = np.zeros((g.n, g.n), dtype=bool)
    for v in range(g.n):
        a[v, g.neighbors_of(v)] = True
    return a


def test_triangle(k3):
    assert (k3.n, k3.m) == (3, 3)
    assert k3.degrees.tolist() == [2, 2, 2]


def test_normalization_drops_loops_and_duplicates():
    g = build_csr(2, [(0, 1), (1, 0), (0, 0)])
    assert g.m == 1
    assert g.neighbors.tolist() == [1, 0]
    g.validate()


def test_small_sample_matches_matrix_build():
    edges = [(0, 1), (0, 2), (1, 2), (2, 3)]
    g = build_csr(4, edges)
    assert g.offsets.tolist() == [0, 2, 4, 7, 8]
    assert g.neighbors.tolist() == [1, 2, 0, 2, 0, 1, 3, 2]
    assert np.array_equal(csr_to_matrix(g), naive_adjacency(4, edges))


def test_out_of_range_endpoint():
    with pytest.raises(GraphInputError):
        build_csr(3, [(0, 3)])
    with pytest.raises(GraphInputError):
        build_csr(3, [(-1, 0)])


def test_disconnected_and_empty_graphs():
    g = build_csr(5, [(0, 1), (3, 4)])
    assert g.degrees.tolist() == [1, 1, 0, 1, 1]
    e = build_csr(0, [])
    assert (e.n, e.m, e.offsets.tolist()) == (0, 0, [0])


edge_lists = st.integers(1, 25).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=120))
)


@settings(max_examples=150, deadline=None)
@given(edge_lists)
def test_build_csr_invariants(data):
    n, edges = data
    g = build_csr(n, edges)
    g.validate()
    assert int(g.degrees.sum()) == 2 * g.m
    assert np.array_equal(csr_to_matrix(g), naive_adjacency(n, edges))


@settings(max_examples=60, deadline=None)
@given(edge_lists)
def test_dimacs_round_trip(data):
    g = build_csr(*data)
    assert parse_dimacs(to_dimacs(g, "round trip")) == g


class TestDimacs:
    def test_triangle(self):
        g = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3")
        assert (g.n, g.m) == (3, 3)

    def test_comments_and_bytes(self):
        g = parse_dimacs(b"c hello\np edge 2 1\nc mid\ne 2 1\n")
        assert g.m == 1

    def test_id_out_of_range(self):
        with pytest.raises(GraphInputError) as err:
            parse_dimacs("p edge 3 1\ne 1 5\n")
        assert err.value.lineno == 2

    @pytest.mark.parametrize(
        "text,lineno",
        [
            ("e 1 2\n", 1),
            ("p edge 3 x\n", 1),
            ("p edge 3 1\ne 1 b\n", 2),
            ("c only comments\n", None),
            ("p edge 3 1\nq 1 2\n", 2),
        ],
    )
    def test_malformed(self, text, lineno):
        with pytest.raises(GraphInputError) as err:
            parse_dimacs(text)
        assert err.value.lineno == lineno

    def test_generated_hamming_round_trip(self):
        g = generate_hamming(6, 4)
        back = parse_dimacs(to_dimacs(g))
        assert (back.n, back.m) == (64, 704)


class TestEdgeList:
    def test_path(self):
        g = parse_edge_list("0 1\n1 2")
        assert (g.n, g.m) == (3, 2)

    def test_compaction_first_seen(self):
        g = parse_edge_list("# comment\n5 9\n9 5")
        assert (g.n, g.m) == (2, 1)
        assert g.labels.tolist() == [5, 9]

    def test_percent_comment_and_extra_columns(self):
        g = parse_edge_list("% header\n7 3 1.5\n3 8\n")
        assert g.labels.tolist() == [7, 3, 8]
        assert g.m == 2

    def test_bad_token(self):
        with pytest.raises(GraphInputError) as err:
            parse_edge_list("0 1\n1 x\n")
        assert err.value.lineno == 2

    def test_matches_build_csr(self):
        rng = np.random.default_rng(3)
        pairs = rng.integers(0, 12, size=(10, 2))
        text = "\n".join(f"{a} {b}" for a, b in pairs)
        g = parse_edge_list(text)
        index = {int(lab): i for i, lab in enumerate(g.labels)}
        ref = build_csr(len(index), [(index[a], index[b]) for a, b in pairs.tolist()])
        assert g == ref

    def test_round_trip_keeps_labels(self):
        g = parse_edge_list("10 20\n20 30\n30 10\n")
        back = parse_edge_list(to_edge_list(g))
        assert sorted(back.labels.tolist()) == [10, 20, 30]
        assert back.m == 3


class TestGenerators:
    def test_hamming_6_4(self):
        g = generate_hamming(6, 4)
        assert (g.n, g.m, g.max_degree) == (64, 704, 22)
        g.validate()

    def test_hamming_6_2(self):
        g = generate_hamming(6, 2)
        assert (g.n, g.m) == (64, 1824)

    def test_hamming_2_2(self):
        # Only 00-11 and 01-10 differ in both bits.
        g = generate_hamming(2, 2)
        assert (g.n, g.m) == (4, 2)
        assert g.edges().tolist() == [[0, 3], [1, 2]]

    def test_johnson(self):
        g = generate_johnson(8, 4, 4)
        assert (g.n, g.m, g.max_degree) == (70, 1855, 53)
        g = generate_johnson(8, 2, 4)
        assert (g.n, g.m) == (28, 210)
        assert generate_johnson(3, 1, 2).m == 3

    def test_hamming_against_enumeration(self):
        length, d = 5, 3
        g = generate_hamming(length, d)
        expect = sum(1 for x in range(32) for y in range(x + 1, 32) if bin(x ^ y).count("1") >= d)
        assert g.m == expect

    @pytest.mark.parametrize("args", [(0, 0), (3, 4), (21, 2), (5, 0)])
    def test_hamming_bad_params(self, args):
        with pytest.raises(GraphInputError):
            generate_hamming(*args)

    @pytest.mark.parametrize("args", [(17, 2, 2), (3, 4, 2), (4, 2, 0)])
    def test_johnson_bad_params(self, args):
        with pytest.raises(GraphInputError):
            generate_johnson(*args)

    def test_gnp_seeded(self):
        assert gnp_graph(30, 0.3, 5) == gnp_graph(30, 0.3, 5)
        cycle(5).validate()
