import numpy as np
import pytest

from cliquekit.exact import Incumbent, PruningStats, clique_extend, max_clique
from cliquekit.graph import build_csr, complete_graph, generate_hamming, generate_johnson, gnp_graph
from cliquekit.oracle import brute_force_max_clique

from conftest import random_corpus


def test_triangle(k3):
    res = max_clique(k3)
    assert res.size == 3 and res.members == (0, 1, 2) and res.found


def test_empty_and_edgeless():
    assert max_clique(build_csr(0, [])).size == 0
    res = max_clique(build_csr(4, []))
    assert res.size == 1 and len(res.members) == 1


def test_hamming_6_4_counters():
    res = max_clique(generate_hamming(6, 4))
    s = res.stats
    assert res.size == 4
    assert (s.p1, s.p2, s.p3, s.p5) == (0, 704, 0, 0)
    # Ascending-id selection reproduces the published branch count too.
    assert s.p4 == 583


def test_johnson_8_4_4():
    res = max_clique(generate_johnson(8, 4, 4))
    assert res.size == 14
    assert (res.stats.p1, res.stats.p2, res.stats.p4) == (0, 1855, 136007)


def test_johnson_8_2_4():
    assert max_clique(generate_johnson(8, 2, 4)).size == 4


@pytest.mark.parametrize("g", random_corpus(40), ids=lambda g: f"n{g.n}m{g.m}")
def test_matches_oracle(g):
    res = max_clique(g)
    assert res.size == brute_force_max_clique(g).size
    assert len(res.members) == res.size
    assert g.is_clique(res.members)
    if res.stats.p1 == 0:
        assert res.stats.p2 == g.m
    assert res.stats.p1 + res.loop_entries == g.n


@pytest.mark.parametrize("g", random_corpus(8, 15, 40), ids=lambda g: f"n{g.n}m{g.m}")
def test_order_independence(g):
    base = max_clique(g)
    rng = np.random.default_rng(g.m)
    for _ in range(20):
        res = max_clique(g, order=rng.permutation(g.n))
        assert res.size == base.size
        assert g.is_clique(res.members)
        if res.stats.p1 == 0:
            assert res.stats.p2 == g.m


@pytest.mark.parametrize("g", random_corpus(12, 10, 40), ids=lambda g: f"n{g.n}m{g.m}")
def test_lower_bound(g):
    omega = brute_force_max_clique(g).size
    at = max_clique(g, lb=omega)
    assert (at.size, at.members, at.found) == (omega, (), False)
    below = max_clique(g, lb=omega - 1)
    assert below.size == omega and below.found and g.is_clique(below.members)
    above = max_clique(g, lb=omega + 3)
    assert above.size == omega + 3 and not above.found


def test_bound_is_monotone():
    seen = []
    res = max_clique(gnp_graph(50, 0.5, 1), on_bound=lambda size, members: seen.append(size))
    assert seen and seen == sorted(seen) and len(set(seen)) == len(seen)
    assert seen[-1] == res.size


def test_bad_arguments():
    with pytest.raises(ValueError):
        max_clique(complete_graph(3), lb=-1)
    with pytest.raises(ValueError):
        max_clique(complete_graph(3), order=[0, 0, 1])


class TestCliqueExtend:
    def test_empty_candidates_records_size(self):
        best = Incumbent(3)
        clique_extend(complete_graph(6), [], 5, best)
        assert best.size == 5

    def test_pruning_4_cut(self):
        stats = PruningStats()
        best = Incumbent(3)
        g = complete_graph(4)
        clique_extend(g, [2], 2, best, stats, prefix=(0, 1))
        assert best.size == 3 and stats.p4 == 1

    def test_k4_depth(self):
        best = Incumbent(0)
        depth = clique_extend(complete_graph(4), [1, 2, 3], 1, best, prefix=(0,))
        assert best.size == 4 and best.members == (0, 1, 2, 3)
        assert depth == 3

    def test_pruning_5_counts_low_degree_neighbors(self):
        # Triangle 0-1-2 with pendant 3 on vertex 1; bound 2 filters vertex 3.
        g = build_csr(4, [(0, 1), (1, 2), (0, 2), (1, 3)])
        stats = PruningStats()
        best = Incumbent(2)
        clique_extend(g, [1, 2], 1, best, stats, prefix=(0,))
        assert best.size == 3
        assert stats.p5 == 1
