import numpy as np
import pytest

from cliquekit.exact import max_clique
from cliquekit.graph import GraphInputError
from cliquekit.rmat import RmatParams, rmat_edges, rmat_generate


def test_deterministic():
    p = RmatParams.family("sd1", 10, 4000, seed=42)
    assert rmat_generate(p) == rmat_generate(p)
    assert rmat_generate(p) != rmat_generate(RmatParams.family("sd1", 10, 4000, seed=43))


def test_empty_target():
    g = rmat_generate(RmatParams(0.25, 0.25, 0.25, 0.25, scale=6, target_edges=0))
    assert (g.n, g.m) == (64, 0)


def test_simple_and_bounded():
    p = RmatParams.family("sd2", 9, 3000, seed=1)
    g = rmat_generate(p)
    g.validate()
    assert g.m <= p.target_edges


def test_quadrant_frequencies():
    # One level of recursion: the quadrant counts follow (a, b, c, d).
    p = RmatParams(0.45, 0.15, 0.15, 0.25, scale=1, target_edges=200_000, seed=5)
    e = rmat_edges(p)
    freq = np.bincount(e[:, 0] * 2 + e[:, 1], minlength=4) / len(e)
    assert np.allclose(freq, [0.45, 0.15, 0.15, 0.25], atol=0.005)


def test_corner_probability_one():
    e = rmat_edges(RmatParams(0.0, 0.0, 0.0, 1.0, scale=5, target_edges=10))
    assert np.all(e == 31)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(a=0.5, b=0.5, c=0.5, d=-0.5, scale=4, target_edges=1),
        dict(a=0.3, b=0.3, c=0.3, d=0.3, scale=4, target_edges=1),
        dict(a=0.25, b=0.25, c=0.25, d=0.25, scale=25, target_edges=1),
        dict(a=0.25, b=0.25, c=0.25, d=0.25, scale=4, target_edges=-1),
    ],
)
def test_invalid(kwargs):
    with pytest.raises(GraphInputError):
        RmatParams(**kwargs)


@pytest.mark.parametrize("seed", [0, 1])
def test_degree_skew_ordering(seed):
    deg = {f: rmat_generate(RmatParams.family(f, 13, 8 << 13, seed)).max_degree for f in ("er", "sd1", "sd2")}
    assert deg["sd2"] >= deg["sd1"] >= deg["er"]


def test_clique_number_ordering_small_scale():
    omega = {f: max_clique(rmat_generate(RmatParams.family(f, 12, 8 << 12, 3))).size for f in ("er", "sd1", "sd2")}
    assert omega["sd2"] >= omega["sd1"] >= omega["er"]
