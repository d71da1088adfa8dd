import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquedist.clique import maximal_clique_sizes
from cliquedist.metrics import clustering_coefficients
from cliquedist.ws import WSParams, rewire, rewire_with_stats, ring_lattice, watts_strogatz


def test_lattice_examples():
    g = ring_lattice(10, 4)
    assert g.m == 20
    assert g.neighbors(0) == (1, 2, 8, 9)
    assert all(d == 4 for d in g.degrees())
    assert ring_lattice(3, 2).m == 3


@pytest.mark.parametrize("n,k", [(10, 5), (10, 0), (6, 6), (4, 8)])
def test_lattice_rejects_bad_k(n, k):
    with pytest.raises(ValueError):
        ring_lattice(n, k)


def test_params_validation():
    with pytest.raises(ValueError):
        WSParams(10, 4, 1.5)
    assert WSParams(10, 4, 0.5, 3).to_dict() == {"n": 10, "k_regular": 4, "p_rewire": 0.5, "seed": 3}


@given(st.integers(0, 10_000))
def test_p_zero_is_identity(seed):
    g = ring_lattice(30, 6)
    assert rewire(g, WSParams(30, 6, 0.0, seed)) == g


@pytest.mark.parametrize("seed", range(5))
def test_full_rewire_keeps_edge_count(seed):
    g, stats = rewire_with_stats(ring_lattice(100, 4), WSParams(100, 4, 1.0, seed))
    assert g.m == 200
    assert stats.attempted == 200
    assert stats.capped == 0


def test_deterministic_per_seed():
    a = watts_strogatz(WSParams(200, 8, 0.3, 42))
    b = watts_strogatz(WSParams(200, 8, 0.3, 42))
    c = watts_strogatz(WSParams(200, 8, 0.3, 43))
    assert a == b
    assert a != c


@settings(deadline=None, max_examples=40)
@given(st.integers(8, 60), st.sampled_from([2, 4, 6]), st.floats(0, 1), st.integers(0, 2**32))
def test_rewired_graph_is_simple(n, k, p, seed):
    g = watts_strogatz(WSParams(n, k, p, seed))
    assert g.m == n * k // 2
    for v in range(g.n):
        assert v not in g.neighbors(v)
        assert all(v in g.neighbors(w) for w in g.neighbors(v))


@pytest.mark.parametrize("p", [0.05, 0.3, 0.7])
def test_rewired_fraction(p):
    n, k, trials = 100, 4, 120
    edges = n * k // 2
    total = sum(rewire_with_stats(ring_lattice(n, k), WSParams(n, k, p, s))[1].attempted for s in range(trials))
    count = edges * trials
    se = math.sqrt(p * (1 - p) / count)
    assert abs(total / count - p) <= 3 * se


@pytest.mark.parametrize("k", [2, 4, 6, 8, 10])
def test_lattice_closed_forms(k):
    n = 40
    g = ring_lattice(n, k)
    assert maximal_clique_sizes(g).per_vertex == [1 + k // 2] * n
    # k = 2 is a cycle: no triangles
    expected = 3 * (k - 2) / (4 * (k - 1))
    # brute-force triangle count around vertex 0
    nb = g.neighbors(0)
    links = sum(g.has_edge(a, b) for i, a in enumerate(nb) for b in nb[i + 1:])
    assert links / (k * (k - 1) / 2) == pytest.approx(expected)
    assert clustering_coefficients(g) == pytest.approx([expected] * n)
