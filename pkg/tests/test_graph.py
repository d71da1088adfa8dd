import pytest
from hypothesis import given

from cliquedist.graph import Graph, GraphError, build, complete_graph, degree, neighbors, path_graph, star_graph

from .conftest import graphs


def test_build_triangle():
    g = build(3, [(0, 1), (1, 2), (0, 2)])
    assert g.m == 3
    assert g == complete_graph(3)


def test_duplicate_edges_collapse():
    g = build(4, [(0, 1), (1, 0)])
    assert g.m == 1
    assert g.degree(2) == 0


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 2)], [(-1, 0)]])
def test_build_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        build(2, edges)


def test_degree_examples():
    assert all(degree(complete_graph(5), v) == 4 for v in range(5))
    assert star_graph(6).degree(0) == 6
    assert build(3, [(0, 1)]).degree(2) == 0


def test_neighbors_examples():
    assert neighbors(complete_graph(3), 0) == (1, 2)
    assert neighbors(build(2, []), 1) == ()
    assert path_graph(3).neighbors(1) == (0, 2)


def test_neighbors_sorted_regardless_of_input_order():
    g = build(5, [(0, 4), (0, 2), (3, 0), (1, 0)])
    assert g.neighbors(0) == (1, 2, 3, 4)


def test_out_of_range_queries():
    g = complete_graph(3)
    with pytest.raises(GraphError):
        g.degree(3)
    with pytest.raises(GraphError):
        g.neighbors(-1)


@given(graphs())
def test_handshake(g):
    assert sum(g.degrees()) == 2 * g.m


@given(graphs())
def test_rebuild_from_edge_dump(g):
    assert Graph.build(g.n, g.edges()) == g


@given(graphs())
def test_symmetric_and_loop_free(g):
    for v in range(g.n):
        assert v not in g.neighbors(v)
        for w in g.neighbors(v):
            assert v in g.neighbors(w)


@given(graphs())
def test_masks_match_neighbors(g):
    masks = g.neighbor_masks()
    for v in range(g.n):
        assert [w for w in range(g.n) if masks[v] >> w & 1] == list(g.neighbors(v))
