import pytest
from hypothesis import given

from cliquedist.datasets import DATASETS, DatasetError, load_dataset
from cliquedist.graph import Graph, complete_graph
from cliquedist.graph_io import (
    GraphParseError,
    parse_edge_list,
    parse_gml,
    parse_pajek,
    read_graph,
    write_edge_list,
)

from .conftest import graphs


def test_edge_list_path():
    g = parse_edge_list("0 1\n1 2\n")
    assert (g.n, g.m) == (3, 2)


def test_edge_list_labels_first_appearance():
    g = parse_edge_list("# comment\nb a\n\na c\n")
    assert g.labels == ("b", "a", "c")
    assert g.edges() == [(0, 1), (1, 2)]


def test_edge_list_duplicate_collapse():
    g = parse_edge_list("a b\nb a\n")
    assert (g.n, g.m) == (2, 1)


def test_edge_list_self_loop():
    with pytest.raises(GraphParseError, match="line 1"):
        parse_edge_list("x x\n")


def test_edge_list_malformed_line_number():
    with pytest.raises(GraphParseError) as info:
        parse_edge_list("0 1\n1 2 3\n")
    assert info.value.lineno == 2


def test_write_edge_list_examples():
    assert write_edge_list(complete_graph(3)) == "0 1\n0 2\n1 2\n"
    assert write_edge_list(Graph.build(0, [])) == ""


@given(graphs())
def test_edge_list_round_trip(g):
    # isolated vertices emit no lines, so compare edges through the label map
    h = parse_edge_list(write_edge_list(g))
    back = sorted(tuple(sorted((int(h.labels[u]), int(h.labels[v])))) for u, v in h.edges())
    assert back == g.edges()


def test_round_trip_canonical_graph():
    # canonical: every vertex first appears in id order in the edge dump
    g = Graph.build(5, [(3, 4), (0, 2), (1, 3), (0, 1), (2, 4)])
    h = parse_edge_list(write_edge_list(g))
    assert h == g


def test_karate_gml():
    g = load_dataset("karate")
    assert (g.n, g.m) == (34, 78)


def test_gml_zero_edges():
    g = parse_gml("graph [ node [ id 1 ] node [ id 7 label \"x y\" ] ]")
    assert (g.n, g.m) == (2, 0)
    assert g.labels == ("1", "x y")


def test_gml_ignores_directed_and_attributes():
    text = """
    Creator "test"
    graph [
      directed 1
      node [ id 10 label "a" value 3 graphics [ x 1.0 y 2.0 ] ]
      node [ id 20 ]
      node [ id 30 ]
      edge [ source 20 target 10 value 5 ]
      edge [ source 10 target 20 ]
      edge [ source 30 target 20 ]
    ]
    """
    g = parse_gml(text)
    assert (g.n, g.m) == (3, 2)
    assert g.edges() == [(0, 1), (1, 2)]


def test_gml_undeclared_node():
    with pytest.raises(GraphParseError, match="undeclared"):
        parse_gml("graph [\n node [ id 1 ]\n edge [ source 1 target 2 ]\n]")


@pytest.mark.parametrize("text", ["graph [ node [ id 1 ]", "graph [ node [ id 1 ] ] ]"])
def test_gml_unbalanced(text):
    with pytest.raises(GraphParseError):
        parse_gml(text)


def test_pajek_weight_discarded():
    g = parse_pajek("*Vertices 2\n*Edges\n1 2 0.5\n")
    assert (g.n, g.m) == (2, 1)


def test_pajek_out_of_range():
    with pytest.raises(GraphParseError, match="line 3"):
        parse_pajek("*Vertices 2\n*Edges\n1 3\n")


def test_pajek_missing_header():
    with pytest.raises(GraphParseError, match="Vertices"):
        parse_pajek("*Edges\n1 2\n")


def test_pajek_arcs_symmetrized_with_vertex_lines():
    text = (
        "*Network demo\n"
        "*Vertices 4\n"
        '1 "Alpha Field" 0.1 0.2 0.5\n'
        '2 "Beta" 0.3 0.4 0.5\n'
        "3 Gamma\n"
        "*Arcs\n1 2 1\n2 1 1\n"
        "*Edges\n2 3 0.25\n"
        "*Arcslist\n4 1 3\n"
    )
    g = parse_pajek(text)
    assert (g.n, g.m) == (4, 4)
    assert g.labels[:3] == ("Alpha Field", "Beta", "Gamma")
    assert g.neighbors(3) == (0, 2)


def test_pajek_round_trip_from_karate(karate):
    lines = [f"*Vertices {karate.n}"] + ["*Edges"] + [f"{u + 1} {v + 1} 1" for u, v in karate.edges()]
    assert parse_pajek("\n".join(lines)) == karate


def test_read_graph_guesses_format(tmp_path, karate):
    (tmp_path / "k.txt").write_text(write_edge_list(karate))
    h = read_graph(tmp_path / "k.txt")
    assert h.relabel([int(x) for x in h.labels]) == karate


def test_registry_counts():
    expected = {
        "karate": (34, 78),
        "dolphins": (62, 159),
        "polbooks": (105, 441),
        "adjnoun": (112, 425),
        "football": (115, 613),
        "usair97": (332, 2126),
    }
    assert {k: (d.expected_n, d.expected_m) for k, d in DATASETS.items()} == expected


def test_dataset_count_mismatch(tmp_path):
    (tmp_path / "karate.gml").write_text("graph [ node [ id 1 ] node [ id 2 ] edge [ source 1 target 2 ] ]")
    with pytest.raises(DatasetError, match="expected n=34"):
        load_dataset("karate", tmp_path)


def test_dataset_missing(tmp_path):
    with pytest.raises(DatasetError, match="football.gml not found"):
        load_dataset("football", tmp_path)
