"""Per-vertex maximal clique sizes, Watts-Strogatz sweeps and node-metric correlations."""

from .clique import (
    CliqueBudgetExceeded,
    CliqueReport,
    max_clique_size,
    maximal_clique_sizes,
    oracle_maximal_clique_sizes,
)
from .graph import Graph, GraphError
from .graph_io import GraphParseError, parse_edge_list, parse_gml, parse_pajek, read_graph, write_edge_list
from .metrics import (
    MetricVector,
    assortativity_index,
    clustering_coefficient,
    degree_distribution,
    graph_summary,
    node_diameter,
    pearson_correlation,
    spectral_radius,
)
from .ws import WSParams, rewire, ring_lattice, watts_strogatz

__version__ = "0.1.0"
