"""Primitive hole numbers (triangle counts), primitive degrees and girth of
simple graphs, with line, total and Jaco graph constructions and a catalog of
brute-force-checked identities."""

from ._backend import DEFAULT as BACKEND
from .graph import (
    Digraph,
    EdgeListError,
    Graph,
    GraphError,
    complete,
    components,
    cycle,
    degree,
    delete_edge,
    delete_vertex,
    disjoint_union,
    from_edge_list,
    gnp,
    induced_subgraph,
    max_degree,
    parse_edge_list,
    path,
    star,
    underlying,
)
from .jaco import JacoGraph, build_jaco, h_closed, h_direct, h_outdegree, h_recursive
from .transforms import (
    LabeledGraph,
    internal_vertices,
    line_graph,
    line_graph_h_formula,
    primitive_degree_line_vertex,
    total_graph,
)
from .triangles import (
    girth,
    h,
    has_primitive_hole,
    primitive_degrees,
    triangles_forward,
    triangles_oracle,
)
from .verify import check, run_suite

__version__ = "0.1.0"
