"""
Deterministic renderings of G_n(Z_m): DOT, JSON and plain edge lists.
"""

from typing import get_args

import pydot

from app.exceptions import UnknownFormat
from app.schemas.graph_schema import ExportedGraph, ExportedVertex, ExportFormat
from app.services.arith_service import validate_module_pair
from app.services.graph_service import IdealGraph, build_graph, from_edges, isolated_vertices

EXPORT_FORMATS = get_args(ExportFormat)


def to_exported(g: IdealGraph) -> ExportedGraph:
    m, n = g.pair.m.value, g.pair.n.value
    return ExportedGraph(
        m=m,
        n=n,
        vertices=[
            ExportedVertex(label=d, ideal=f"{d}Z_{m}", exponents=list(g.exponents[d]))
            for d in g.vertices
        ],
        edges=g.edges(),
        isolated=sorted(isolated_vertices(g)),
    )


def to_json(g: IdealGraph) -> str:
    return to_exported(g).model_dump_json(indent=2) + "\n"


def to_edgelist(g: IdealGraph) -> str:
    return "".join(f"{a} {b}\n" for a, b in g.edges())


def to_dot(g: IdealGraph) -> str:
    m, n = g.pair.m.value, g.pair.n.value
    dot = pydot.Dot(f"G_{n}_Z_{m}", graph_type="graph", label=f'"G_{n}(Z_{m})"')
    for d in g.vertices:
        dot.add_node(pydot.Node(str(d), label=f'"{d}Z_{m}"'))
    for a, b in g.edges():
        dot.add_edge(pydot.Edge(str(a), str(b)))
    return dot.to_string()


def render(g: IdealGraph, format: str) -> str:
    if format == "json":
        return to_json(g)
    if format == "dot":
        return to_dot(g)
    if format == "edgelist":
        return to_edgelist(g)
    raise UnknownFormat(f"unknown format {format!r}; expected one of {', '.join(EXPORT_FORMATS)}")


def parse_json(text: str) -> ExportedGraph:
    return ExportedGraph.model_validate_json(text)


def graph_from_export(exported: ExportedGraph) -> IdealGraph:
    """
    Rebuild the graph named by an export and require the stored vertices
    and edges to match it.
    """
    pair = validate_module_pair(exported.m, exported.n)
    graph = build_graph(pair)
    labels = [v.label for v in exported.vertices]
    if labels != list(graph.vertices):
        raise ValueError("exported vertices do not match G_n(Z_m)")
    stored = from_edges(labels, [tuple(e) for e in exported.edges], pair)
    if stored.edges() != graph.edges() or len(exported.edges) != len(graph.edges()):
        raise ValueError("exported edges do not match G_n(Z_m)")
    return graph
