"""
Planarity and outerplanarity with independently checkable certificates.

Every answer ships either a rotation system (verified by face tracing and
Euler's formula) or a forbidden subdivision (verified path by path).
"""

import logging
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple, Union

import networkx as nx

from app.schemas.certificate_schema import (
    Embedding,
    ForbiddenSubdivision,
    OuterplanarityAnswer,
    PlanarityCertificate,
)
from app.services.graph_service import IdealGraph

logger = logging.getLogger(__name__)

AnyGraph = Union[IdealGraph, nx.Graph]

# branch vertex count and path count of each forbidden pattern
PATTERN_SIZES = {"K5": (5, 10), "K33": (6, 9), "K4": (4, 6), "K23": (5, 6)}
BIPARTITE_SIDES = {"K33": (3, 3), "K23": (2, 3)}


def as_nx(g: AnyGraph) -> nx.Graph:
    if isinstance(g, IdealGraph):
        return g.nx_graph
    return g


def find_clique(g: AnyGraph, size: int) -> Optional[List[int]]:
    """First clique of the given size in label order, or None."""
    # the smallest `size` labels of a maximal clique form a clique
    heads = [sorted(c)[:size] for c in nx.find_cliques(as_nx(g)) if len(c) >= size]
    return min(heads, default=None)


def _clique_witness(clique: List[int]) -> ForbiddenSubdivision:
    kind = "K5" if len(clique) == 5 else "K4"
    return ForbiddenSubdivision(
        kind=kind,
        branch_vertices=list(clique),
        paths=[[a, b] for a, b in combinations(clique, 2)],
    )


def _witness_from_kuratowski_subgraph(sub: nx.Graph) -> ForbiddenSubdivision:
    """Read branch vertices and paths off a Kuratowski subgraph."""
    sub = sub.copy()
    sub.remove_nodes_from([v for v in list(sub.nodes) if sub.degree(v) == 0])
    branch = sorted(v for v in sub.nodes if sub.degree(v) >= 3)
    kind = "K5" if len(branch) == 5 else "K33"

    branch_set = set(branch)
    paths = set()
    for b in branch:
        for first in sub[b]:
            path = [b, first]
            while path[-1] not in branch_set:
                prev, cur = path[-2], path[-1]
                path.append(next(w for w in sub[cur] if w != prev))
            if path[0] > path[-1]:
                path.reverse()
            paths.add(tuple(path))

    return ForbiddenSubdivision(
        kind=kind, branch_vertices=branch, paths=[list(p) for p in sorted(paths)]
    )


def rotation_system(graph: nx.Graph, embedding: nx.PlanarEmbedding) -> Dict[int, List[int]]:
    rotation = {}
    for v in sorted(graph.nodes):
        if v in embedding and embedding.degree(v) > 0:
            rotation[v] = list(embedding.neighbors_cw_order(v))
        else:
            rotation[v] = []
    return rotation


def is_planar(g: AnyGraph) -> Tuple[bool, PlanarityCertificate]:
    graph = as_nx(g)
    planar, embedding = nx.check_planarity(graph)
    if planar:
        return True, Embedding(rotation=rotation_system(graph, embedding))

    clique = find_clique(graph, 5)
    if clique is not None:
        logger.debug(f"K5 witness {clique}")
        return False, _clique_witness(clique)

    _, counterexample = nx.check_planarity(graph, counterexample=True)
    witness = _witness_from_kuratowski_subgraph(counterexample)
    logger.debug(f"{witness.kind} witness on branch vertices {witness.branch_vertices}")
    return False, witness


def trace_faces(rotation: Dict[int, List[int]]) -> List[List[Tuple[int, int]]]:
    """Faces of a rotation system as lists of darts."""
    position = {v: {w: i for i, w in enumerate(nbrs)} for v, nbrs in rotation.items()}
    visited = set()
    faces = []
    for u in rotation:
        for v in rotation[u]:
            if (u, v) in visited:
                continue
            face = []
            dart = (u, v)
            while dart not in visited:
                visited.add(dart)
                face.append(dart)
                a, b = dart
                nbrs = rotation[b]
                dart = (b, nbrs[(position[b][a] + 1) % len(nbrs)])
            faces.append(face)
    return faces


def count_faces(g: AnyGraph, embedding: Embedding) -> int:
    """
    Face count F of the embedding with the outer faces of all components
    identified, so that V - E + F = 1 + C.
    """
    graph = as_nx(g)
    faces = trace_faces(embedding.rotation)
    with_edges = sum(1 for c in nx.connected_components(graph) if len(c) > 1)
    return 1 + len(faces) - with_edges


def _verify_embedding(graph: nx.Graph, embedding: Embedding) -> bool:
    rotation = embedding.rotation
    if set(rotation) != set(graph.nodes):
        return False
    for v, nbrs in rotation.items():
        if len(nbrs) != len(set(nbrs)) or set(nbrs) != set(graph[v]):
            return False

    faces = trace_faces(rotation)
    component_of = {}
    components = list(nx.connected_components(graph))
    for i, comp in enumerate(components):
        for v in comp:
            component_of[v] = i
    face_counts = [0] * len(components)
    for face in faces:
        face_counts[component_of[face[0][0]]] += 1

    for comp, faces_here in zip(components, face_counts):
        if len(comp) == 1:
            continue
        edges_here = graph.subgraph(comp).number_of_edges()
        if len(comp) - edges_here + faces_here != 2:
            return False

    total_faces = count_faces(graph, embedding)
    v, e, c = graph.number_of_nodes(), graph.number_of_edges(), len(components)
    return v - e + total_faces == 1 + c


def _sides_match(kind: str, branch: List[int], pairs: Set[frozenset]) -> bool:
    if kind in ("K5", "K4"):
        return pairs == {frozenset(p) for p in combinations(branch, 2)}

    small, _ = BIPARTITE_SIDES[kind]
    for side in combinations(branch, small):
        other = [b for b in branch if b not in side]
        expected = {frozenset((a, b)) for a in side for b in other}
        if pairs == expected:
            return True
    return False


def _verify_subdivision(graph: nx.Graph, witness: ForbiddenSubdivision) -> bool:
    branch_count, path_count = PATTERN_SIZES[witness.kind]
    branch = witness.branch_vertices
    if len(branch) != branch_count or len(set(branch)) != branch_count:
        return False
    if len(witness.paths) != path_count:
        return False
    if any(b not in graph for b in branch):
        return False

    branch_set = set(branch)
    used_inner: Set[int] = set()
    pairs = set()
    for path in witness.paths:
        if len(path) < 2 or len(set(path)) != len(path):
            return False
        if path[0] not in branch_set or path[-1] not in branch_set:
            return False
        inner = path[1:-1]
        if any(v in branch_set or v in used_inner for v in inner):
            return False
        used_inner.update(inner)
        if any(not graph.has_edge(a, b) for a, b in zip(path, path[1:])):
            return False
        pairs.add(frozenset((path[0], path[-1])))

    if len(pairs) != path_count:
        return False
    return _sides_match(witness.kind, branch, pairs)


def verify_certificate(g: AnyGraph, cert: PlanarityCertificate) -> bool:
    graph = as_nx(g)
    if isinstance(cert, Embedding):
        return _verify_embedding(graph, cert)
    return _verify_subdivision(graph, cert)


def apex_extension(g: AnyGraph) -> Tuple[nx.Graph, int]:
    graph = as_nx(g)
    apex = min(min(graph.nodes, default=0), 0) - 1
    extended = graph.copy()
    extended.add_node(apex)
    extended.add_edges_from((apex, v) for v in graph.nodes)
    return extended, apex


def _project_apex_witness(witness: ForbiddenSubdivision, apex: int) -> Optional[ForbiddenSubdivision]:
    if apex not in witness.branch_vertices:
        return None
    kind = "K4" if witness.kind == "K5" else "K23"
    return ForbiddenSubdivision(
        kind=kind,
        branch_vertices=[b for b in witness.branch_vertices if b != apex],
        paths=[p for p in witness.paths if apex not in (p[0], p[-1])],
    )


def check_outerplanarity(g: AnyGraph) -> OuterplanarityAnswer:
    extended, apex = apex_extension(g)
    planar, certificate = is_planar(extended)
    diagnostic = None
    if not planar:
        diagnostic = _project_apex_witness(certificate, apex)
    return OuterplanarityAnswer(
        answer=planar, apex=apex, certificate=certificate, diagnostic=diagnostic
    )


def is_outerplanar(g: AnyGraph) -> bool:
    return check_outerplanarity(g).answer


def verify_outerplanarity(g: AnyGraph, answer: OuterplanarityAnswer) -> bool:
    extended, apex = apex_extension(g)
    if apex != answer.apex or not verify_certificate(extended, answer.certificate):
        return False
    if isinstance(answer.certificate, Embedding) != answer.answer:
        return False
    if answer.diagnostic is not None:
        return verify_certificate(g, answer.diagnostic)
    return True
