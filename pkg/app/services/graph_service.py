"""
Construction of G_n(Z_m) and its basic structure.

Vertices are the proper nontrivial divisors d of m (the ideals dZ_m);
d1 and d2 are adjacent iff n does not divide lcm(d1, d2).
"""

from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as cs_connected_components

from app.exceptions import UnknownVertex
from app.schemas.arith_schema import ModulePair
from app.services.arith_service import divisor_exponents, lcm


class IdealGraph:
    """
    Immutable labeled simple graph.

    Adjacency is kept both as a boolean matrix over vertex indices and as
    per-vertex neighbor tuples.
    """

    def __init__(
        self,
        pair: Optional[ModulePair],
        vertices: Sequence[int],
        matrix: np.ndarray,
        exponents: Optional[Dict[int, Tuple[int, ...]]] = None,
    ):
        self.pair = pair
        self.vertices: Tuple[int, ...] = tuple(vertices)
        self.index: Dict[int, int] = {d: i for i, d in enumerate(self.vertices)}
        self.matrix = matrix
        self.matrix.setflags(write=False)
        self.exponents: Dict[int, Tuple[int, ...]] = dict(exponents or {})
        self.adjacency: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(self.vertices[j] for j in np.flatnonzero(row)) for row in matrix
        )
        self.edge_count = int(matrix.sum()) // 2

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        name = str(self.pair) if self.pair is not None else "IdealGraph"
        return f"<{name} |V|={len(self.vertices)} |E|={self.edge_count}>"

    def has_edge(self, d1: int, d2: int) -> bool:
        return bool(self.matrix[self.index[d1], self.index[d2]])

    def neighbors(self, d: int) -> Tuple[int, ...]:
        return self.adjacency[self.index[d]]

    def degree(self, d: int) -> int:
        return len(self.neighbors(d))

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (d1, d2) with d1 < d2, lexicographic."""
        rows, cols = np.nonzero(np.triu(self.matrix, k=1))
        return sorted((self.vertices[i], self.vertices[j]) for i, j in zip(rows, cols))

    @cached_property
    def nx_graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges())
        return g


def build_graph(pair: ModulePair) -> IdealGraph:
    n = pair.n.value
    labelled = [(d, e) for d, e in divisor_exponents(pair.m) if 1 < d < pair.m.value]
    vertices = [d for d, _ in labelled]

    size = len(vertices)
    matrix = np.zeros((size, size), dtype=bool)
    for i in range(size):
        for j in range(i + 1, size):
            if lcm(vertices[i], vertices[j]) % n != 0:
                matrix[i, j] = matrix[j, i] = True

    return IdealGraph(pair, vertices, matrix, exponents=dict(labelled))


def from_edges(vertices: Iterable[int], edges: Iterable[Tuple[int, int]], pair: Optional[ModulePair] = None) -> IdealGraph:
    """IdealGraph-shaped graph from explicit vertex and edge lists."""
    ordered = sorted(set(vertices))
    index = {d: i for i, d in enumerate(ordered)}
    matrix = np.zeros((len(ordered), len(ordered)), dtype=bool)
    for a, b in edges:
        if a not in index or b not in index:
            raise UnknownVertex({x for x in (a, b) if x not in index})
        if a != b:
            matrix[index[a], index[b]] = matrix[index[b], index[a]] = True
    return IdealGraph(pair, ordered, matrix)


def isolated_vertices(g: IdealGraph) -> Set[int]:
    return {d for d, row in zip(g.vertices, g.matrix) if not row.any()}


def induced_subgraph(g: IdealGraph, keep: Iterable[int]) -> IdealGraph:
    keep = set(keep)
    unknown = keep - set(g.vertices)
    if unknown:
        raise UnknownVertex(unknown)

    kept = [d for d in g.vertices if d in keep]
    idx = [g.index[d] for d in kept]
    matrix = g.matrix[np.ix_(idx, idx)].copy()
    exponents = {d: g.exponents[d] for d in kept if d in g.exponents}
    return IdealGraph(g.pair, kept, matrix, exponents=exponents)


def connected_components(g: IdealGraph) -> List[Set[int]]:
    """Vertex sets of the components, ordered by their smallest label."""
    if not g.vertices:
        return []
    count, labels = cs_connected_components(csr_matrix(g.matrix), directed=False)
    components: List[Set[int]] = [set() for _ in range(count)]
    for d, label in zip(g.vertices, labels):
        components[label].add(d)
    return sorted(components, key=min)
