"""
Ring graph recognition.

A graph is a ring graph when its cycle rank equals its free rank (the
number of chordless cycles), equivalently when any two chordless cycles
share at most one edge and no subdivision of K4 is present. The second
form decides; the first is carried in the report as a cross-check.
"""

import logging
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from app.exceptions import CapExceeded
from app.repositories.settings import settings
from app.schemas.certificate_schema import RingReport
from app.services.planarity_service import AnyGraph, as_nx, is_planar

logger = logging.getLogger(__name__)

Cycle = Tuple[int, ...]


def canonical_cycle(cycle: Sequence[int]) -> Cycle:
    """Lexicographically least rotation or reflection of a vertex cycle."""
    k = len(cycle)
    forward = list(cycle)
    backward = forward[::-1]
    return min(
        tuple(seq[i:] + seq[:i]) for seq in (forward, backward) for i in range(k)
    )


def chordless_cycles(g: AnyGraph, cap: Optional[int] = None) -> List[Cycle]:
    """
    All chordless cycles of length >= 3, each once in canonical form,
    sorted. Raises CapExceeded once more than cap cycles are found.
    """
    cap = settings.CYCLE_CAP if cap is None else cap
    graph = as_nx(g)
    found = set()
    for cycle in nx.chordless_cycles(graph):
        if len(cycle) < 3:
            continue
        found.add(canonical_cycle(cycle))
        if len(found) > cap:
            logger.warning(f"chordless cycle enumeration stopped after {cap} cycles")
            raise CapExceeded(cap, sorted(found))
    return sorted(found)


def cycle_edges(cycle: Sequence[int]) -> set:
    return {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}


def primitive_cycle_property(cycles: Sequence[Sequence[int]]) -> bool:
    """True iff every two distinct cycles share at most one edge."""
    edge_sets = [cycle_edges(c) for c in cycles]
    return all(len(a & b) <= 1 for a, b in combinations(edge_sets, 2))


def _is_series_parallel(edges: List[Tuple[int, int]]) -> bool:
    """
    Degree-2 suppression with parallel edges merged; a biconnected block is
    series-parallel iff it reduces to a single edge.
    """
    adjacency = {}
    for a, b in edges:
        adjacency.setdefault(a, set()).add(b)
        adjacency.setdefault(b, set()).add(a)

    pending = [v for v, nbrs in adjacency.items() if len(nbrs) == 2]
    while pending and len(adjacency) > 2:
        v = pending.pop()
        if v not in adjacency or len(adjacency[v]) != 2:
            continue
        a, b = adjacency.pop(v)
        adjacency[a].discard(v)
        adjacency[b].discard(v)
        adjacency[a].add(b)
        adjacency[b].add(a)
        pending.extend(w for w in (a, b) if len(adjacency[w]) == 2)

    return len(adjacency) <= 2


def has_k4_subdivision(g: AnyGraph) -> bool:
    graph = as_nx(g)
    for block in nx.biconnected_component_edges(graph):
        block = list(block)
        if len(block) >= 6 and not _is_series_parallel(block):
            return True
    return False


def cycle_rank(g: AnyGraph) -> int:
    graph = as_nx(g)
    return (
        graph.number_of_edges()
        - graph.number_of_nodes()
        + nx.number_connected_components(graph)
    )


def is_ring_graph(g: AnyGraph, cap: Optional[int] = None) -> Tuple[bool, RingReport]:
    graph = as_nx(g)
    rank = cycle_rank(graph)

    planar, _ = is_planar(graph)
    if not planar:
        return False, RingReport(
            cycle_rank=rank,
            k4_subdivision_free=False,
            decision=False,
            planar=False,
        )

    k4_free = not has_k4_subdivision(graph)
    try:
        cycles = chordless_cycles(graph, cap)
    except CapExceeded as e:
        partial_pcp = primitive_cycle_property(e.partial)
        # frank > cap; once that passes rank the graph cannot be a ring graph
        decision = k4_free and partial_pcp and len(e.partial) <= rank
        return decision, RingReport(
            cycle_rank=rank,
            pcp_holds=None if partial_pcp else False,
            k4_subdivision_free=k4_free,
            decision=decision,
        )

    pcp = primitive_cycle_property(cycles)
    decision = pcp and k4_free
    free_rank = len(cycles)
    if decision != (rank == free_rank):
        logger.warning(
            f"rank/frank disagreement: rank={rank} frank={free_rank} pcp={pcp} k4_free={k4_free}"
        )
    return decision, RingReport(
        cycle_rank=rank,
        free_rank=free_rank,
        pcp_holds=pcp,
        k4_subdivision_free=k4_free,
        decision=decision,
        primitive_cycles=cycles,
    )
