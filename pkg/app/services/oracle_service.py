"""
Independent oracles used to cross-check the graph builder and deciders:
the module-theoretic adjacency rule, a brute-force Kuratowski search,
the two-clique structure for n = p1 p2, the figure fixtures and the
cliques named in the proofs.
"""

import logging
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx

from app.exceptions import FixtureMismatch, PreconditionViolation
from app.repositories.figure_fixtures import figure_fixtures
from app.repositories.witness_fixtures import PROOF_WITNESSES
from app.schemas.arith_schema import ModulePair
from app.schemas.certificate_schema import ForbiddenSubdivision
from app.schemas.fixture_schema import FigureFixture, WitnessCheck
from app.services.arith_service import lcm, pair_from_exponents, validate_module_pair
from app.services.graph_service import (
    IdealGraph,
    build_graph,
    connected_components,
    induced_subgraph,
    isolated_vertices,
)
from app.services.planarity_service import AnyGraph, as_nx

logger = logging.getLogger(__name__)

WITNESS_PRIMES = (2, 3, 5, 7)


@lru_cache(maxsize=65536)
def _subgroup(d: int, n: int) -> FrozenSet[int]:
    return frozenset((d * t) % n for t in range(n))


def cyclic_subgroup(d: int, pair: ModulePair) -> FrozenSet[int]:
    """(dZ_m)Z_n, computed as {d t mod n : t = 0..n-1}."""
    return _subgroup(d, pair.n.value)


def oracle_adjacent(d1: int, d2: int, pair: ModulePair) -> bool:
    common = cyclic_subgroup(d1, pair) & cyclic_subgroup(d2, pair)
    return bool(common - {0})


def oracle_table(pair: ModulePair) -> List[Tuple[int, int, bool, bool]]:
    """(d1, d2, oracle answer, lcm-criterion answer) for every vertex pair."""
    n = pair.n.value
    graph = build_graph(pair)
    return [
        (d1, d2, oracle_adjacent(d1, d2, pair), lcm(d1, d2) % n != 0)
        for d1, d2 in combinations(graph.vertices, 2)
    ]


def verify_adjacency_criterion(pair: ModulePair) -> bool:
    return all(oracle == criterion for _, _, oracle, criterion in oracle_table(pair))


def _route_paths(
    graph: nx.Graph,
    branch: Sequence[int],
    pairs: Sequence[Tuple[int, int]],
    used: FrozenSet[int],
) -> Optional[List[List[int]]]:
    if not pairs:
        return []
    (a, b), rest = pairs[0], pairs[1:]
    blocked = set(branch) | used
    allowed = [v for v in graph.nodes if v not in blocked] + [a, b]
    for path in nx.all_simple_paths(graph.subgraph(allowed), a, b):
        found = _route_paths(graph, branch, rest, used | frozenset(path[1:-1]))
        if found is not None:
            return [list(path)] + found
    return None


def brute_force_kuratowski(g: AnyGraph) -> Optional[ForbiddenSubdivision]:
    """
    Exhaustive search for a K5 or K3,3 subdivision. Exponential; meant
    for graphs of at most eight or so vertices.
    """
    graph = as_nx(g)
    nodes = sorted(graph.nodes)

    k5_candidates = [v for v in nodes if graph.degree(v) >= 4]
    for branch in combinations(k5_candidates, 5):
        paths = _route_paths(graph, branch, list(combinations(branch, 2)), frozenset())
        if paths is not None:
            return ForbiddenSubdivision(kind="K5", branch_vertices=list(branch), paths=paths)

    k33_candidates = [v for v in nodes if graph.degree(v) >= 3]
    for branch in combinations(k33_candidates, 6):
        first, others = branch[0], branch[1:]
        for partners in combinations(others, 2):
            side = (first,) + partners
            other = [v for v in branch if v not in side]
            pairs = [(a, b) for a in side for b in other]
            paths = _route_paths(graph, branch, pairs, frozenset())
            if paths is not None:
                return ForbiddenSubdivision(
                    kind="K33", branch_vertices=list(side) + other, paths=paths
                )
    return None


def two_clique_check(pair: ModulePair, graph: Optional[IdealGraph] = None) -> bool:
    """
    For m = p1^a1 p2^a2 and n = p1 p2: removing the vertices d with n | d
    leaves exactly two cliques, the pure p1-powers and the pure p2-powers.
    """
    if pair.m.s != 2 or pair.beta != (1, 1):
        raise PreconditionViolation(f"{pair} is not of the shape m = p1^a1 p2^a2, n = p1 p2")

    graph = graph or build_graph(pair)
    n = pair.n.value
    rest = induced_subgraph(graph, [d for d in graph.vertices if d % n != 0])

    (p1, a1), (p2, a2) = pair.m.factors
    chains = [{p1**k for k in range(1, a1 + 1)}, {p2**k for k in range(1, a2 + 1)}]
    components = connected_components(rest)
    if sorted(map(sorted, components)) != sorted(map(sorted, chains)):
        logger.warning(f"{pair}: components {components} differ from {chains}")
        return False
    return all(
        rest.has_edge(a, b) for chain in chains for a, b in combinations(sorted(chain), 2)
    )


def check_figure(fixture: FigureFixture) -> IdealGraph:
    """Build the figure's graph and require it to reproduce the drawing."""
    graph = build_graph(validate_module_pair(fixture.m, fixture.n))
    if list(graph.vertices) != fixture.vertices:
        raise FixtureMismatch(f"Fig.{fixture.figure_id}: vertices {graph.vertices} != {fixture.vertices}")
    if graph.edges() != [tuple(e) for e in fixture.expected_edges]:
        raise FixtureMismatch(f"Fig.{fixture.figure_id}: edges {graph.edges()} != {fixture.expected_edges}")
    if sorted(isolated_vertices(graph)) != fixture.expected_isolated:
        raise FixtureMismatch(f"Fig.{fixture.figure_id}: isolated vertices differ")
    return graph


def check_figures(p1: int, p2: int, p3: int) -> List[Tuple[FigureFixture, IdealGraph]]:
    return [(fixture, check_figure(fixture)) for fixture in figure_fixtures(p1, p2, p3)]


def check_proof_witnesses(primes: Tuple[int, ...] = WITNESS_PRIMES) -> List[WitnessCheck]:
    checks = []
    for witness in PROOF_WITNESSES:
        used = primes[: len(witness.alpha)]
        pair = pair_from_exponents(used, witness.alpha, witness.beta)
        graph = build_graph(pair)
        members = []
        for exponents in witness.members:
            value = 1
            for p, e in zip(used, exponents):
                value *= p**e
            members.append(value)
        is_clique = all(d in graph.index for d in members) and all(
            graph.has_edge(a, b) for a, b in combinations(members, 2)
        )
        if not is_clique:
            logger.warning(f"{witness.theorem} {witness.case}: {members} is not a clique of {pair}")
        checks.append(
            WitnessCheck(
                theorem=witness.theorem,
                case=witness.case,
                m=pair.m.value,
                n=pair.n.value,
                members=members,
                is_clique=is_clique,
            )
        )
    return checks
