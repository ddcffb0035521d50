import networkx as nx
import pytest
from hypothesis import given, settings

from app.exceptions import CapExceeded
from app.services.arith_service import validate_module_pair
from app.services.graph_service import build_graph
from app.services.ring_service import (
    canonical_cycle,
    chordless_cycles,
    cycle_rank,
    has_k4_subdivision,
    is_ring_graph,
    primitive_cycle_property,
)
from tests.conftest import small_graphs


def test_canonical_cycle() -> None:
    assert canonical_cycle((3, 1, 2)) == (1, 2, 3)
    assert canonical_cycle((4, 2, 3, 1)) == (1, 3, 2, 4)
    assert canonical_cycle((1, 3, 2, 4)) == canonical_cycle((2, 3, 1, 4))


def test_chordless_cycles_of_small_graphs() -> None:
    assert chordless_cycles(nx.cycle_graph(3)) == [(0, 1, 2)]
    assert chordless_cycles(nx.path_graph(5)) == []
    assert chordless_cycles(nx.complete_graph(4)) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert chordless_cycles(nx.cycle_graph(6)) == [(0, 1, 2, 3, 4, 5)]


def test_chordless_cycles_of_complete_ideal_graph_on_three_primes() -> None:
    g = build_graph(validate_module_pair(30, 30))
    assert chordless_cycles(g) == [(2, 3, 5), (2, 3, 6), (2, 5, 10), (3, 5, 15)]


def test_chordless_cycles_cap() -> None:
    with pytest.raises(CapExceeded) as excinfo:
        chordless_cycles(nx.complete_graph(4), cap=2)
    assert excinfo.value.cap == 2
    assert len(excinfo.value.partial) == 3


def test_primitive_cycle_property() -> None:
    assert primitive_cycle_property([(0, 1, 2), (0, 2, 3)])
    assert not primitive_cycle_property([(0, 1, 2, 3), (0, 1, 2, 4)])
    assert primitive_cycle_property([])


def test_k4_subdivisions() -> None:
    assert has_k4_subdivision(nx.complete_graph(4))
    subdivided = nx.complete_graph(4)
    subdivided.remove_edge(0, 1)
    subdivided.add_edges_from([(0, 4), (4, 1)])
    assert has_k4_subdivision(subdivided)
    assert not has_k4_subdivision(nx.balanced_tree(2, 3))
    assert not has_k4_subdivision(nx.cycle_graph(8))
    assert not has_k4_subdivision(nx.complete_bipartite_graph(2, 3))
    assert has_k4_subdivision(build_graph(validate_module_pair(32, 32)))


def test_cycle_rank() -> None:
    assert cycle_rank(nx.complete_graph(4)) == 3
    assert cycle_rank(nx.balanced_tree(2, 2)) == 0
    assert cycle_rank(build_graph(validate_module_pair(30, 30))) == 4


def test_single_triangle_is_a_ring_graph() -> None:
    ring, report = is_ring_graph(build_graph(validate_module_pair(18, 18)))
    assert ring
    assert (report.cycle_rank, report.free_rank) == (1, 1)
    assert report.primitive_cycles == [(2, 3, 6)]


def test_k4_is_not_a_ring_graph() -> None:
    ring, report = is_ring_graph(nx.complete_graph(4))
    assert not ring
    assert (report.cycle_rank, report.free_rank) == (3, 4)
    assert report.pcp_holds
    assert not report.k4_subdivision_free


def test_k23_fails_the_primitive_cycle_property() -> None:
    ring, report = is_ring_graph(nx.complete_bipartite_graph(2, 3))
    assert not ring
    assert report.k4_subdivision_free
    assert report.pcp_holds is False
    assert (report.cycle_rank, report.free_rank) == (2, 3)


def test_ring_graph_with_four_triangles() -> None:
    ring, report = is_ring_graph(build_graph(validate_module_pair(30, 30)))
    assert ring
    assert (report.cycle_rank, report.free_rank) == (4, 4)


def test_forest_is_a_ring_graph() -> None:
    ring, report = is_ring_graph(build_graph(validate_module_pair(36, 6)))
    assert ring
    assert (report.cycle_rank, report.free_rank) == (0, 0)


def test_nonplanar_graph_short_circuits() -> None:
    ring, report = is_ring_graph(build_graph(validate_module_pair(128, 64)))
    assert not ring
    assert not report.planar
    assert report.free_rank is None


def test_cap_exceeded_still_decides() -> None:
    ring, report = is_ring_graph(nx.complete_graph(4), cap=2)
    assert not ring
    assert report.free_rank is None

    ring, report = is_ring_graph(build_graph(validate_module_pair(30, 30)), cap=2)
    assert ring
    assert report.free_rank is None
    assert report.pcp_holds is None


@settings(max_examples=150, deadline=None)
@given(small_graphs())
def test_rank_equals_free_rank_exactly_for_ring_graphs(graph: nx.Graph) -> None:
    ring, report = is_ring_graph(graph)
    if report.free_rank is not None:
        assert report.cycle_rank <= report.free_rank
        assert (report.cycle_rank == report.free_rank) == ring
