import os
from itertools import combinations
from pathlib import Path
from typing import List

import networkx as nx
import pytest
from hypothesis import strategies as st

from app.schemas.sweep_schema import PairRecord
from app.services.closed_form_service import CaseTables
from app.services.sweep_service import structural_outcomes

GOLDEN = Path(__file__).parent / "golden"


@st.composite
def small_graphs(draw, max_vertices: int = 8) -> nx.Graph:
    """Simple graphs on vertices 0..k-1, k <= max_vertices."""
    k = draw(st.integers(min_value=0, max_value=max_vertices))
    pairs = list(combinations(range(k), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    graph = nx.Graph()
    graph.add_nodes_from(range(k))
    graph.add_edges_from(p for p, keep in zip(pairs, chosen) if keep)
    return graph


def perturb(
    tables: CaseTables, prop: str, case_id: int, slot: int, field: str, delta: int
) -> CaseTables:
    """Copy of the tables with one finite upper bound moved by delta."""
    cases = []
    for case in tables[prop]:
        if case.case_id == case_id:
            slots = list(case.slots)
            bound = getattr(slots[slot], field)
            slots[slot] = slots[slot].model_copy(
                update={field: bound.model_copy(update={"hi": bound.hi + delta})}
            )
            case = case.model_copy(update={"slots": tuple(slots)})
        cases.append(case)
    return {**tables, prop: tuple(cases)}


@pytest.fixture
def golden():
    def read(name: str) -> str:
        return (GOLDEN / name).read_text()

    return read


@pytest.fixture(scope="session")
def structural_records_2000() -> List[PairRecord]:
    """Structural side of every pair with m <= 2000, computed once per session."""
    outcomes = structural_outcomes(2000, oracle_bound=0, jobs=os.cpu_count() or 1)
    for outcome in outcomes:
        assert not outcome.certificate_failures
        assert not outcome.consistency_failures
    return [o.record for o in outcomes]


def fresh(records: List[PairRecord]) -> List[PairRecord]:
    return [r.model_copy(deep=True) for r in records]


