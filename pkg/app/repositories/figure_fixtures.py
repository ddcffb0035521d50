"""
The five example graphs, transcribed from their drawings.

Vertices are exponent vectors over (p1, p2, p3) named v1..v6 as in the
worked examples; edges are the drawn (vi, vj) pairs. Nothing here is
recomputed from the adjacency rule.
"""

from typing import Dict, List, Tuple

from app.schemas.fixture_schema import FigureFixture

Exponents = Tuple[int, int, int]

FIGURES: List[Dict] = [
    {
        "figure_id": 1,
        "caption": "G(Z_{p1 p2^2})",
        "m": (1, 2, 0),
        "n": (1, 2, 0),
        "labels": {1: (0, 1, 0), 2: (1, 1, 0), 3: (0, 2, 0), 4: (1, 0, 0)},
        "edges": [(1, 2), (4, 2), (1, 4), (1, 3)],
    },
    {
        "figure_id": 2,
        "caption": "G_{p1 p2^2}(Z_{p1 p2^3})",
        "m": (1, 3, 0),
        "n": (1, 2, 0),
        "labels": {
            1: (1, 1, 0),
            2: (1, 2, 0),
            3: (0, 2, 0),
            4: (1, 0, 0),
            5: (0, 1, 0),
            6: (0, 3, 0),
        },
        "edges": [(3, 6), (6, 5), (3, 5), (5, 4), (1, 4), (1, 5)],
    },
    {
        "figure_id": 3,
        "caption": "G_{p1 p2}(Z_{p1 p2 p3})",
        "m": (1, 1, 1),
        "n": (1, 1, 0),
        "labels": {
            1: (1, 0, 0),
            2: (1, 1, 0),
            3: (0, 1, 0),
            4: (1, 0, 1),
            5: (0, 0, 1),
            6: (0, 1, 1),
        },
        "edges": [(3, 6), (6, 5), (3, 5), (5, 4), (1, 4), (1, 5)],
    },
    {
        "figure_id": 4,
        "caption": "G(Z_{p1 p2 p3})",
        "m": (1, 1, 1),
        "n": (1, 1, 1),
        "labels": {
            1: (1, 1, 0),
            2: (1, 0, 0),
            3: (1, 0, 1),
            4: (0, 1, 0),
            5: (0, 0, 1),
            6: (0, 1, 1),
        },
        "edges": [(6, 5), (5, 3), (4, 2), (5, 2), (6, 4), (4, 1), (3, 2), (2, 1), (4, 5)],
    },
    {
        "figure_id": 5,
        "caption": "G_{p1 p2}(Z_{p1 p2^3})",
        "m": (1, 3, 0),
        "n": (1, 1, 0),
        "labels": {
            1: (0, 1, 0),
            2: (0, 2, 0),
            3: (0, 3, 0),
            4: (1, 1, 0),
            5: (1, 0, 0),
            6: (1, 2, 0),
        },
        "edges": [(1, 2), (2, 3), (3, 1)],
    },
]


def _value(primes: Tuple[int, int, int], exponents: Exponents) -> int:
    value = 1
    for p, e in zip(primes, exponents):
        value *= p**e
    return value


def figure_fixtures(p1: int, p2: int, p3: int) -> List[FigureFixture]:
    primes = (p1, p2, p3)
    fixtures = []
    for figure in FIGURES:
        labels = {v: _value(primes, e) for v, e in figure["labels"].items()}
        edges = sorted(tuple(sorted((labels[a], labels[b]))) for a, b in figure["edges"])
        touched = {d for edge in edges for d in edge}
        fixtures.append(
            FigureFixture(
                figure_id=figure["figure_id"],
                caption=figure["caption"],
                m=_value(primes, figure["m"]),
                n=_value(primes, figure["n"]),
                vertices=sorted(labels.values()),
                expected_edges=edges,
                expected_isolated=sorted(set(labels.values()) - touched),
            )
        )
    return fixtures
