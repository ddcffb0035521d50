from typing import List, Literal, Tuple

from pydantic import BaseModel


class FigureFixture(BaseModel):
    figure_id: int
    caption: str
    m: int
    n: int
    vertices: List[int]
    expected_edges: List[Tuple[int, int]]
    expected_isolated: List[int]


class ProofWitness(BaseModel):
    """A clique named in a proof, as exponent vectors over (p1, p2, p3, p4)."""

    theorem: Literal["planar", "ring"]
    case: str
    alpha: Tuple[int, ...]
    beta: Tuple[int, ...]
    kind: Literal["K5", "K4"]
    members: List[Tuple[int, ...]]


class WitnessCheck(BaseModel):
    theorem: str
    case: str
    m: int
    n: int
    members: List[int]
    is_clique: bool


class FigureClassification(BaseModel):
    figure_id: int
    caption: str
    m: int
    n: int
    edges: int
    isolated: List[int]
    planar: bool
    ring: bool
    outerplanar: bool
    matched_cases: dict
    agreement: bool
