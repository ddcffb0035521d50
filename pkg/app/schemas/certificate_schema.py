from typing import Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field


class Embedding(BaseModel):
    """Rotation system: for each vertex, its neighbors in cyclic order."""

    kind: Literal["embedding"] = "embedding"
    rotation: Dict[int, List[int]]


class ForbiddenSubdivision(BaseModel):
    """
    A subdivision of K5, K3,3, K4 or K2,3 inside the graph.

    paths[i] runs between two branch vertices; its inner vertices belong to
    no other path and are not branch vertices.
    """

    kind: Literal["K5", "K33", "K4", "K23"]
    branch_vertices: List[int]
    paths: List[List[int]]


PlanarityCertificate = Union[Embedding, ForbiddenSubdivision]


class OuterplanarityAnswer(BaseModel):
    """
    Outerplanarity through the apex extension.

    certificate is issued for the apex graph (the apex vertex is labelled `apex`); diagnostic,
    when present, is a K4 or K2,3 subdivision in the original graph.
    """

    answer: bool
    apex: int
    certificate: Union[Embedding, ForbiddenSubdivision] = Field(discriminator="kind")
    diagnostic: Optional[ForbiddenSubdivision] = None


class RingReport(BaseModel):
    cycle_rank: int
    free_rank: Optional[int] = None
    pcp_holds: Optional[bool] = None
    k4_subdivision_free: bool
    decision: bool
    planar: bool = True
    primitive_cycles: Optional[List[Tuple[int, ...]]] = None
