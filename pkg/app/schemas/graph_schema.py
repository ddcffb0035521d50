from typing import List, Literal, Tuple

from pydantic import BaseModel

ExportFormat = Literal["dot", "json", "edgelist"]


class ExportedVertex(BaseModel):
    label: int
    ideal: str
    exponents: List[int]


class ExportedGraph(BaseModel):
    """
    JSON export of G_n(Z_m). Vertices ascend by label, edges are (d1, d2)
    with d1 < d2 in lexicographic order, isolated lists every degree-0 vertex.
    """

    format: Literal["json"] = "json"
    m: int
    n: int
    vertices: List[ExportedVertex]
    edges: List[Tuple[int, int]]
    isolated: List[int]
