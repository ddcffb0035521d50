from typing import Literal

from fastapi import APIRouter, Query
from fastapi.responses import PlainTextResponse

from app.routers.classify_router import get_pair
from app.schemas.graph_schema import ExportedGraph
from app.services.export_service import render, to_exported
from app.services.graph_service import build_graph

graph_Router = APIRouter(prefix="/api")


@graph_Router.get("/graph", tags=["graph"], response_model=ExportedGraph)
def get_graph(
    m: int,
    n: int,
    format: Literal["json", "dot", "edgelist"] = Query(default="json"),
):
    graph = build_graph(get_pair(m, n))
    if format == "json":
        return to_exported(graph)
    return PlainTextResponse(render(graph, format))
