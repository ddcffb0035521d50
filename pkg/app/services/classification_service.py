"""
Single-pair classification shared by the CLI and the HTTP API.
"""

import logging
from typing import List, Tuple

from app.schemas.arith_schema import ModulePair
from app.schemas.certificate_schema import ForbiddenSubdivision
from app.schemas.classification_schema import (
    ClassifyResponse,
    Mode,
    StructuralClassification,
)
from app.schemas.fixture_schema import FigureClassification
from app.services.closed_form_service import predict
from app.services.graph_service import IdealGraph, build_graph
from app.services.oracle_service import check_figures
from app.services.planarity_service import (
    check_outerplanarity,
    is_planar,
    verify_certificate,
    verify_outerplanarity,
)
from app.services.ring_service import is_ring_graph

logger = logging.getLogger(__name__)


def classify_structurally(pair: ModulePair) -> StructuralClassification:
    graph = build_graph(pair)
    planar, certificate = is_planar(graph)
    outer = check_outerplanarity(graph)
    ring, report = is_ring_graph(graph)
    verified = verify_certificate(graph, certificate) and verify_outerplanarity(graph, outer)
    if not verified:
        logger.warning(f"{pair}: certificate verification failed")
    return StructuralClassification(
        planar=planar,
        outerplanar=outer.answer,
        ring=ring,
        planarity_certificate=certificate,
        outerplanarity=outer,
        ring_report=report,
        certificates_verified=verified,
    )


def classify(pair: ModulePair, mode: Mode = "both") -> ClassifyResponse:
    response = ClassifyResponse(m=pair.m.value, n=pair.n.value, mode=mode)
    if mode in ("structural", "both"):
        response.structural = classify_structurally(pair)
        if isinstance(response.structural.planarity_certificate, ForbiddenSubdivision):
            response.witness = response.structural.planarity_certificate
    if mode in ("closed-form", "both"):
        response.closed_form = predict(pair)
    if mode == "both":
        s, c = response.structural, response.closed_form
        response.agreement = (
            s.certificates_verified
            and s.planar == c.planar
            and s.ring == c.ring
            and s.outerplanar == c.outerplanar
        )
        logger.debug(f"{pair}: agreement={response.agreement}")
    return response


def classify_figures(p1: int, p2: int, p3: int) -> List[Tuple[FigureClassification, IdealGraph]]:
    """Check the five example graphs against their drawings and classify them."""
    results = []
    for fixture, graph in check_figures(p1, p2, p3):
        response = classify(graph.pair, "both")
        s, c = response.structural, response.closed_form
        summary = FigureClassification(
            figure_id=fixture.figure_id,
            caption=fixture.caption,
            m=fixture.m,
            n=fixture.n,
            edges=graph.edge_count,
            isolated=fixture.expected_isolated,
            planar=s.planar,
            ring=s.ring,
            outerplanar=s.outerplanar,
            matched_cases=c.matched_cases,
            agreement=bool(response.agreement),
        )
        results.append((summary, graph))
    return results
