"""
Exhaustive cross-validation of the structural deciders against the
closed-form characterizations over every (m, n) with 2 <= m <= max_m,
n | m, n >= 2.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, List, Optional, Tuple

from app.exceptions import OutOfRange
from app.repositories.settings import settings
from app.schemas.arith_schema import ModulePair
from app.schemas.certificate_schema import ForbiddenSubdivision
from app.schemas.sweep_schema import (
    Failure,
    Mismatch,
    PairOutcome,
    PairRecord,
    SweepReport,
    Triple,
)
from app.services.arith_service import divisor_exponents, factorize, validate_module_pair
from app.services.closed_form_service import (
    CaseTables,
    DEFAULT_TABLES,
    classify_intersection_graph,
    predict,
)
from app.services.graph_service import build_graph, isolated_vertices
from app.services.oracle_service import (
    check_proof_witnesses,
    two_clique_check,
    verify_adjacency_criterion,
)
from app.services.planarity_service import (
    check_outerplanarity,
    is_planar,
    verify_certificate,
    verify_outerplanarity,
)
from app.services.ring_service import is_ring_graph

logger = logging.getLogger(__name__)

PROPERTIES = ("planar", "ring", "outerplanar")


def module_pairs(max_m: int) -> Iterator[Tuple[int, int]]:
    """Every (m, n) with 2 <= m <= max_m, n | m, n >= 2, sorted."""
    for m in range(2, max_m + 1):
        for n, _ in divisor_exponents(factorize(m)):
            if n >= 2:
                yield m, n


def evaluate_pair(pair: ModulePair, oracle_bound: int, cap: Optional[int] = None) -> PairOutcome:
    """Structural side of the sweep for one pair, every certificate audited."""
    m, n = pair.m.value, pair.n.value
    graph = build_graph(pair)
    certificate_failures: List[Failure] = []
    oracle_failures: List[Failure] = []
    consistency_failures: List[Failure] = []

    def fail(bucket: List[Failure], check: str, detail: str = "") -> None:
        logger.warning(f"{pair}: {check} {detail}")
        bucket.append(Failure(m=m, n=n, check=check, detail=detail))

    planar, certificate = is_planar(graph)
    if not verify_certificate(graph, certificate):
        fail(certificate_failures, "planarity-certificate", certificate.kind)

    outer = check_outerplanarity(graph)
    if not verify_outerplanarity(graph, outer):
        fail(certificate_failures, "outerplanarity-certificate", outer.certificate.kind)

    ring, report = is_ring_graph(graph, cap)

    v, e = len(graph.vertices), graph.edge_count
    if outer.answer and not ring:
        fail(consistency_failures, "implication", "outerplanar but not ring")
    if ring and not planar:
        fail(consistency_failures, "implication", "ring but not planar")
    if planar and v >= 3 and e > 3 * v - 6:
        fail(consistency_failures, "edge-bound", f"planar with E={e} > 3V-6")
    if outer.answer and v >= 2 and e > 2 * v - 3:
        fail(consistency_failures, "edge-bound", f"outerplanar with E={e} > 2V-3")
    if report.free_rank is not None:
        if report.cycle_rank > report.free_rank:
            fail(consistency_failures, "gitler", f"rank {report.cycle_rank} > frank {report.free_rank}")
        if (report.cycle_rank == report.free_rank) != report.decision:
            fail(
                consistency_failures,
                "gitler",
                f"rank={report.cycle_rank} frank={report.free_rank} decision={report.decision}",
            )

    isolated = isolated_vertices(graph)
    if any(d % n == 0 and d not in isolated for d in graph.vertices):
        fail(consistency_failures, "isolation", "a vertex divisible by n has a neighbor")

    if pair.m.s == 2 and pair.beta == (1, 1) and not two_clique_check(pair, graph):
        fail(consistency_failures, "two-cliques", "G minus {d : n | d} is not K_a1 u K_a2")

    if m <= oracle_bound and not verify_adjacency_criterion(pair):
        fail(oracle_failures, "adjacency-oracle")

    record = PairRecord(
        m=m,
        n=n,
        vertices=v,
        edges=e,
        isolated=len(isolated),
        structural=Triple(planar=planar, ring=ring, outerplanar=outer.answer),
        witness=certificate.kind if isinstance(certificate, ForbiddenSubdivision) else None,
        cycle_rank=report.cycle_rank,
        free_rank=report.free_rank,
        pcp_holds=report.pcp_holds,
        k4_subdivision_free=report.k4_subdivision_free,
    )
    return PairOutcome(
        record=record,
        certificate_failures=certificate_failures,
        oracle_failures=oracle_failures,
        consistency_failures=consistency_failures,
    )


def _evaluate_range(args: Tuple[int, int, int, Optional[int]]) -> List[PairOutcome]:
    low, high, oracle_bound, cap = args
    outcomes = []
    for m in range(low, high):
        for d, _ in divisor_exponents(factorize(m)):
            if d >= 2:
                outcomes.append(evaluate_pair(validate_module_pair(m, d), oracle_bound, cap))
    return outcomes


def structural_outcomes(
    max_m: int, oracle_bound: int, jobs: int = 1, cap: Optional[int] = None
) -> List[PairOutcome]:
    chunk = 50
    ranges = [(low, min(low + chunk, max_m + 1), oracle_bound, cap) for low in range(2, max_m + 1, chunk)]
    if jobs <= 1:
        batches = map(_evaluate_range, ranges)
        outcomes = [o for batch in batches for o in batch]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = [o for batch in pool.map(_evaluate_range, ranges) for o in batch]
    outcomes.sort(key=lambda o: (o.record.m, o.record.n))
    return outcomes


def compare_with_closed_form(
    records: List[PairRecord], tables: Optional[CaseTables] = None
) -> List[Mismatch]:
    """Fill in the closed-form side of each record and list disagreements."""
    tables = tables or DEFAULT_TABLES
    mismatches = []
    for record in records:
        pair = validate_module_pair(record.m, record.n)
        prediction = predict(pair, tables)
        record.closed_form = Triple(
            planar=prediction.planar, ring=prediction.ring, outerplanar=prediction.outerplanar
        )
        record.matched_cases = dict(prediction.matched_cases)

        for prop in PROPERTIES:
            structural = getattr(record.structural, prop)
            closed = getattr(prediction, prop)
            if structural != closed:
                mismatches.append(
                    Mismatch(m=record.m, n=record.n, property=prop, structural=structural, closed_form=closed)
                )

        if record.m == record.n:
            corollary = classify_intersection_graph(pair.m)
            for prop in PROPERTIES:
                structural = getattr(record.structural, prop)
                closed = getattr(corollary, prop)
                if structural != closed or closed != getattr(prediction, prop):
                    mismatches.append(
                        Mismatch(
                            m=record.m,
                            n=record.n,
                            property=f"{prop}-corollary",
                            structural=structural,
                            closed_form=closed,
                        )
                    )

        if prediction.ring != prediction.outerplanar:
            mismatches.append(
                Mismatch(
                    m=record.m,
                    n=record.n,
                    property="ring-vs-outerplanar-closed-form",
                    structural=prediction.ring,
                    closed_form=prediction.outerplanar,
                )
            )

    for mismatch in mismatches:
        logger.warning(f"mismatch {mismatch.model_dump()}")
    return mismatches


def sweep(
    max_m: int,
    oracle_bound: Optional[int] = None,
    jobs: Optional[int] = None,
    tables: Optional[CaseTables] = None,
    cap: Optional[int] = None,
) -> Tuple[SweepReport, List[PairRecord]]:
    if max_m < 2:
        raise OutOfRange(f"max_m must be at least 2 (got {max_m})")
    oracle_bound = settings.ORACLE_BOUND if oracle_bound is None else oracle_bound
    jobs = settings.SWEEP_JOBS if jobs is None else jobs

    started = time.perf_counter()
    logger.info(f"Sweeping all pairs with m <= {max_m} (oracle bound {oracle_bound}, {jobs} jobs)")

    outcomes = structural_outcomes(max_m, oracle_bound, jobs, cap)
    records = [o.record for o in outcomes]
    mismatches = compare_with_closed_form(records, tables)

    witness_failures = [
        Failure(m=w.m, n=w.n, check="proof-witness", detail=f"{w.theorem} {w.case}: {w.members}")
        for w in check_proof_witnesses()
        if not w.is_clique
    ]

    report = SweepReport(
        max_m=max_m,
        oracle_bound=oracle_bound,
        pairs_checked=len(records),
        mismatches=mismatches,
        certificate_failures=[f for o in outcomes for f in o.certificate_failures],
        oracle_failures=[f for o in outcomes for f in o.oracle_failures],
        consistency_failures=[f for o in outcomes for f in o.consistency_failures],
        witness_failures=witness_failures,
        elapsed_seconds=round(time.perf_counter() - started, 3),
    )
    logger.info(
        f"Checked {report.pairs_checked} pairs in {report.elapsed_seconds}s: "
        f"{len(report.mismatches)} mismatches, passed={report.passed}"
    )
    return report, records
