"""
Closed-form characterizations of planar, ring and outerplanar G_n(Z_m)
evaluated on exponent patterns alone.

Each case is a tuple of slots, one per prime of m, constraining the
exponent of that prime in m (alpha) and in n (beta). A pair matches a
case when some assignment of its primes to the slots satisfies every
slot, so the "without loss of generality" ordering of the statements is
undone here.
"""

from itertools import permutations
from typing import Dict, List, Optional, Tuple

from app.schemas.arith_schema import Factorization, ModulePair
from app.schemas.classification_schema import (
    CasePattern,
    ClosedFormAnswer,
    ExponentBound,
    Prediction,
    Property,
    Slot,
)

CaseTable = Tuple[CasePattern, ...]
CaseTables = Dict[Property, CaseTable]


def _any() -> ExponentBound:
    return ExponentBound(lo=1)


def _exactly(k: int) -> ExponentBound:
    return ExponentBound(lo=k, hi=k)


def _at_most(k: int, lo: int = 1) -> ExponentBound:
    return ExponentBound(lo=lo, hi=k)


def _slot(alpha: ExponentBound, beta: ExponentBound) -> Slot:
    return Slot(alpha=alpha, beta=beta)


def _case(property: Property, case_id: int, description: str, *slots: Slot) -> CasePattern:
    return CasePattern(case_id=case_id, property=property, description=description, slots=slots)


PLANAR_CASES: CaseTable = (
    _case("planar", 1, "m = p1^a1, n = p1^b1, b1 <= 5",
          _slot(_any(), _at_most(5))),
    _case("planar", 2, "m = p1^a1 p2^a2, n = p1, a2 <= 4",
          _slot(_any(), _exactly(1)), _slot(_at_most(4), _exactly(0))),
    _case("planar", 3, "m = p1^a1 p2, n = p1^2",
          _slot(_any(), _exactly(2)), _slot(_exactly(1), _exactly(0))),
    _case("planar", 4, "m = p1^a1 p2 p3, n = p1",
          _slot(_any(), _exactly(1)), _slot(_exactly(1), _exactly(0)), _slot(_exactly(1), _exactly(0))),
    _case("planar", 5, "m = p1 p2^a2, n = p1 p2^2, a2 in {2, 3, 4}",
          _slot(_exactly(1), _exactly(1)), _slot(_at_most(4), _exactly(2))),
    _case("planar", 6, "m = p1 p2 p3, n = p1 p2",
          _slot(_exactly(1), _exactly(1)), _slot(_exactly(1), _exactly(1)), _slot(_exactly(1), _exactly(0))),
    _case("planar", 7, "m = p1^a1 p2^a2, n = p1 p2, a1, a2 <= 4",
          _slot(_at_most(4), _exactly(1)), _slot(_at_most(4), _exactly(1))),
    _case("planar", 8, "m = n = p1 p2 p3",
          _slot(_exactly(1), _exactly(1)), _slot(_exactly(1), _exactly(1)), _slot(_exactly(1), _exactly(1))),
)

RING_CASES: CaseTable = (
    _case("ring", 1, "m = p1^a1, n = p1^b1, b1 <= 4",
          _slot(_any(), _at_most(4))),
    _case("ring", 2, "m = p1^a1 p2^a2, n = p1, a2 <= 3",
          _slot(_any(), _exactly(1)), _slot(_at_most(3), _exactly(0))),
    _case("ring", 3, "m = p1^a1 p2, n = p1^2",
          _slot(_any(), _exactly(2)), _slot(_exactly(1), _exactly(0))),
    _case("ring", 4, "m = p1^a1 p2 p3, n = p1",
          _slot(_any(), _exactly(1)), _slot(_exactly(1), _exactly(0)), _slot(_exactly(1), _exactly(0))),
    _case("ring", 5, "m = p1 p2^a2, n = p1 p2^2, a2 in {2, 3}",
          _slot(_exactly(1), _exactly(1)), _slot(_at_most(3), _exactly(2))),
    _case("ring", 6, "m = p1 p2 p3, n = p1 p2",
          _slot(_exactly(1), _exactly(1)), _slot(_exactly(1), _exactly(1)), _slot(_exactly(1), _exactly(0))),
    _case("ring", 7, "m = p1^a1 p2^a2, n = p1 p2, a1, a2 <= 3",
          _slot(_at_most(3), _exactly(1)), _slot(_at_most(3), _exactly(1))),
    _case("ring", 8, "m = n = p1 p2 p3",
          _slot(_exactly(1), _exactly(1)), _slot(_exactly(1), _exactly(1)), _slot(_exactly(1), _exactly(1))),
)

# Kept as its own table: equality with RING_CASES is checked, not assumed.
OUTERPLANAR_CASES: CaseTable = (
    _case("outerplanar", 1, "m = p1^a1, n = p1^b1, b1 <= 4",
          _slot(_any(), _at_most(4))),
    _case("outerplanar", 2, "m = p1^a1 p2^a2, n = p1, a2 <= 3",
          _slot(_any(), _exactly(1)), _slot(_at_most(3), _exactly(0))),
    _case("outerplanar", 3, "m = p1^a1 p2, n = p1^2",
          _slot(_any(), _exactly(2)), _slot(_exactly(1), _exactly(0))),
    _case("outerplanar", 4, "m = p1^a1 p2 p3, n = p1",
          _slot(_any(), _exactly(1)), _slot(_exactly(1), _exactly(0)), _slot(_exactly(1), _exactly(0))),
    _case("outerplanar", 5, "m = p1 p2^a2, n = p1 p2^2, a2 in {2, 3}",
          _slot(_exactly(1), _exactly(1)), _slot(_at_most(3), _exactly(2))),
    _case("outerplanar", 6, "m = p1 p2 p3, n = p1 p2",
          _slot(_exactly(1), _exactly(1)), _slot(_exactly(1), _exactly(1)), _slot(_exactly(1), _exactly(0))),
    _case("outerplanar", 7, "m = p1^a1 p2^a2, n = p1 p2, a1, a2 <= 3",
          _slot(_at_most(3), _exactly(1)), _slot(_at_most(3), _exactly(1))),
    _case("outerplanar", 8, "m = n = p1 p2 p3",
          _slot(_exactly(1), _exactly(1)), _slot(_exactly(1), _exactly(1)), _slot(_exactly(1), _exactly(1))),
)

DEFAULT_TABLES: CaseTables = {
    "planar": PLANAR_CASES,
    "ring": RING_CASES,
    "outerplanar": OUTERPLANAR_CASES,
}

# exponent multisets of m, sorted, for n = m
PLANAR_WHEN_N_EQUALS_M = {(1,), (2,), (3,), (4,), (5,), (1, 1), (1, 2), (1, 1, 1)}
RING_WHEN_N_EQUALS_M = {(1,), (2,), (3,), (4,), (1, 1), (1, 2), (1, 1, 1)}
OUTERPLANAR_WHEN_N_EQUALS_M = {(1,), (2,), (3,), (4,), (1, 1), (1, 2), (1, 1, 1)}


def matches_case(pair: ModulePair, case: CasePattern) -> bool:
    alpha, beta = pair.alpha, pair.beta
    if len(alpha) != len(case.slots):
        return False
    for order in permutations(range(len(alpha))):
        if all(
            slot.alpha.admits(alpha[i]) and slot.beta.admits(beta[i])
            for slot, i in zip(case.slots, order)
        ):
            return True
    return False


def _classify(pair: ModulePair, table: CaseTable) -> ClosedFormAnswer:
    matched = [case.case_id for case in table if matches_case(pair, case)]
    return ClosedFormAnswer(answer=bool(matched), matched_cases=matched)


def classify_planar(pair: ModulePair, table: Optional[CaseTable] = None) -> ClosedFormAnswer:
    return _classify(pair, PLANAR_CASES if table is None else table)


def classify_ring(pair: ModulePair, table: Optional[CaseTable] = None) -> ClosedFormAnswer:
    return _classify(pair, RING_CASES if table is None else table)


def classify_outerplanar(pair: ModulePair, table: Optional[CaseTable] = None) -> ClosedFormAnswer:
    return _classify(pair, OUTERPLANAR_CASES if table is None else table)


def predict(pair: ModulePair, tables: Optional[CaseTables] = None) -> Prediction:
    tables = tables or DEFAULT_TABLES
    planar = classify_planar(pair, tables["planar"])
    ring = classify_ring(pair, tables["ring"])
    outerplanar = classify_outerplanar(pair, tables["outerplanar"])
    return Prediction(
        planar=planar.answer,
        ring=ring.answer,
        outerplanar=outerplanar.answer,
        matched_cases={
            "planar": planar.matched_cases,
            "ring": ring.matched_cases,
            "outerplanar": outerplanar.matched_cases,
        },
    )


def classify_intersection_graph(m: Factorization) -> Prediction:
    """
    The n = m specialization, read off the exponent multiset of m. Matched
    case ids come from the general tables at n = m.
    """
    shape = tuple(sorted(m.exponents))
    general = predict(
        ModulePair(m=m, n=m, beta=m.exponents, support=frozenset(range(m.s)))
    )
    return Prediction(
        planar=shape in PLANAR_WHEN_N_EQUALS_M,
        ring=shape in RING_WHEN_N_EQUALS_M,
        outerplanar=shape in OUTERPLANAR_WHEN_N_EQUALS_M,
        matched_cases=general.matched_cases,
    )


def bound_sites(table: CaseTable) -> List[Tuple[int, int, str]]:
    """(case_id, slot index, "alpha" | "beta") of every finite upper bound that is not an exact value."""
    sites = []
    for case in table:
        for index, slot in enumerate(case.slots):
            for field in ("alpha", "beta"):
                bound = getattr(slot, field)
                if bound.hi is not None and bound.hi != bound.lo:
                    sites.append((case.case_id, index, field))
    return sites
