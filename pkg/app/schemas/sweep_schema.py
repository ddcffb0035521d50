from typing import Dict, List, Optional

from pydantic import BaseModel, computed_field


class Triple(BaseModel):
    planar: bool
    ring: bool
    outerplanar: bool


class PairRecord(BaseModel):
    record: str = "pair"
    m: int
    n: int
    vertices: int
    edges: int
    isolated: int
    structural: Triple
    closed_form: Optional[Triple] = None
    matched_cases: Optional[Dict[str, List[int]]] = None
    witness: Optional[str] = None
    cycle_rank: int
    free_rank: Optional[int] = None
    pcp_holds: Optional[bool] = None
    k4_subdivision_free: bool


class Mismatch(BaseModel):
    m: int
    n: int
    property: str
    structural: bool
    closed_form: bool


class Failure(BaseModel):
    m: int
    n: int
    check: str
    detail: str = ""


class PairOutcome(BaseModel):
    """Structural evaluation of one pair with the failures found on the way."""

    record: PairRecord
    certificate_failures: List[Failure] = []
    oracle_failures: List[Failure] = []
    consistency_failures: List[Failure] = []


class SweepReport(BaseModel):
    record: str = "summary"
    max_m: int
    oracle_bound: int
    pairs_checked: int
    mismatches: List[Mismatch] = []
    certificate_failures: List[Failure] = []
    oracle_failures: List[Failure] = []
    consistency_failures: List[Failure] = []
    witness_failures: List[Failure] = []
    elapsed_seconds: float

    @computed_field
    @property
    def passed(self) -> bool:
        return not (
            self.mismatches
            or self.certificate_failures
            or self.oracle_failures
            or self.consistency_failures
            or self.witness_failures
        )
