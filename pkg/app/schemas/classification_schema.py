from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from app.schemas.certificate_schema import (
    ForbiddenSubdivision,
    OuterplanarityAnswer,
    PlanarityCertificate,
    RingReport,
)

Property = Literal["planar", "ring", "outerplanar"]
Mode = Literal["structural", "closed-form", "both"]


class ExponentBound(BaseModel):
    """Inclusive range; hi=None means unbounded."""

    model_config = ConfigDict(frozen=True)

    lo: int
    hi: Optional[int] = None

    def admits(self, value: int) -> bool:
        return value >= self.lo and (self.hi is None or value <= self.hi)


class Slot(BaseModel):
    """Constraint on one symbolic prime p_i: its exponent in m and in n."""

    model_config = ConfigDict(frozen=True)

    alpha: ExponentBound
    beta: ExponentBound


class CasePattern(BaseModel):
    model_config = ConfigDict(frozen=True)

    case_id: int
    property: Property
    description: str
    slots: Tuple[Slot, ...]


class ClosedFormAnswer(BaseModel):
    answer: bool
    matched_cases: List[int]


class Prediction(BaseModel):
    planar: bool
    ring: bool
    outerplanar: bool
    matched_cases: Dict[Property, List[int]]


class StructuralClassification(BaseModel):
    planar: bool
    outerplanar: bool
    ring: bool
    planarity_certificate: PlanarityCertificate
    outerplanarity: OuterplanarityAnswer
    ring_report: RingReport
    certificates_verified: bool


class ClassifyResponse(BaseModel):
    m: int
    n: int
    mode: Mode
    structural: Optional[StructuralClassification] = None
    closed_form: Optional[Prediction] = None
    agreement: Optional[bool] = None
    witness: Optional[ForbiddenSubdivision] = None
