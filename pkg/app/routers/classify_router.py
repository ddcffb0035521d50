import logging
from typing import List, Literal

from fastapi import APIRouter, HTTPException, Query, status

from app.exceptions import IdealGraphError
from app.repositories.settings import settings
from app.schemas.arith_schema import ModulePair
from app.schemas.classification_schema import ClassifyResponse
from app.schemas.fixture_schema import FigureClassification
from app.services.arith_service import is_prime, validate_module_pair
from app.services.classification_service import classify, classify_figures

classify_Router = APIRouter(prefix="/api")

logger = logging.getLogger(__name__)


def get_pair(m: int, n: int) -> ModulePair:
    if m > settings.MAX_API_M:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=f"m must not exceed {settings.MAX_API_M}",
        )
    try:
        return validate_module_pair(m, n)
    except IdealGraphError as e:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(e))


@classify_Router.get("/classify", response_model=ClassifyResponse, tags=["classify"])
def classify_pair(
    m: int = Query(..., description="order of the ring Z_m"),
    n: int = Query(..., description="order of the module Z_n, a divisor of m"),
    mode: Literal["structural", "closed-form", "both"] = Query(default="both"),
):
    pair = get_pair(m, n)
    return classify(pair, mode)


@classify_Router.get("/figures", response_model=List[FigureClassification], tags=["classify"])
def get_figures(p1: int = 2, p2: int = 3, p3: int = 5):
    primes = (p1, p2, p3)
    if len(set(primes)) != 3 or not all(is_prime(p) for p in primes):
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail="p1, p2 and p3 must be three distinct primes",
        )
    try:
        return [summary for summary, _ in classify_figures(*primes)]
    except IdealGraphError as e:
        logger.error(f"Fixture failure: {e}")
        raise HTTPException(status_code=status.HTTP_500_INTERNAL_SERVER_ERROR, detail=str(e))
