from datetime import datetime
from typing import Any, Callable, Dict

from fastapi import APIRouter, HTTPException

from src import __version__
from src.bbs.periods import analyze_periods
from src.bbs.spectral import build_curve_recurrence
from src.bbs.state import evolve_rows
from src.bbs.toda import bridge_check
from src.conversion.request_converter import convert_request_to_state
from src.conversion.response_converter import (
    convert_cycle_response,
    convert_evolve_response,
    convert_invariants_response,
    convert_spectrum_response,
    convert_toda_response,
    convert_young_response,
)
from src.core.logging import logger
from src.models.api import CycleRequest, EvolveRequest, SpectrumRequest, StateRequest, TodaRequest

router = APIRouter()


def _run(name: str, compute: Callable[[], Dict[str, Any]]) -> Dict[str, Any]:
    """Run one request, mapping library errors to 400 and anything else to 500."""
    try:
        return compute()
    except HTTPException:
        raise
    except ValueError as e:
        # every library error is a ValueError
        logger.debug(f"{name}: rejected input: {e}")
        raise HTTPException(status_code=400, detail={"error": type(e).__name__, "detail": str(e)})
    except Exception as e:
        import traceback
        logger.error(f"Unexpected error processing {name} request: {e}")
        logger.error(traceback.format_exc())
        raise HTTPException(status_code=500, detail=str(e))


@router.post("/v1/evolve")
def evolve(request: EvolveRequest):
    def compute():
        x, _ = convert_request_to_state(request.state)
        return convert_evolve_response(evolve_rows(x, request.steps))

    return _run("evolve", compute)


@router.post("/v1/young")
def young(request: StateRequest):
    def compute():
        x, b = convert_request_to_state(request.state)
        return convert_young_response(x, b)

    return _run("young", compute)


@router.post("/v1/invariants")
def invariants(request: StateRequest):
    def compute():
        x, b = convert_request_to_state(request.state)
        return convert_invariants_response(x, b)

    return _run("invariants", compute)


@router.post("/v1/cycle")
def cycle(request: CycleRequest):
    def compute():
        x, _ = convert_request_to_state(request.state)
        return convert_cycle_response(analyze_periods(x, request.cap))

    return _run("cycle", compute)


@router.post("/v1/toda")
def toda(request: TodaRequest):
    def compute():
        _, b = convert_request_to_state(request.state)
        return convert_toda_response(bridge_check(b, request.eps, request.steps))

    return _run("toda", compute)


@router.post("/v1/spectrum")
def spectrum(request: SpectrumRequest):
    def compute():
        _, b = convert_request_to_state(request.state)
        logger.debug(f"spectrum: {b.text()} at eps={request.eps}, prec={request.prec or 'derived'}")
        return convert_spectrum_response(build_curve_recurrence(b, request.eps, request.prec), b)

    return _run("spectrum", compute)


@router.get("/health")
async def health_check():
    """Health check endpoint"""
    return {
        "status": "healthy",
        "timestamp": datetime.now().isoformat(),
        "version": __version__,
    }
