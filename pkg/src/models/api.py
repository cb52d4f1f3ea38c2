from pydantic import BaseModel, Field, field_validator
from typing import List, Literal, Optional, Tuple

from src.core.config import config
from src.core.constants import Constants


def _check_ladder(v: Tuple[float, ...]) -> Tuple[float, ...]:
    if not v:
        raise ValueError("eps ladder must not be empty")
    if any(e <= 0 for e in v):
        raise ValueError("eps values must be positive")
    if any(a <= b for a, b in zip(v, v[1:])):
        raise ValueError("eps ladder must be strictly decreasing")
    return v


class RunConfig(BaseModel):
    """Everything one CLI invocation needs."""

    command: str
    state: Optional[str] = None
    eps: Tuple[float, ...] = Field(default_factory=lambda: config.default_eps)
    prec: Optional[int] = None
    steps: int = Field(default_factory=lambda: config.steps, ge=0)
    seed: int = Field(default_factory=lambda: config.seed)
    cap: int = Field(default_factory=lambda: config.cap, ge=1)
    format: Literal["json", "ascii"] = Constants.FORMAT_JSON
    suite: Optional[str] = None

    @field_validator("eps")
    @classmethod
    def _ladder(cls, v: Tuple[float, ...]) -> Tuple[float, ...]:
        return _check_ladder(v)

    @field_validator("prec")
    @classmethod
    def _prec(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v < 64:
            raise ValueError("prec must be at least 64 bits")
        return v


class StateRequest(BaseModel):
    state: str


class EvolveRequest(BaseModel):
    state: str
    steps: int = Field(default=1, ge=0, le=10000)


class CycleRequest(BaseModel):
    state: str
    cap: Optional[int] = Field(default=None, ge=1)


class TodaRequest(BaseModel):
    state: str
    eps: List[float] = Field(default_factory=lambda: list(config.default_eps))
    steps: int = Field(default_factory=lambda: config.steps, ge=0, le=1000)

    @field_validator("eps")
    @classmethod
    def _ladder(cls, v: List[float]) -> List[float]:
        return list(_check_ladder(tuple(v)))


class SpectrumRequest(BaseModel):
    state: str
    eps: float = Field(default_factory=lambda: config.default_eps[0], gt=0)
    prec: Optional[int] = Field(default=None, ge=64)


class CheckResult(BaseModel):
    name: str
    passed: bool
    cases: int = 0
    detail: str = ""


class SuiteReport(BaseModel):
    suite: str
    seed: int
    quick: bool = False
    passed: bool
    checks: List[CheckResult]
