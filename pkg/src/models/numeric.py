from fractions import Fraction
from pydantic import BaseModel, ConfigDict, field_serializer, model_validator
from typing import Any, List, Optional, Tuple
import math


class TodaState(BaseModel):
    """Periodic discrete Toda data in log form: logI_j = log I_j^t, logV_j = log V_j^t."""

    model_config = ConfigDict(frozen=True)

    logI: Tuple[float, ...]
    logV: Tuple[float, ...]
    eps: float
    t: int = 0

    @model_validator(mode="after")
    def _check(self) -> "TodaState":
        if not self.logI or len(self.logI) != len(self.logV):
            raise ValueError("logI and logV must be non-empty and of equal length")
        if self.eps <= 0:
            raise ValueError(f"eps must be positive, got {self.eps}")
        if not all(math.isfinite(v) for v in self.logI + self.logV):
            raise ValueError("Toda state entries must be finite")
        return self

    @property
    def N(self) -> int:
        return len(self.logI)

    def ultra(self) -> Tuple[Tuple[float, ...], Tuple[float, ...]]:
        """(-eps log I, -eps log V), the block lengths this state approximates."""
        return (
            tuple(-self.eps * v for v in self.logI),
            tuple(-self.eps * v for v in self.logV),
        )


class ErrorReport(BaseModel):
    """Distance between the Toda flow and the exact block flow along an eps ladder."""

    model_config = ConfigDict(frozen=True)

    state: str
    N: int
    steps: int
    horizon: int
    eps: Tuple[float, ...]
    max_error_Q: Tuple[float, ...]
    max_error_W: Tuple[float, ...]
    monotone: bool
    fitted_C: float


class SpectralCurve(BaseModel):
    """Delta and y_{N+1} coefficients, lowest degree first, at working precision `prec`."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    eps: float
    prec: int
    N: int
    delta: Tuple[Any, ...]
    m2: Any
    yN1: Tuple[Any, ...]
    I: Tuple[Any, ...] = ()
    V: Tuple[Any, ...] = ()

    @field_serializer("delta", "yN1", "I", "V")
    def _numbers(self, v: Tuple[Any, ...]) -> List[str]:
        return [str(c) for c in v]

    @field_serializer("m2")
    def _number(self, v: Any) -> str:
        return str(v)


class RootSet(BaseModel):
    """lam: roots of Delta; lamPM: roots of Delta^2 - 4 m^2; mu: roots of y_{N+1}; all ascending."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lam: Tuple[Any, ...]
    lamPM: Tuple[Any, ...]
    mu: Tuple[Any, ...]
    minus: Tuple[Any, ...] = ()
    plus: Tuple[Any, ...] = ()

    @field_serializer("lam", "lamPM", "mu", "minus", "plus")
    def _numbers(self, v: Tuple[Any, ...]) -> List[str]:
        return [str(c) for c in v]


class RenkonReport(BaseModel):
    """Valuations of the spectral data against the Young rows and U, P."""

    model_config = ConfigDict(frozen=True)

    state: str
    eps: Tuple[float, ...]
    prec: Tuple[int, ...]
    rows: Tuple[int, ...]
    lam_minus: Tuple[Tuple[float, ...], ...]
    lam_plus: Tuple[Tuple[float, ...], ...]
    lam: Tuple[Tuple[float, ...], ...]
    limit_minus: Tuple[float, ...]
    limit_plus: Tuple[float, ...]
    limit_lam: Tuple[float, ...]
    max_relative_error: float
    m_valuation: Tuple[float, ...]
    u_limit: Tuple[float, ...]
    v_limit: Tuple[float, ...]
    U: Tuple[int, ...]
    P: Tuple[int, ...]
    invariants_ok: bool
    branches_ok: bool
    ok: bool


class XiEstimate(BaseModel):
    model_config = ConfigDict(frozen=True)

    j: int
    eps: Tuple[float, ...]
    values: Tuple[float, ...]
    limit: float
    identity_error: float
    converged: bool
    closed_form: Optional[float] = None


class PeriodAsymptotics(BaseModel):
    """Leading 1/eps coefficients of the period matrix data, exact."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    Bhat: Tuple[Tuple[Fraction, ...], ...]
    nuhat: Tuple[Fraction, ...]
    rhat: Tuple[Fraction, ...]
    sigma: Tuple[Fraction, ...]
    bk: Tuple[Fraction, ...]
    ck: Tuple[Fraction, ...]

    @field_serializer("nuhat", "rhat", "sigma", "bk", "ck")
    def _fractions(self, v: Tuple[Fraction, ...]) -> List[str]:
        return [str(x) for x in v]

    @field_serializer("Bhat")
    def _matrix(self, v: Tuple[Tuple[Fraction, ...], ...]) -> List[List[str]]:
        return [[str(x) for x in row] for row in v]


class PeriodReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    state: str
    L: int
    rows: Tuple[int, ...]
    l: Tuple[int, ...]
    Nj: Tuple[int, ...]
    f_formula: Optional[int] = None
    r_formula: Optional[int] = None
    r_sigma: Optional[int] = None
    r_sigma_termwise: Optional[int] = None
    f_brute: Optional[int] = None
    r_brute: Optional[int] = None
    internal_symmetry: bool = False
