"""Periodic discrete Toda flow at finite eps, evaluated entirely on log values.

I = exp(-Q/eps) underflows doubles long before eps gets interesting, so
the state is kept as log I, log V and every positive sum goes through
log-sum-exp.
"""

import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.bbs.state import step_blocks
from src.core.errors import InvariantError
from src.models.numeric import ErrorReport, TodaState
from src.models.state import BlockState

logger = logging.getLogger(__name__)


def _logsumexp(x: np.ndarray) -> float:
    x_max = np.max(x)
    return float(x_max + np.log(np.sum(np.exp(x - x_max))))


def toda_init(b: BlockState, eps: float, perturbation: Optional[Sequence[float]] = None) -> TodaState:
    """logI_j = -Q_j/eps + delta_j, logV_j = -W_j/eps."""
    delta = list(perturbation) if perturbation is not None else [0.0] * b.N
    if len(delta) != b.N:
        raise ValueError(f"perturbation needs {b.N} entries, got {len(delta)}")
    return TodaState(
        logI=tuple(-q / eps + d for q, d in zip(b.Q, delta)),
        logV=tuple(-w / eps for w in b.W),
        eps=eps,
    )


def log_m2(s: TodaState) -> float:
    """log of prod I_j V_j; conserved by toda_step."""
    return math.fsum(s.logI) + math.fsum(s.logV)


def toda_step(s: TodaState) -> TodaState:
    a = np.asarray(s.logI, dtype=float)
    b = np.asarray(s.logV, dtype=float)
    N = s.N
    D = float(np.sum(b) - np.sum(a))
    if not D < 0:
        raise InvariantError(f"prod V must stay below prod I, log ratio {D}")
    # log(1 - prod V / prod I)
    log1m = math.log(-math.expm1(D))

    diff = b - a
    logI_next = np.empty(N)
    for i in range(N):
        # partial sums over l = 1..k of log(V_{i-l}/I_{i-l})
        terms = np.cumsum([diff[(i - l) % N] for l in range(1, N)]) if N > 1 else np.empty(0)
        logden = _logsumexp(np.concatenate(([0.0], terms)))
        logI_next[i] = np.logaddexp(b[i], a[i] + log1m - logden)
    logV_next = np.roll(a, -1) + b - logI_next
    return TodaState(
        logI=tuple(float(v) for v in logI_next),
        logV=tuple(float(v) for v in logV_next),
        eps=s.eps,
        t=s.t + 1,
    )


def toda_orbit(s: TodaState, steps: int) -> List[TodaState]:
    orbit = [s]
    for _ in range(steps):
        orbit.append(toda_step(orbit[-1]))
    return orbit


def _block_orbit(b: BlockState, steps: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    # Raw labels: index j here is the same lattice site as I_j, V_j.
    orbit = [(b.Q, b.W)]
    for _ in range(steps):
        orbit.append(step_blocks(*orbit[-1]))
    return orbit


def bridge_check(
    b: BlockState,
    eps_list: Sequence[float],
    steps: int,
    perturb: float = 0.0,
    seed: Optional[int] = None,
) -> ErrorReport:
    """Compare -eps log I, -eps log V with the exact block flow for every eps on the ladder."""
    if any(e <= 0 for e in eps_list) or any(x <= y for x, y in zip(eps_list, eps_list[1:])):
        raise ValueError(f"eps ladder must be positive and strictly decreasing, got {list(eps_list)}")
    exact = _block_orbit(b, steps)
    rng = np.random.default_rng(seed)

    errors_Q, errors_W = [], []
    for eps in eps_list:
        delta = rng.uniform(-perturb, perturb, b.N) if perturb else None
        orbit = toda_orbit(toda_init(b, eps, delta), steps)
        err_Q = err_W = 0.0
        for s, (Q, W) in zip(orbit, exact):
            q_approx, w_approx = s.ultra()
            err_Q = max(err_Q, max(abs(x - y) for x, y in zip(q_approx, Q)))
            err_W = max(err_W, max(abs(x - y) for x, y in zip(w_approx, W)))
        logger.debug(f"bridge_check: eps={eps}, max error Q {err_Q:.3e}, W {err_W:.3e}")
        errors_Q.append(err_Q)
        errors_W.append(err_W)

    worst = [max(q, w) for q, w in zip(errors_Q, errors_W)]
    monotone = all(y <= x + 1e-12 for x, y in zip(worst, worst[1:]))
    if not monotone:
        logger.warning(f"bridge_check: error trend not monotone along eps ladder: {worst}")
    scale = math.log(max(b.N, 2))
    fitted_C = max(err / (eps * scale) for err, eps in zip(worst, eps_list))

    return ErrorReport(
        state=b.text(),
        N=b.N,
        steps=steps,
        horizon=steps,
        eps=tuple(eps_list),
        max_error_Q=tuple(errors_Q),
        max_error_W=tuple(errors_W),
        monotone=monotone,
        fitted_C=fitted_C,
    )
