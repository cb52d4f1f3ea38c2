"""Min-plus conserved quantities U_k, P_k and their Young-diagram readings."""

import logging
import math
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from src.bbs.elimination import young_columns
from src.core.constants import Constants
from src.core.errors import RangeError
from src.models.combinatorics import UltraInvariants, YoungDiagram
from src.models.state import BlockState

logger = logging.getLogger(__name__)


def interleave(b: BlockState) -> List[int]:
    """(Q_0, W_0, Q_1, W_1, ...)"""
    return [v for pair in zip(b.Q, b.W) for v in pair]


def _linear_min(values: Sequence[int], m: int) -> float:
    """Least sum of m pairwise non-adjacent entries of a path; inf when impossible."""
    if m == 0:
        return 0
    if m < 0 or 2 * m - 1 > len(values):
        return math.inf
    # before[c] / here[c]: best with c picks among values[:i-1] / values[:i]
    before = [0] + [math.inf] * m
    here = [0] + [math.inf] * m
    for v in values:
        nxt = here[:]
        for c in range(1, m + 1):
            nxt[c] = min(here[c], before[c - 1] + v)
        before, here = here, nxt
    return here[m]


def _cyclic_min(values: Sequence[int], m: int) -> float:
    if m == 0:
        return 0
    if len(values) < 2:
        return values[0] if m == 1 and values else math.inf
    # position 0 left out, or taken (then both neighbours are out)
    return min(_linear_min(values[1:], m), values[0] + _linear_min(values[2:-1], m - 1))


def p_path(b: BlockState) -> List[int]:
    """The cycle with Q_{2 mod N} and W_{1 mod N} cut out, read as a path."""
    a = interleave(b)
    n = len(a)
    start = 2 * (2 % b.N) + 1
    return [a[(start + t) % n] for t in range(n - 2)]


def U_min(b: BlockState, k: int) -> int:
    if not 0 <= k <= b.N - 1:
        raise RangeError(f"U_k needs 0 <= k <= {b.N - 1}, got k={k}")
    return int(_cyclic_min(interleave(b), b.N - k))


def P_min(b: BlockState, k: int) -> int:
    if not 0 <= k <= b.N - 2:
        raise RangeError(f"P_k needs 0 <= k <= {b.N - 2}, got k={k}")
    return int(_linear_min(p_path(b), b.N - 1 - k))


def brute_force_min(values: Sequence[int], m: int, cyclic: bool = True) -> float:
    """Enumerate every non-adjacent m-subset; exponential, for cross-checks only."""
    n = len(values)
    best = math.inf
    for picks in combinations(range(n), m):
        gaps = [b - a for a, b in zip(picks, picks[1:])]
        if any(g < 2 for g in gaps):
            continue
        if cyclic and m >= 2 and n >= 2 and picks[0] + n - picks[-1] < 2:
            continue
        best = min(best, sum(values[i] for i in picks))
    return best


def U_from_young(d: YoungDiagram) -> Tuple[int, ...]:
    """U_k = boxes left after removing the k longest rows, k = 0..N-1."""
    rows = d.rows
    return tuple(d.total - sum(rows[:k]) for k in range(len(rows)))


def P_from_young_limit(b: BlockState, big: Optional[int] = None) -> Tuple[int, ...]:
    """P_k as U_{k+1} of the state with Q_{2 mod N} and W_{1 mod N} blown up.

    Any `big` above L gives the same answer; it defaults to L + 1.
    """
    if b.N == 1:
        return ()
    if big is None:
        big = b.L + 1
    if big <= b.L:
        raise RangeError(f"blow-up size {big} must exceed L={b.L}")
    Q = list(b.Q)
    W = list(b.W)
    Q[2 % b.N] = big
    W[1 % b.N] = big
    bits = "".join(Constants.BALL * q + Constants.EMPTY * w for q, w in zip(Q, W))
    U = U_from_young(YoungDiagram(columns=young_columns(bits)))
    return U[1:]


def ultra_invariants(b: BlockState) -> UltraInvariants:
    U = tuple(U_min(b, k) for k in range(b.N))
    P = tuple(P_min(b, k) for k in range(b.N - 1))
    logger.debug(f"ultra_invariants: N={b.N}, U={U}, P={P}")
    return UltraInvariants(U=U, P=P, M=Fraction(-b.L, 2), L=b.L)


def tropical_poly_roots(K: Sequence[float]) -> Tuple[float, ...]:
    """Root valuations of lambda^{N+1} + sum_{k<=N} c_k lambda^k where eps log c_k -> K_k.

    Returns (K_N, K_{N-1} - K_N, ..., K_0 - K_1), largest root first, valid
    when the K_{k} - K_{k+1} are decreasing in k.
    """
    N = len(K) - 1
    return (K[N],) + tuple(K[k] - K[k + 1] for k in range(N - 1, -1, -1))


def root_valuations(u: UltraInvariants) -> Tuple[int, ...]:
    """Predicted -eps log lambda_j = U_j - U_{j+1} for j = 0..g, i.e. the Young rows."""
    return tuple(-v for v in reversed(tropical_poly_roots([-x for x in u.U])))



def mu_valuations(u: UltraInvariants) -> Tuple[int, ...]:
    """Predicted -eps log mu_j for j = 1..g, smallest mu first: P_{j-1} - P_j with P_g = 0."""
    return tuple(-v for v in reversed(tropical_poly_roots([-x for x in u.P])))
