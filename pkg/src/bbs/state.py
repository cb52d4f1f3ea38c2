"""Exact pBBS states: parsing, the block codec, both evolution rules and rotations."""

import logging
import re
from itertools import product
from typing import Iterator, List, Optional, Tuple

import numpy as np

from src.core.constants import Constants
from src.core.errors import DegenerateStateError, InconsistentStateError, InvariantError
from src.models.state import BlockState, BoxString

logger = logging.getLogger(__name__)

_BLOCK_TEXT = re.compile(
    r"^\s*Q\s*=\s*(?P<q>[\d,\s]+);\s*W\s*=\s*(?P<w>[\d,\s]+)(;\s*offset\s*=\s*(?P<off>\d+))?\s*;?\s*$"
)


def _check_evolvable(bits: str) -> None:
    if 2 * bits.count(Constants.BALL) >= len(bits):
        raise InvariantError(
            f"ball count {bits.count(Constants.BALL)} must be below half of L={len(bits)}"
        )


def _check_nontrivial(bits: str) -> None:
    if Constants.BALL not in bits or Constants.EMPTY not in bits:
        raise DegenerateStateError(f"state {bits!r} needs at least one ball and one empty box")


def parse_state(text: str) -> BoxString:
    """Accept a raw 0/1 string or the block text "Q=5,1,6;W=3,2,12;offset=0"."""
    text = text.strip()
    match = _BLOCK_TEXT.match(text)
    if match:
        q = tuple(int(v) for v in match.group("q").split(",") if v.strip())
        w = tuple(int(v) for v in match.group("w").split(",") if v.strip())
        offset = int(match.group("off") or 0)
        if len(q) != len(w):
            raise InconsistentStateError(f"Q has {len(q)} entries but W has {len(w)}")
        total = sum(q) + sum(w)
        if total and offset >= total:
            raise InconsistentStateError(f"offset {offset} outside ring of length {total}")
        try:
            block = BlockState(Q=q, W=w, offset=offset)
        except ValueError as e:
            raise InvariantError(str(e)) from e
        return from_blocks(block)

    if set(text) - {Constants.BALL, Constants.EMPTY}:
        raise InvariantError(f"state must be a 0/1 string or block text, got {text!r}")
    x = BoxString(bits=text)
    _check_nontrivial(x.bits)
    _check_evolvable(x.bits)
    return x


def _block_start(bits: str) -> int:
    L = len(bits)
    for i in range(L):
        if bits[i] == Constants.BALL and bits[i - 1] == Constants.EMPTY:
            return i
    raise DegenerateStateError(f"state {bits!r} has no 1-block with a 0 to its left")


def _runs(bits: str, start: int) -> Tuple[List[int], List[int]]:
    rotated = bits[start:] + bits[:start]
    q: List[int] = []
    w: List[int] = []
    for run in re.finditer(r"1+|0+", rotated):
        (q if run.group()[0] == Constants.BALL else w).append(len(run.group()))
    return q, w


def to_blocks(x: BoxString) -> BlockState:
    bits = x.bits
    _check_nontrivial(bits)
    start = _block_start(bits)
    q, w = _runs(bits, start)
    try:
        return BlockState(Q=tuple(q), W=tuple(w), offset=start)
    except ValueError as e:
        raise InvariantError(str(e)) from e


def from_blocks(b: BlockState, L: Optional[int] = None) -> BoxString:
    if L is not None and L != b.L:
        raise InconsistentStateError(f"blocks describe L={b.L}, requested L={L}")
    body = "".join(Constants.BALL * q + Constants.EMPTY * w for q, w in zip(b.Q, b.W))
    shift = (b.L - b.offset) % b.L
    return BoxString(bits=body[shift:] + body[:shift])


def evolve_bits(bits: str) -> str:
    """Carrier form of the update; every ball copy lands on the nearest free box to the right."""
    L = len(bits)
    out = [Constants.EMPTY] * L
    carry = 0
    # The first sweep only settles the carrier load entering box 0.
    for sweep in range(2):
        for i, bit in enumerate(bits):
            if bit == Constants.BALL:
                carry += 1
                out[i] = Constants.EMPTY
            elif carry:
                carry -= 1
                out[i] = Constants.BALL
            else:
                out[i] = Constants.EMPTY
        if sweep == 0 and carry == 0:
            break
    return "".join(out)


def evolve_balls(x: BoxString) -> BoxString:
    _check_evolvable(x.bits)
    return BoxString(bits=evolve_bits(x.bits))


def evolve_balls_literal(x: BoxString, order: str = "ltr") -> BoxString:
    """Copy-and-move rule processed one copy at a time, left-to-right or right-to-left.

    Slow; kept as an oracle for the carrier form.
    """
    bits = x.bits
    _check_evolvable(bits)
    L = len(bits)
    originals = [i for i, b in enumerate(bits) if b == Constants.BALL]
    occupied = [b == Constants.BALL for b in bits]
    copies = [False] * L
    if order == "ltr":
        sequence = originals
    elif order == "rtl":
        sequence = originals[::-1]
    else:
        raise ValueError(f"unknown processing order {order!r}")

    for i in sequence:
        # nearest box holding neither an original nor an earlier copy
        j = (i + 1) % L
        while occupied[j] or copies[j]:
            j = (j + 1) % L
        copies[j] = True
    return BoxString(bits="".join(Constants.BALL if c else Constants.EMPTY for c in copies))


def step_blocks(Q: Tuple[int, ...], W: Tuple[int, ...]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """One step of the min-plus block evolution, labels kept."""
    N = len(Q)
    X = []
    for i in range(N):
        best = 0
        acc = 0
        for k in range(1, N):
            acc += Q[(i - k) % N] - W[(i - k) % N]
            best = max(best, acc)
        X.append(best)
    Q_next = tuple(min(W[i], X[i] + Q[i]) for i in range(N))
    W_next = tuple(Q[(i + 1) % N] + W[i] - Q_next[i] for i in range(N))
    return Q_next, W_next


def evolve_blocks(b: BlockState) -> BlockState:
    """Evolve in block coordinates and relabel so Q_0 starts nearest to box 0.

    The new 1-block i starts where 0-block i started, W_{i}^{t+1} >= 1
    and Q_{i}^{t+1} >= 1 always hold, so N never drops.
    """
    if sum(b.Q) >= sum(b.W):
        raise InvariantError("ball count must stay below half the ring")
    Q_next, W_next = step_blocks(b.Q, b.W)
    L = b.L
    starts = []
    pos = (b.offset + b.Q[0]) % L
    for i in range(b.N):
        starts.append(pos)
        pos = (pos + Q_next[i] + W_next[i]) % L
    first = min(range(b.N), key=lambda i: starts[i])
    Q_rot = Q_next[first:] + Q_next[:first]
    W_rot = W_next[first:] + W_next[:first]
    logger.debug(f"evolve_blocks: N={b.N} offset {b.offset} -> {starts[first]}")
    return BlockState(Q=Q_rot, W=W_rot, offset=starts[first])


def rotate(x: BoxString, m: int) -> BoxString:
    """Apply S^m; S sends the first letter to the end."""
    if not x.bits:
        return x
    m %= x.L
    return BoxString(bits=x.bits[m:] + x.bits[:m])


def rotation_offset(x: BoxString, y: BoxString) -> Optional[int]:
    if x.L != y.L:
        return None
    if not x.bits:
        return 0
    found = (x.bits + x.bits).find(y.bits)
    return found if 0 <= found < x.L else None


def canonical_rotation(bits: str) -> str:
    """Lexicographically least rotation; labels a rotation class."""
    if not bits:
        return bits
    return min(bits[m:] + bits[:m] for m in range(len(bits)))


def evolve_rows(x: BoxString, steps: int) -> List[BoxString]:
    rows = [x]
    for _ in range(steps):
        rows.append(evolve_balls(rows[-1]))
    return rows


def random_state(rng: np.random.Generator, L: int, min_solitons: int = 1) -> BoxString:
    """Uniform-density random state of length L with 1 <= balls < L/2 and at least `min_solitons` blocks."""
    if L < 3:
        raise DegenerateStateError(f"no valid state of length {L}")
    while True:
        density = rng.uniform(0.1, 0.45)
        bits = "".join(Constants.BALL if flip else Constants.EMPTY for flip in rng.random(L) < density)
        balls = bits.count(Constants.BALL)
        if balls < 1 or 2 * balls >= L:
            continue
        # one "10" boundary per cyclic block of balls
        if (bits + bits[0]).count(Constants.BALL + Constants.EMPTY) < min_solitons:
            continue
        return BoxString(bits=bits)


def enumerate_states(L: int) -> Iterator[str]:
    """Every 0/1 string of length L with 1 <= balls < L/2."""
    for bits in product(Constants.EMPTY + Constants.BALL, repeat=L):
        text = "".join(bits)
        balls = text.count(Constants.BALL)
        if 1 <= balls and 2 * balls < L:
            yield text
