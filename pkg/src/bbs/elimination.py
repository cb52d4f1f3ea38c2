"""10-elimination, 0-solitons and the conserved Young diagram."""

import logging
from itertools import accumulate
from typing import List, Tuple

from src.bbs.state import evolve_bits
from src.core.constants import Constants
from src.core.errors import DegenerateStateError
from src.models.combinatorics import YoungDiagram
from src.models.state import BoxString, MarkedState

logger = logging.getLogger(__name__)


def _eliminate(bits: str, markers: Tuple[int, ...] = ()) -> Tuple[str, Tuple[int, ...], int]:
    """Remove every adjacent "10" pair once.

    Returns the shortened string, the carried plus new markers, and the
    number of pairs removed. Marker k sits in the gap just before box k.
    """
    L = len(bits)
    removed = [False] * L
    pairs = 0
    for i in range(L):
        if bits[i] == Constants.BALL and bits[(i + 1) % L] == Constants.EMPTY:
            removed[i] = removed[(i + 1) % L] = True
            pairs += 1
    if not pairs:
        return bits, tuple(markers), 0

    survivors = "".join(b for b, gone in zip(bits, removed) if not gone)
    size = len(survivors)
    # before[k] = survivors with original index < k
    before = [0] + list(accumulate(0 if gone else 1 for gone in removed))

    def new_index(k: int) -> int:
        return before[k] % size if size else 0

    moved = [new_index(k) for k in markers]
    if not size:
        return "", tuple(sorted(moved + [0] * pairs)), pairs

    first = removed.index(False)
    i = first
    created: List[int] = []
    for _ in range(L):
        i = (i + 1) % L
        if removed[i] and not removed[i - 1]:
            start = i
            length = 0
            while removed[(start + length) % L]:
                length += 1
            left = bits[start - 1]
            right = bits[(start + length) % L]
            count = length // 2 - (left == Constants.BALL and right == Constants.EMPTY)
            created.extend([new_index(start)] * count)
    return survivors, tuple(sorted(moved + created)), pairs


def ten_eliminate(m: MarkedState) -> MarkedState:
    bits = m.state.bits
    if Constants.BALL not in bits:
        raise DegenerateStateError("10-elimination needs at least one soliton")
    new_bits, markers, pairs = _eliminate(bits, m.zero_solitons)
    logger.debug(f"ten_eliminate: L={len(bits)} -> {len(new_bits)}, removed {pairs} pairs")
    return MarkedState(state=BoxString(bits=new_bits), zero_solitons=markers)


def elimination_chain(x: BoxString) -> List[MarkedState]:
    """El^0(x), El^1(x), ... until no "10" pair is left."""
    chain = [MarkedState(state=x)]
    while Constants.BALL in chain[-1].state.bits and Constants.EMPTY in chain[-1].state.bits:
        chain.append(ten_eliminate(chain[-1]))
    return chain


def young_columns(bits: str) -> Tuple[int, ...]:
    """Pairs removed at each elimination step; works on any 0/1 string."""
    columns = []
    while True:
        bits, _, pairs = _eliminate(bits)
        if not pairs:
            return tuple(columns)
        columns.append(pairs)


def young_diagram(x: BoxString) -> YoungDiagram:
    if Constants.BALL not in x.bits or Constants.EMPTY not in x.bits:
        raise DegenerateStateError(f"state {x.bits!r} has no soliton content")
    return YoungDiagram(columns=young_columns(x.bits))


def restore(m: MarkedState) -> BoxString:
    """Undo one elimination up to rotation, treating every marker as freshly created."""
    bits = m.state.bits
    if not bits:
        return BoxString(bits="10" * len(m.zero_solitons))
    out = []
    for i, bit in enumerate(bits):
        boundary = bits[i - 1] == Constants.BALL and bit == Constants.EMPTY
        out.append("10" * (m.zero_solitons.count(i) + boundary))
        out.append(bit)
    return BoxString(bits="".join(out))


def evolve_marked(m: MarkedState) -> MarkedState:
    """One time step of an eliminated state; 0-solitons stay where they are."""
    return MarkedState(state=BoxString(bits=evolve_bits(m.state.bits)), zero_solitons=m.zero_solitons)


def rotate_marked(m: MarkedState, shift: int) -> MarkedState:
    L = m.state.L
    if not L:
        return m
    shift %= L
    bits = m.state.bits[shift:] + m.state.bits[:shift]
    markers = tuple(sorted((k - shift) % L for k in m.zero_solitons))
    return MarkedState(state=BoxString(bits=bits), zero_solitons=markers)


def same_rotation_class(a: MarkedState, b: MarkedState) -> bool:
    if a.state.L != b.state.L:
        return False
    if not a.state.L:
        return a.zero_solitons == b.zero_solitons
    return any(rotate_marked(a, s) == b for s in range(a.state.L))
