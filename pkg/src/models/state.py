from pydantic import BaseModel, ConfigDict, field_validator, model_validator
from typing import Tuple


class BoxString(BaseModel):
    """Exact cyclic 0/1 string of L boxes; '1' is a filled box.

    Only the alphabet is checked. Eliminated stages reuse this type, down
    to the empty ring left by eliminating "10", so the bound balls < L/2
    is enforced where a state enters the dynamics: parse_state,
    BlockState and the evolution functions.
    """

    model_config = ConfigDict(frozen=True)

    bits: str

    @field_validator("bits")
    @classmethod
    def _alphabet(cls, v: str) -> str:
        if set(v) - {"0", "1"}:
            raise ValueError(f"box string may only contain '0' and '1', got {v!r}")
        return v

    @property
    def L(self) -> int:
        return len(self.bits)

    @property
    def balls(self) -> int:
        return self.bits.count("1")

    def __str__(self) -> str:
        return self.bits


class BlockState(BaseModel):
    """Cyclic block encoding: Q_j ones followed by W_j zeros, Q_0 starting at `offset`."""

    model_config = ConfigDict(frozen=True)

    Q: Tuple[int, ...]
    W: Tuple[int, ...]
    offset: int = 0

    @model_validator(mode="after")
    def _check(self) -> "BlockState":
        if not self.Q or len(self.Q) != len(self.W):
            raise ValueError("Q and W must be non-empty and of equal length")
        if min(self.Q) < 1 or min(self.W) < 1:
            raise ValueError("block lengths must be positive")
        if sum(self.Q) >= sum(self.W):
            raise ValueError(
                f"ball count must stay below half the ring: sum(Q)={sum(self.Q)}, sum(W)={sum(self.W)}"
            )
        if not 0 <= self.offset < self.L:
            raise ValueError(f"offset {self.offset} outside [0, {self.L})")
        return self

    @property
    def N(self) -> int:
        return len(self.Q)

    @property
    def L(self) -> int:
        return sum(self.Q) + sum(self.W)

    def text(self) -> str:
        q = ",".join(str(v) for v in self.Q)
        w = ",".join(str(v) for v in self.W)
        return f"Q={q};W={w};offset={self.offset}"


class MarkedState(BaseModel):
    """An eliminated state together with its 0-soliton markers.

    Markers are a sorted multiset of gap indices: marker k sits just
    before box k. Coincident markers are kept as repeated entries.
    """

    model_config = ConfigDict(frozen=True)

    state: BoxString
    zero_solitons: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check(self) -> "MarkedState":
        if list(self.zero_solitons) != sorted(self.zero_solitons):
            raise ValueError("zero_solitons must be sorted")
        bound = max(self.state.L, 1)
        if any(not 0 <= k < bound for k in self.zero_solitons):
            raise ValueError(f"marker outside [0, {bound})")
        return self

    def render(self) -> str:
        """Print the state with '|' inserted at every marker."""
        out = []
        markers = list(self.zero_solitons)
        for i, bit in enumerate(self.state.bits):
            out.extend("|" * markers.count(i))
            out.append(bit)
        if not self.state.bits:
            out.extend("|" * len(markers))
        return "".join(out)
