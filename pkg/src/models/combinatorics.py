from fractions import Fraction
from pydantic import BaseModel, ConfigDict, field_serializer, field_validator
from typing import Dict, List, Literal, Tuple


class YoungDiagram(BaseModel):
    """Partition with p_j boxes in column j."""

    model_config = ConfigDict(frozen=True)

    columns: Tuple[int, ...]

    @field_validator("columns")
    @classmethod
    def _weakly_decreasing(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(p < 1 for p in v):
            raise ValueError("column heights must be positive")
        if any(a < b for a, b in zip(v, v[1:])):
            raise ValueError(f"columns must be weakly decreasing, got {v}")
        return v

    @property
    def rows(self) -> Tuple[int, ...]:
        """Conjugate partition, longest row first."""
        if not self.columns:
            return ()
        return tuple(sum(1 for p in self.columns if p > i) for i in range(self.columns[0]))

    @property
    def total(self) -> int:
        return sum(self.columns)

    @property
    def distinct(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.rows), reverse=True))

    @property
    def multiplicity(self) -> Tuple[int, ...]:
        rows = self.rows
        return tuple(rows.count(length) for length in self.distinct)

    def to_json(self) -> Dict[str, List[int]]:
        return {
            "columns": list(self.columns),
            "rows": list(self.rows),
            "distinct": list(self.distinct),
            "multiplicity": list(self.multiplicity),
        }


class GraphNode(BaseModel):
    model_config = ConfigDict(frozen=True)

    color: Literal["white", "black"]
    value: int
    height: int
    tree: int
    star: bool = False


class GraphTree(BaseModel):
    """A connected component; `feet` index the bottom sequence Q_0, W_0, Q_1, W_1, ..."""

    model_config = ConfigDict(frozen=True)

    id: int
    color: Literal["white", "black"]
    height: int
    feet: Tuple[int, ...]
    foot_values: Tuple[int, ...]
    links: int
    stars: int
    straddles: Tuple[int, ...] = ()


class AssociatedGraph(BaseModel):
    model_config = ConfigDict(frozen=True)

    N: int
    nodes: Tuple[GraphNode, ...]
    trees: Tuple[GraphTree, ...]

    def tree(self, tree_id: int) -> GraphTree:
        for t in self.trees:
            if t.id == tree_id:
                return t
        raise KeyError(tree_id)

    def under(self, tree_id: int) -> Tuple[int, ...]:
        """Und(t): t together with every tree it straddles, transitively."""
        seen = {tree_id}
        stack = [tree_id]
        while stack:
            for child in self.tree(stack.pop()).straddles:
                if child not in seen:
                    seen.add(child)
                    stack.append(child)
        return tuple(sorted(seen))


class UltraInvariants(BaseModel):
    """Min-plus data of a state: U_0..U_g, P_0..P_{g-1} and M = -L/2."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    U: Tuple[int, ...]
    P: Tuple[int, ...]
    M: Fraction
    L: int

    @property
    def g(self) -> int:
        return len(self.U) - 1

    def U_ext(self, k: int) -> int:
        """U_k with U_{g+1} = 0."""
        return self.U[k] if k < len(self.U) else 0

    @field_serializer("M")
    def _fraction(self, v: Fraction) -> str:
        return str(v)

