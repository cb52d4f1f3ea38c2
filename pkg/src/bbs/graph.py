"""Associated graph of a block state: block lineages under repeated 10-elimination.

Every level removes one unit from each block. A block whose number hits
zero is marked with a star and its two neighbours join. Trees are the
connected components; the height of a tree is the level of its star.
"""

import logging
from typing import Dict, List, Optional, Set, Tuple

from src.models.combinatorics import AssociatedGraph, GraphNode, GraphTree
from src.models.state import BlockState

logger = logging.getLogger(__name__)


class _Forest:
    """Union-find over tree ids with per-root bookkeeping."""

    def __init__(self, b: BlockState):
        self.parent: List[int] = []
        self.color: List[str] = []
        self.feet: List[List[int]] = []
        self.links: List[int] = []
        self.height: List[Optional[int]] = []
        self.stars: List[int] = []
        self.straddles: List[Set[int]] = []
        for i in range(b.N):
            self._add("white", 2 * i)
            self._add("black", 2 * i + 1)

    def _add(self, color: str, foot: int) -> None:
        self.parent.append(len(self.parent))
        self.color.append(color)
        self.feet.append([foot])
        self.links.append(0)
        self.height.append(None)
        self.stars.append(0)
        self.straddles.append(set())

    def find(self, t: int) -> int:
        while self.parent[t] != t:
            self.parent[t] = self.parent[self.parent[t]]
            t = self.parent[t]
        return t

    def merge(self, keep: int, other: int) -> int:
        keep, other = self.find(keep), self.find(other)
        if keep == other:
            return keep
        self.parent[other] = keep
        self.feet[keep].extend(self.feet[other])
        self.links[keep] += self.links[other]
        self.stars[keep] += self.stars[other]
        self.straddles[keep] |= self.straddles[other]
        return keep

    def star(self, t: int, level: int) -> None:
        t = self.find(t)
        self.height[t] = level
        self.stars[t] += 1

    def straddle(self, over: int, under: int) -> None:
        self.straddles[self.find(over)].add(self.find(under))


def build_graph(b: BlockState) -> AssociatedGraph:
    forest = _Forest(b)
    values = [v for pair in zip(b.Q, b.W) for v in pair]
    # live blocks in cyclic order: [value, tree id]
    blocks: List[List[int]] = [[v, t] for t, v in enumerate(values)]
    nodes: List[GraphNode] = [
        GraphNode(color=forest.color[t], value=v, height=0, tree=t) for v, t in blocks
    ]
    level = 0

    while blocks:
        step = min(v for v, _ in blocks)
        for blk in blocks:
            forest.links[forest.find(blk[1])] += step
            blk[0] -= step
        level += step
        alive = [i for i, (v, _) in enumerate(blocks) if v > 0]
        n = len(blocks)

        if not alive:
            # Everything dies together: block 0 anchors, odd offsets die on their own.
            anchor = blocks[0][1]
            forest.star(anchor, level)
            nodes.append(_node(forest, blocks[0], level, star=True))
            for off in range(1, n):
                t = blocks[off][1]
                if off % 2:
                    forest.star(t, level)
                    if off != n - 1:
                        forest.straddle(anchor, t)
                    nodes.append(_node(forest, blocks[off], level, star=True))
                else:
                    forest.merge(anchor, t)
            break

        merged: List[List[int]] = []
        pending = False
        for pos, a in enumerate(alive):
            value, tree = blocks[a]
            if pending:
                merged[-1][0] += value
                forest.merge(merged[-1][1], tree)
            else:
                merged.append([value, tree])
            node = merged[-1]
            nxt = alive[(pos + 1) % len(alive)]
            run = [(a + k) % n for k in range(1, (nxt - a) % n or n)]
            closing = (
                len(run) % 2 == 1
                and pos == len(alive) - 1
                and forest.find(node[1]) == forest.find(merged[0][1])
            )
            for idx, d in enumerate(run, start=1):
                dead_tree = blocks[d][1]
                if idx % 2:
                    forest.star(dead_tree, level)
                    if not (closing and idx == len(run)):
                        forest.straddle(node[1], dead_tree)
                    nodes.append(_node(forest, blocks[d], level, star=True))
                else:
                    forest.merge(node[1], dead_tree)
            pending = len(run) % 2 == 1

        if pending and len(merged) > 1:
            # the last group wraps around onto the first
            last = merged.pop()
            merged[0][0] += last[0]
            forest.merge(merged[0][1], last[1])
        blocks = merged
        nodes.extend(_node(forest, blk, level) for blk in blocks)

    trees = []
    roots = sorted({forest.find(t) for t in range(len(forest.parent))})
    for root in roots:
        feet = tuple(sorted(forest.feet[root]))
        trees.append(
            GraphTree(
                id=root,
                color=forest.color[root],
                height=forest.height[root] if forest.height[root] is not None else level,
                feet=feet,
                foot_values=tuple(values[f] for f in feet),
                links=forest.links[root],
                stars=forest.stars[root],
                straddles=tuple(sorted(forest.find(s) for s in forest.straddles[root])),
            )
        )
    logger.debug(f"build_graph: N={b.N}, {len(trees)} trees, top level {level}")
    return AssociatedGraph(N=b.N, nodes=tuple(nodes), trees=tuple(trees))


def _node(forest: _Forest, blk: List[int], level: int, star: bool = False) -> GraphNode:
    tree = forest.find(blk[1])
    return GraphNode(color=forest.color[tree], value=blk[0], height=level, tree=tree, star=star)


def heights(g: AssociatedGraph) -> Tuple[int, ...]:
    """Tree heights H_1 <= H_2 <= ..."""
    return tuple(sorted(t.height for t in g.trees))


def under_sums(g: AssociatedGraph) -> Dict[int, Tuple[int, int]]:
    """For every tree: (sum of heights over Und(t), sum of same-colour feet over Und(t))."""
    out = {}
    for t in g.trees:
        under = [g.tree(s) for s in g.under(t.id)]
        height_sum = sum(s.height for s in under)
        foot_sum = sum(sum(s.foot_values) for s in under if s.color == t.color)
        out[t.id] = (height_sum, foot_sum)
    return out
