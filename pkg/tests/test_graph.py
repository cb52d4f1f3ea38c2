from src.bbs.graph import build_graph, heights, under_sums
from src.bbs.state import enumerate_states, to_blocks
from src.bbs.tropical import U_from_young
from src.bbs.elimination import young_diagram
from src.models.state import BlockState, BoxString


def test_graph_example_trees(graph_blocks):
    g = build_graph(graph_blocks)
    assert heights(g) == (1, 4, 7, 12)
    by_height = {t.height: t for t in g.trees}
    assert by_height[1].feet == (2,)
    assert by_height[4].feet == (1, 3)
    assert by_height[7].feet == (0, 4)
    assert by_height[12].feet == (5,)
    assert by_height[7].straddles == (by_height[4].id,)
    assert by_height[4].straddles == (by_height[1].id,)


def test_graph_example_identities(graph_blocks):
    g = build_graph(graph_blocks)
    for t in g.trees:
        assert t.stars == 1
        assert t.links == sum(t.foot_values)
    assert all(h == f for h, f in under_sums(g).values())
    top = {t.height: t for t in g.trees}[7]
    assert under_sums(g)[top.id] == (12, 12)


def test_all_dead_level_closes_the_ring():
    g = build_graph(BlockState(Q=(1, 1), W=(2, 2)))
    assert heights(g) == (1, 1, 3)
    assert all(t.stars == 1 for t in g.trees)
    assert all(h == f for h, f in under_sums(g).values())


def test_heights_sum_to_minplus_values():
    for L in range(3, 10):
        for text in enumerate_states(L):
            x = BoxString(bits=text)
            b = to_blocks(x)
            H = heights(build_graph(b))
            U = U_from_young(young_diagram(x))
            assert [sum(H[:k]) for k in range(1, b.N + 1)] == [U[b.N - k] for k in range(1, b.N + 1)], text


def test_single_soliton_heights():
    g = build_graph(BlockState(Q=(3,), W=(5,)))
    assert heights(g) == (3, 5)
