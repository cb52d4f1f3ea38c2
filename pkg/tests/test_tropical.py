from fractions import Fraction

import pytest

from src.bbs.state import enumerate_states, to_blocks
from src.bbs.tropical import (
    P_from_young_limit,
    P_min,
    U_from_young,
    U_min,
    brute_force_min,
    interleave,
    mu_valuations,
    p_path,
    root_valuations,
    tropical_poly_roots,
    ultra_invariants,
)
from src.bbs.elimination import young_diagram
from src.core.errors import RangeError
from src.models.state import BlockState, BoxString


def test_graph_example_invariants(graph_blocks):
    u = ultra_invariants(graph_blocks)
    assert u.U == (12, 5, 1)
    assert u.P == (6, 1)
    assert u.M == Fraction(-29, 2)
    assert u.g == 2
    assert u.U_ext(3) == 0


def test_p_path_skips_two_blocks(graph_blocks):
    assert interleave(graph_blocks) == [5, 3, 1, 2, 6, 12]
    assert p_path(graph_blocks) == [12, 5, 3, 1]


def test_two_block_path():
    assert p_path(BlockState(Q=(3, 1), W=(5, 6))) == [5, 1]


def test_young_readings(graph_state, graph_blocks):
    assert U_from_young(young_diagram(graph_state)) == (12, 5, 1)
    assert P_from_young_limit(graph_blocks) == (6, 1)
    assert P_from_young_limit(BlockState(Q=(2,), W=(5,))) == ()


@pytest.mark.parametrize("L", range(3, 12))
def test_minplus_equals_young(L):
    for text in enumerate_states(L):
        x = BoxString(bits=text)
        assert ultra_invariants(to_blocks(x)).U == U_from_young(young_diagram(x)), text


def test_dynamic_program_matches_enumeration():
    b = BlockState(Q=(2, 1, 3, 1, 2), W=(4, 2, 5, 3, 6))
    for k in range(b.N):
        assert U_min(b, k) == brute_force_min(interleave(b), b.N - k, cyclic=True)
    for k in range(b.N - 1):
        assert P_min(b, k) == brute_force_min(p_path(b), b.N - 1 - k, cyclic=False)


def test_brute_force_min():
    assert brute_force_min([5, 3, 1, 2, 6, 12], 3) == 12
    assert brute_force_min([1, 9, 1], 2, cyclic=True) == float("inf")
    assert brute_force_min([1, 9, 1], 2, cyclic=False) == 2


def test_index_ranges(graph_blocks):
    with pytest.raises(RangeError):
        U_min(graph_blocks, 3)
    with pytest.raises(RangeError):
        P_min(graph_blocks, 2)


def test_root_valuations_are_young_rows(graph_blocks):
    u = ultra_invariants(graph_blocks)
    assert tropical_poly_roots([-12, -5, -1]) == (-1, -4, -7)
    assert root_valuations(u) == (7, 4, 1)


@pytest.mark.parametrize("big", [30, 31, 58, 400])
def test_blow_up_size_does_not_matter(graph_blocks, big):
    assert P_from_young_limit(graph_blocks, big) == (6, 1)
    assert P_from_young_limit(BlockState(Q=(3, 1), W=(5, 6)), big) == (1,)


def test_blow_up_must_exceed_length(graph_blocks):
    with pytest.raises(RangeError):
        P_from_young_limit(graph_blocks, 29)


def test_mu_valuations(graph_blocks):
    assert mu_valuations(ultra_invariants(graph_blocks)) == (5, 1)
    assert mu_valuations(ultra_invariants(BlockState(Q=(2, 3, 1), W=(4, 6, 2)))) == (3, 2)
