import numpy as np
import pytest

from src.bbs.state import (
    canonical_rotation,
    enumerate_states,
    evolve_balls,
    evolve_balls_literal,
    evolve_blocks,
    evolve_rows,
    from_blocks,
    parse_state,
    random_state,
    rotate,
    rotation_offset,
    step_blocks,
    to_blocks,
)
from src.core.constants import Constants
from src.core.errors import DegenerateStateError, InconsistentStateError, InvariantError
from src.models.state import BlockState, BoxString


def test_block_text_and_raw_string_agree(graph_state):
    assert parse_state("Q=5,1,6;W=3,2,12").bits == Constants.GRAPH_EXAMPLE
    assert parse_state(" Q=5,1,6; W=3,2,12; offset=0 ") == graph_state


def test_to_blocks_graph_example(graph_state):
    assert to_blocks(graph_state) == BlockState(Q=(5, 1, 6), W=(3, 2, 12), offset=0)


def test_to_blocks_keeps_offset():
    x = BoxString(bits="0111000")
    b = to_blocks(x)
    assert (b.Q, b.W, b.offset) == ((3,), (4,), 1)
    assert from_blocks(b) == x


def test_from_blocks_rejects_wrong_length():
    with pytest.raises(InconsistentStateError):
        from_blocks(BlockState(Q=(1,), W=(2,)), L=5)


@pytest.mark.parametrize(
    "text, error",
    [
        ("", DegenerateStateError),
        ("0000", DegenerateStateError),
        ("1100", InvariantError),
        ("10a0", InvariantError),
        ("Q=1,2;W=3", InconsistentStateError),
        ("Q=1;W=3;offset=9", InconsistentStateError),
        ("Q=3;W=2", InvariantError),
    ],
)
def test_parse_state_rejects(text, error):
    with pytest.raises(error):
        parse_state(text)


def test_box_string_only_checks_alphabet():
    crowded = BoxString(bits="1100")
    assert crowded.balls == 2
    with pytest.raises(InvariantError):
        evolve_balls(crowded)
    with pytest.raises(ValueError):
        BoxString(bits="10a0")


def test_evolve_rows_example():
    rows = evolve_rows(BoxString(bits="11100000"), 2)
    assert [r.bits for r in rows] == ["11100000", "00011100", "10000011"]


@pytest.mark.parametrize("order", ["ltr", "rtl"])
def test_literal_rule_matches_carrier(graph_state, order):
    x = graph_state
    for _ in range(5):
        assert evolve_balls_literal(x, order) == evolve_balls(x)
        x = evolve_balls(x)


def test_literal_rule_unknown_order(graph_state):
    with pytest.raises(ValueError):
        evolve_balls_literal(graph_state, "middle-out")


def test_evolution_keeps_ball_count(graph_state):
    x = graph_state
    for _ in range(30):
        x = evolve_balls(x)
        assert x.balls == 12 and x.L == 29


def test_step_blocks_conserves_length(graph_blocks):
    Q, W = graph_blocks.Q, graph_blocks.W
    for _ in range(10):
        Q, W = step_blocks(Q, W)
        assert sum(Q) + sum(W) == 29
        assert min(Q) >= 1 and min(W) >= 1


@pytest.mark.parametrize("L", range(3, 10))
def test_block_evolution_equals_ball_evolution(L):
    for text in enumerate_states(L):
        x = BoxString(bits=text)
        assert evolve_blocks(to_blocks(x)) == to_blocks(evolve_balls(x)), text


def test_block_evolution_random_long_states():
    rng = np.random.default_rng(7)
    for _ in range(50):
        x = random_state(rng, int(rng.integers(20, 120)))
        assert evolve_blocks(to_blocks(x)) == to_blocks(evolve_balls(x))


def test_rotations():
    x = BoxString(bits="1101000")
    assert rotate(x, 3).bits == "1000110"
    assert rotate(x, 10) == rotate(x, 3)
    assert rotation_offset(x, rotate(x, 3)) == 3
    assert rotation_offset(x, BoxString(bits="1110000")) is None
    assert canonical_rotation("0110000") == "0000011"


def test_random_state_bounds():
    rng = np.random.default_rng(1)
    for L in (3, 10, 57):
        x = random_state(rng, L)
        assert x.L == L
        assert 1 <= x.balls and 2 * x.balls < L


def test_random_state_counts_wrapped_blocks_once():
    rng = np.random.default_rng(3)
    for _ in range(200):
        x = random_state(rng, 10, min_solitons=3)
        assert to_blocks(x).N >= 3, x.bits


def test_random_state_is_seeded():
    a = random_state(np.random.default_rng(5), 40)
    b = random_state(np.random.default_rng(5), 40)
    assert a == b


def test_enumerate_states():
    assert sorted(enumerate_states(4)) == ["0001", "0010", "0100", "1000"]
