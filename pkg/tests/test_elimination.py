import pytest

from src.bbs.elimination import (
    elimination_chain,
    evolve_marked,
    restore,
    rotate_marked,
    same_rotation_class,
    ten_eliminate,
    young_columns,
    young_diagram,
)
from src.bbs.state import evolve_balls
from src.core.errors import DegenerateStateError
from src.models.state import BoxString, MarkedState


def test_graph_example_diagram(graph_state):
    d = young_diagram(graph_state)
    assert d.columns == (3, 2, 2, 2, 1, 1, 1)
    assert d.rows == (7, 4, 1)
    assert d.total == 12
    assert d.distinct == (7, 4, 1)
    assert d.multiplicity == (1, 1, 1)


def test_single_soliton_diagram():
    assert young_diagram(BoxString(bits="11100000")).rows == (3,)
    assert young_columns("11100000") == (1, 1, 1)


def test_equal_rows_multiplicity():
    d = young_diagram(BoxString(bits="1000010000"))
    assert d.rows == (1, 1)
    assert d.distinct == (1,)
    assert d.multiplicity == (2,)


def test_elimination_leaves_zero_soliton():
    m = ten_eliminate(MarkedState(state=BoxString(bits="1001100000")))
    assert m.state.bits == "010000"
    assert m.zero_solitons == (0,)
    assert m.render() == "|010000"


def test_restore_inverts_elimination():
    x = BoxString(bits="1001100000")
    assert restore(ten_eliminate(MarkedState(state=x))) == x


def test_markers_are_carried_through_the_chain():
    chain = elimination_chain(BoxString(bits="1110100000"))
    assert [stage.state.bits for stage in chain] == ["1110100000", "110000", "1000", "00"]
    assert [stage.zero_solitons for stage in chain] == [(), (2,), (1,), (0, 0)]


def test_young_diagram_is_conserved(graph_state):
    d = young_diagram(graph_state)
    x = graph_state
    for _ in range(40):
        x = evolve_balls(x)
        assert young_diagram(x) == d


def test_elimination_commutes_with_evolution():
    x = BoxString(bits="1001100000")
    before = ten_eliminate(MarkedState(state=evolve_balls(x)))
    after = evolve_marked(ten_eliminate(MarkedState(state=x)))
    assert before == MarkedState(state=BoxString(bits="000100"), zero_solitons=(1,))
    assert after == MarkedState(state=BoxString(bits="001000"), zero_solitons=(0,))
    assert same_rotation_class(before, after)


def test_rotate_marked():
    m = MarkedState(state=BoxString(bits="001000"), zero_solitons=(0,))
    assert rotate_marked(m, 5) == MarkedState(state=BoxString(bits="000100"), zero_solitons=(1,))


def test_eliminating_a_ball_free_string_fails():
    with pytest.raises(DegenerateStateError):
        ten_eliminate(MarkedState(state=BoxString(bits="0000")))
    with pytest.raises(DegenerateStateError):
        young_diagram(BoxString(bits="0000"))


def test_two_length_one_solitons_leave_two_markers():
    x = BoxString(bits="000001111000011011010001110000000")
    m = ten_eliminate(MarkedState(state=x))
    assert m.zero_solitons == (12, 13)
    assert m.render() == "000001110001|1|0011000000"
    assert young_columns(x.bits)[0] == 5


def test_eliminating_the_whole_ring_keeps_one_marker():
    m = ten_eliminate(MarkedState(state=BoxString(bits="10")))
    assert m.state.bits == ""
    assert m.zero_solitons == (0,)
    assert m.render() == "|"


def test_graph_example_first_elimination(graph_state):
    m = ten_eliminate(MarkedState(state=graph_state))
    assert m.state.bits == "11110001111100000000000"
    assert m.zero_solitons == (6,)
    assert m.render() == "111100|01111100000000000"


def test_elimination_commutes_for_ten_steps(graph_state):
    x = BoxString(bits="1110100000")
    for start in (x, graph_state):
        current = start
        marked = ten_eliminate(MarkedState(state=start))
        for _ in range(10):
            current = evolve_balls(current)
            marked = evolve_marked(marked)
            assert same_rotation_class(ten_eliminate(MarkedState(state=current)), marked)
