import math

import pytest

from src.bbs.toda import bridge_check, log_m2, toda_init, toda_orbit, toda_step
from src.core.errors import InvariantError
from src.models.numeric import TodaState


def test_init_is_the_ultradiscrete_embedding(graph_blocks):
    s = toda_init(graph_blocks, 0.5)
    assert s.logI == (-10.0, -2.0, -12.0)
    assert s.logV == (-6.0, -4.0, -24.0)
    assert s.ultra() == ((5.0, 1.0, 6.0), (3.0, 2.0, 12.0))


def test_perturbation_length_is_checked(graph_blocks):
    with pytest.raises(ValueError):
        toda_init(graph_blocks, 0.5, perturbation=[0.1])


def test_flow_conserves_m(graph_blocks):
    orbit = toda_orbit(toda_init(graph_blocks, 0.3), 8)
    start = log_m2(orbit[0])
    for s in orbit[1:]:
        assert log_m2(s) == pytest.approx(start, rel=1e-12)
    assert orbit[-1].t == 8


def test_step_needs_prod_v_below_prod_i():
    with pytest.raises(InvariantError):
        toda_step(TodaState(logI=(0.0,), logV=(1.0,), eps=1.0))


def test_bridge_to_block_flow(graph_blocks):
    report = bridge_check(graph_blocks, (0.1, 0.05, 0.02), steps=6)
    assert report.monotone
    assert max(report.max_error_Q[-1], report.max_error_W[-1]) < 0.5
    assert report.max_error_Q[-1] <= report.max_error_Q[0]
    assert math.isfinite(report.fitted_C)


def test_bridge_with_seeded_perturbation(two_soliton_blocks):
    a = bridge_check(two_soliton_blocks, (0.1, 0.05), steps=4, perturb=0.01, seed=3)
    b = bridge_check(two_soliton_blocks, (0.1, 0.05), steps=4, perturb=0.01, seed=3)
    assert a == b


def test_bridge_rejects_bad_ladder(graph_blocks):
    with pytest.raises(ValueError):
        bridge_check(graph_blocks, (0.05, 0.1), steps=2)
