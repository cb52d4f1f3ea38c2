"""Shared fixtures: the worked example state and an HTTP client."""

import pytest
from fastapi.testclient import TestClient

from src.bbs.state import parse_state, to_blocks
from src.core.constants import Constants
from src.main import app


@pytest.fixture
def graph_state():
    """Q=(5,1,6), W=(3,2,12), L=29; Young rows (7,4,1)."""
    return parse_state(Constants.GRAPH_EXAMPLE)


@pytest.fixture
def graph_blocks(graph_state):
    return to_blocks(graph_state)


@pytest.fixture
def two_soliton_blocks():
    """Rows (3,1), U=(4,1), P=(1,)."""
    return to_blocks(parse_state("Q=3,1;W=5,6"))


@pytest.fixture
def client():
    return TestClient(app)
