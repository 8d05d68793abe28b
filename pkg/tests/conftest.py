import pytest

from maxlinbn import Dag, MaxLinearModel

DIAMOND_WEIGHTS = {(1, 2): 0.5, (1, 3): 0.8, (2, 4): 0.6, (3, 4): 0.9}


@pytest.fixture
def diamond() -> Dag:
    """Four-vertex diamond: 1 -> 2, 1 -> 3, 2 -> 4, 3 -> 4."""
    return Dag(4, [(1, 2), (1, 3), (2, 4), (3, 4)])


@pytest.fixture
def diamond_weights() -> dict:
    return dict(DIAMOND_WEIGHTS)


@pytest.fixture
def diamond_model(diamond, diamond_weights) -> MaxLinearModel:
    return MaxLinearModel(diamond, diamond_weights)


@pytest.fixture
def diamond_tail() -> Dag:
    """Diamond with an extra tail vertex: adds 4 -> 5."""
    return Dag(5, [(1, 2), (1, 3), (2, 4), (3, 4), (4, 5)])


@pytest.fixture
def polytree_six() -> Dag:
    """Six-vertex polytree: 1 -> 3, 2 -> 3, 3 -> 5, 4 -> 6, 5 -> 6."""
    return Dag(6, [(1, 3), (2, 3), (3, 5), (4, 6), (5, 6)])


@pytest.fixture
def markov_props_dag() -> Dag:
    """Six-vertex network used for the Markov-property statements:
    1 -> 2, 1 -> 3, 2 -> 4, 3 -> 4, 4 -> 6, 2 -> 5."""
    return Dag(6, [(1, 2), (1, 3), (2, 4), (3, 4), (4, 6), (2, 5)])
