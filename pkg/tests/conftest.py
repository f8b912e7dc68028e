import pytest
from hypothesis import settings

from skewspec.graph_core import OrientedGraph
from skewspec.worked_examples import example1_c, example1_d, example2_d

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@pytest.fixture
def d1() -> OrientedGraph:
    return example1_d()


@pytest.fixture
def c1() -> OrientedGraph:
    return example1_c()


@pytest.fixture
def d2() -> OrientedGraph:
    return example2_d()


@pytest.fixture
def triangle() -> OrientedGraph:
    return OrientedGraph(3, [(0, 1), (1, 2), (2, 0)])
