import pytest

from lightpath import example_graph


@pytest.fixture
def fig4():
    return example_graph("fig4")


@pytest.fixture
def linear7():
    return example_graph("linear7")
