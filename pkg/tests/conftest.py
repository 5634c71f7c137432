import pytest

from pydpso.problems import AllocationInstance, make_problem


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run the reproduction checks"
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running reproduction check")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def tiny_allocation():
    """One demand point, four centers: a search space of four genomes"""
    instance = AllocationInstance(
        centers=[(0.0, 0.0), (3.0, 0.0), (0.0, 4.0), (10.0, 10.0)],
        demands=[(1.0, 1.0)],
    )
    return make_problem("allocation", instance=instance, name="tiny")


@pytest.fixture
def small_grid():
    return make_problem("allocation", rows=4, cols=4, quadrant_centers=True)
