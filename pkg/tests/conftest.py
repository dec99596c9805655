import pytest

from multiconf import FormFamily, Multicomplex, Ring

FOUR_POINT_FORMS = [[[1, 0, 0], [1, 1, 3], [1, 0, 1]], [[0, 1, 1], [0, 1, 0]]]


def example_data():
    R = Ring(("x1", "x2", "x3"))
    F = FormFamily.from_coefficients(R, FOUR_POINT_FORMS)
    M = Multicomplex((2, 1), {(0, 0), (1, 0), (2, 0), (0, 1)})
    return R, M, F


@pytest.fixture
def four_points():
    return example_data()


@pytest.fixture
def R3():
    return Ring(("x1", "x2", "x3"))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
