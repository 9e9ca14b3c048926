import pytest

from axial.sakuma import build_universal, classify, solve_points


@pytest.fixture(scope="session")
def uni():
    return build_universal()


@pytest.fixture(scope="session")
def points(uni):
    return {pt.name: pt for pt in solve_points(uni)}


@pytest.fixture(scope="session")
def report(uni):
    return classify(uni)
