import pytest

from btpgeo import charts


@pytest.fixture(scope="session")
def wallach_exact():
    return charts.wallach_metric()


@pytest.fixture(scope="session")
def wallach_pc(wallach_exact):
    return charts.riemannian_curvature_at(wallach_exact)


@pytest.fixture(scope="session")
def wallach_float_pc():
    return charts.riemannian_curvature_at(charts.wallach_metric(exact=False))
