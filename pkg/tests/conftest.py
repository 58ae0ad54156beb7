import pytest

from sklift.elliptic import eigenforms
from sklift.jacobi import ez_lift
from sklift.kohnen import plus_space_basis
from sklift.siegel import maass_lift

# one shared truncation for the half-integral side: covers discriminants to
# 4 * 9**2 = 324 (index bound 9) plus slack for the square-index operators
PLUS_PREC = 360


@pytest.fixture(scope="session")
def f18():
    return eigenforms(18, 48)[0]


@pytest.fixture(scope="session")
def f22():
    return eigenforms(22, 48)[0]


@pytest.fixture(scope="session")
def plus10():
    return plus_space_basis(10, PLUS_PREC)[0]


@pytest.fixture(scope="session")
def plus12():
    return plus_space_basis(12, PLUS_PREC)[0]


@pytest.fixture(scope="session")
def jacobi10(plus10):
    return ez_lift(plus10)


@pytest.fixture(scope="session")
def jacobi12(plus12):
    return ez_lift(plus12)


@pytest.fixture(scope="session")
def lift10(jacobi10):
    """Lift of the weight-18 eigenform, table bound 9."""
    return maass_lift(jacobi10, 9)


@pytest.fixture(scope="session")
def lift12(jacobi12):
    """Lift of the weight-22 eigenform, table bound 9."""
    return maass_lift(jacobi12, 9)


@pytest.fixture(scope="session")
def lift10_b6(jacobi10):
    return maass_lift(jacobi10, 6)
