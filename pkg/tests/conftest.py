import pytest

from coxtools.monoids import AffineMonoid, divisor_theory
from coxtools.polynomials import parse_map, parse_poly

XS = ["x1", "x2", "x3", "x4"]
YS = ["y1", "y2", "y3", "y4"]
Y5 = ["y1", "y2", "y3", "y4", "y5"]

TAU_STRS = [
    "x1",
    "x2+x1*(x3-x2)",
    "x3+x1*(x3-x2)",
    "x4+(x3+x2)*(x3-x2)+x1*(x3-x2)^2",
]
TAU_INV_STRS = [
    "x1",
    "x2-x1*(x3-x2)",
    "x3-x1*(x3-x2)",
    "x4-(x3+x2)*(x3-x2)+x1*(x3-x2)^2",
]
ZETA_STRS = [
    "y1",
    "y2+y1*(y1*y4-y2*y3)",
    "y3",
    "y4+y3*(y1*y4-y2*y3)",
]
NAGATA_STRS = [
    "y1-2*y2*(y1*y3+y2^2)-y3*(y1*y3+y2^2)^2",
    "y2+y3*(y1*y3+y2^2)",
    "y3",
]


@pytest.fixture
def monoid_469():
    """Generators of 4, 6, 9 as exponent vectors over the primes 2, 3."""
    return AffineMonoid(2, [(2, 0), (1, 1), (0, 2)])


@pytest.fixture
def monoid_10_14_15_21():
    """Generators of 10, 14, 15, 21 over the primes 2, 3, 5, 7."""
    return AffineMonoid(4, [(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)])


@pytest.fixture
def dt_469(monoid_469):
    return divisor_theory(monoid_469)


@pytest.fixture
def dt_10_14_15_21(monoid_10_14_15_21):
    return divisor_theory(monoid_10_14_15_21)


@pytest.fixture
def tau_map():
    return parse_map(TAU_STRS, XS)


@pytest.fixture
def tau_inv_map():
    return parse_map(TAU_INV_STRS, XS)


@pytest.fixture
def zeta_map():
    return parse_map(ZETA_STRS, YS)


@pytest.fixture
def delta():
    return parse_poly("y1*y4-y2*y3", YS)
