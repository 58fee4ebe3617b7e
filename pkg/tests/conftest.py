import random
from fractions import Fraction

import pytest

from slcert.rep import (
    ParamError,
    SURFACE_GENUS2,
    SURFACE_PUNCTURED_TORUS,
    build_representation,
    validate_params,
)


@pytest.fixture(scope="session")
def default_params():
    return validate_params(2, -3)


@pytest.fixture(scope="session")
def genus2_rep(default_params):
    return build_representation(default_params, SURFACE_GENUS2)


@pytest.fixture(scope="session")
def torus_rep(default_params):
    return build_representation(default_params, SURFACE_PUNCTURED_TORUS)


def random_valid_params(rng: random.Random, count: int):
    """Deterministic stream of validated parameter pairs with kappa < 0."""
    out = []
    while len(out) < count:
        alpha = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        beta = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if abs(alpha) > 1 and beta > 0:
            beta = -beta  # force kappa = beta*(alpha^2-1) < 0
        if abs(alpha) < 1 and beta < 0:
            beta = -beta
        try:
            out.append(validate_params(alpha, beta))
        except ParamError:
            continue
    return out


def random_sl2(rng: random.Random):
    """A random SL2(Q) matrix as a 4-tuple of Fractions."""
    while True:
        a = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if a != 0:
            break
    b = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    c = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    d = (1 + b * c) / a
    return (a, b, c, d)


def mat4_mul(m, n):
    """Plain 2x2 multiplication over tuples, independent of slcert.exact."""
    return (
        m[0] * n[0] + m[1] * n[2],
        m[0] * n[1] + m[1] * n[3],
        m[2] * n[0] + m[3] * n[2],
        m[2] * n[1] + m[3] * n[3],
    )


def mat4_is_pm_identity(m):
    return m in ((1, 0, 0, 1), (-1, 0, 0, -1))
