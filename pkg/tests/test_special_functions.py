"""Antiderivatives of ln cosh and ln sinh against quadrature oracles."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from hexmetric import hexgeom

# Values frozen from adaptive quadrature (estimated error < 1e-12).
FROZEN_LAMBDA1 = {
    0.25: 0.0025880815746296584,
    1.0: 0.15258009379489942,
    2.5: 1.8000022498734318,
    7.0: 20.059202837028167,
}
FROZEN_LAMBDA2 = {
    0.25: -0.59570661672943481,
    1.0: -0.94550792303861442,
    2.5: 0.57303968072605027,
    7.0: 18.825503118420713,
}


def lambda1_quadrature(u: float) -> float:
    v, _ = quad(lambda s: math.log(math.cosh(s)), 0.0, u, limit=200)
    return v


def lambda2_quadrature(u: float) -> float:
    # split off the integrable log singularity at 0:
    # integral of ln s over [0, u] is u ln u - u
    v, _ = quad(lambda s: math.log(math.sinh(s) / s), 0.0, u, limit=200)
    return v + u * math.log(u) - u


@pytest.mark.parametrize("u,expected", sorted(FROZEN_LAMBDA1.items()))
def test_lambda1_frozen(u, expected):
    assert hexgeom.lambda1(u) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("u,expected", sorted(FROZEN_LAMBDA2.items()))
def test_lambda2_frozen(u, expected):
    assert hexgeom.lambda2(u) == pytest.approx(expected, abs=1e-12)


def test_lambda1_against_quadrature_grid():
    for u in np.linspace(0.05, 10.0, 40):
        assert hexgeom.lambda1(float(u)) == pytest.approx(
            lambda1_quadrature(float(u)), abs=1e-10
        )


def test_lambda2_against_quadrature_grid():
    for u in np.linspace(0.05, 10.0, 40):
        assert hexgeom.lambda2(float(u)) == pytest.approx(
            lambda2_quadrature(float(u)), abs=1e-10
        )


def test_values_at_zero():
    assert hexgeom.lambda1(0.0) == pytest.approx(0.0, abs=1e-15)
    assert hexgeom.lambda2(0.0) == 0.0


@given(st.floats(min_value=1e-3, max_value=30.0))
@settings(max_examples=200, deadline=None)
def test_lambda1_odd(u):
    assert hexgeom.lambda1(-u) == pytest.approx(-hexgeom.lambda1(u), rel=1e-13, abs=1e-13)


@given(st.floats(min_value=1e-3, max_value=30.0), st.floats(min_value=1e-4, max_value=1.0))
@settings(max_examples=200, deadline=None)
def test_lambda1_derivative_is_lncosh(u, h):
    # symmetric difference quotient approximates ln cosh u
    d = (hexgeom.lambda1(u + h) - hexgeom.lambda1(u - h)) / (2.0 * h)
    assert d == pytest.approx(math.log(math.cosh(u)), abs=5.0 * h * h + 1e-10)


@given(st.floats(min_value=0.1, max_value=30.0))
@settings(max_examples=200, deadline=None)
def test_lambda2_derivative_is_lnsinh(u):
    h = 1e-5 * max(1.0, u)
    d = (hexgeom.lambda2(u + h) - hexgeom.lambda2(u - h)) / (2.0 * h)
    assert d == pytest.approx(math.log(math.sinh(u)), abs=1e-7)


def test_lambda2_monotone_decreasing_then_increasing():
    # ln sinh changes sign at arcsinh(1); lambda2 has its minimum there
    crit = math.asinh(1.0)
    grid = np.linspace(0.01, 3.0, 100)
    vals = [hexgeom.lambda2(float(u)) for u in grid]
    lo = min(range(len(grid)), key=lambda i: vals[i])
    assert abs(grid[lo] - crit) < 0.05


def test_domain_errors():
    with pytest.raises(hexgeom.DomainError):
        hexgeom.lambda2(-0.5)
    with pytest.raises(hexgeom.DomainError):
        hexgeom.lambda1(float("nan"))
    with pytest.raises(hexgeom.DomainError):
        hexgeom.lambda2(float("inf"))
