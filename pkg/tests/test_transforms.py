import numpy as np
import pytest

from fracint.errors import DomainError, NonMonotoneError
from fracint.integrand import Integrand, power_integrand
from fracint.transforms import identity_value, make_transform, validate_horizon, validate_order

from _reference import (
    ALPHA_GRID,
    A_AT_Y2_ALPHA05_T4,
    G_AT4_ALPHA05_T4,
    G_AT5_ALPHA02_T10,
    G_AT10_ALPHA04_T10,
    HORIZON_GRID,
)

LINEAR = power_integrand(1.0, 1.0)


def test_order_validation():
    assert validate_order(0.7) == 0.7
    assert validate_order(0.0, allow_zero=True) == 0.0
    for bad in (-0.1, 1.5, float("nan")):
        with pytest.raises(DomainError):
            validate_order(bad)
    with pytest.raises(DomainError):
        validate_order(0.0)


def test_horizon_validation():
    assert validate_horizon(3.0) == 3.0
    for bad in (0.0, -2.0, float("inf")):
        with pytest.raises(DomainError):
            validate_horizon(bad)


def test_make_transform_rejects_degenerate_order():
    with pytest.raises(DomainError):
        make_transform(0.0, 10.0)


def test_identity_order_collapses_pointwise():
    pair = make_transform(1.0, 10.0)
    taus = np.linspace(0.0, 10.0, 1001)
    assert np.max(np.abs(pair.forward(taus) - taus)) <= 1e-12 * 10.0
    assert np.max(np.abs(pair.inverse(taus) - taus)) <= 1e-12 * 10.0


def test_pinned_forward_values():
    assert make_transform(0.2, 10.0).forward(5.0) == pytest.approx(
        G_AT5_ALPHA02_T10, rel=1e-13
    )
    assert make_transform(0.5, 4.0).forward(4.0) == pytest.approx(
        G_AT4_ALPHA05_T4, rel=1e-13
    )
    assert make_transform(0.4, 10.0).forward(10.0) == pytest.approx(
        G_AT10_ALPHA04_T10, rel=1e-13
    )


@pytest.mark.parametrize("alpha", ALPHA_GRID)
@pytest.mark.parametrize("t", HORIZON_GRID)
def test_endpoints_and_round_trip(alpha, t):
    pair = make_transform(alpha, t)
    assert pair.forward(0.0) == 0.0
    assert pair.forward(t) == pytest.approx(pair.width, rel=1e-12)
    assert abs(pair.inverse(0.0)) <= 1e-12 * t
    assert pair.inverse(pair.width) == pytest.approx(t, rel=1e-12)

    taus = np.linspace(0.0, t, 1000)
    assert np.max(np.abs(pair.inverse(pair.forward(taus)) - taus)) <= 1e-10 * t


@pytest.mark.parametrize("alpha", ALPHA_GRID)
def test_forward_strictly_increasing(alpha):
    pair = make_transform(alpha, 10.0)
    values = pair.forward(np.linspace(0.0, 10.0, 1000))
    assert np.all(np.diff(values) > 0.0)


def test_domain_errors():
    pair = make_transform(0.5, 4.0)
    with pytest.raises(DomainError):
        pair.forward(-0.5)
    with pytest.raises(DomainError):
        pair.forward(4.5)
    with pytest.raises(DomainError):
        pair.inverse(pair.width + 1.0)
    with pytest.raises(DomainError):
        pair.inverse(-0.1)


def test_radicand_clamping_near_right_endpoint():
    pair = make_transform(0.5, 4.0)
    # nudge just past the endpoint but inside the clamping tolerance
    assert pair.inverse(pair.width + 1e-13) == pytest.approx(4.0, rel=1e-12)


def test_left_boundary_values():
    # order 1: the left boundary collapses onto the y-axis
    pair = make_transform(1.0, 7.0)
    assert pair.left_boundary(LINEAR, 3.0) == pytest.approx(0.0, abs=1e-12)

    pair = make_transform(0.8, 10.0)
    assert pair.left_boundary(LINEAR, 0.0) == pytest.approx(0.0, abs=1e-12)

    pair = make_transform(0.5, 4.0)
    assert pair.left_boundary(LINEAR, 2.0) == pytest.approx(A_AT_Y2_ALPHA05_T4, rel=1e-12)
    # consistency with the forward transform: a(y) = y - g(y) for f = tau
    assert pair.left_boundary(LINEAR, 2.0) == pytest.approx(
        2.0 - pair.forward(2.0), rel=1e-12
    )


def test_right_boundary_offset_and_anchor():
    pair = make_transform(0.8, 10.0)
    ys = np.linspace(0.0, 10.0, 50)
    widths = pair.right_boundary(LINEAR, ys) - pair.left_boundary(LINEAR, ys)
    assert np.max(np.abs(widths - pair.width)) <= 1e-12 * pair.width
    # the right boundary meets the integrand curve at (t, f(t))
    assert pair.right_boundary(LINEAR, 10.0) == pytest.approx(10.0, rel=1e-12)

    pair_one = make_transform(1.0, 10.0)
    assert pair_one.right_boundary(LINEAR, 0.0) == pytest.approx(10.0, rel=1e-12)


def test_left_boundary_without_inverse_uses_bisection():
    cubic = Integrand(fn=lambda x: np.asarray(x, float) ** 3, monotone="increasing", label="cube")
    pair = make_transform(0.5, 2.0)
    direct = pair.left_boundary(power_integrand(1.0, 3.0), 1.0)
    bisected = pair.left_boundary(cubic, 1.0)
    assert bisected == pytest.approx(direct, abs=1e-11)


def test_left_boundary_requires_monotonicity():
    wiggle = Integrand(fn=lambda x: np.sin(np.asarray(x, float)), label="sin")
    pair = make_transform(0.5, 2.0)
    with pytest.raises(NonMonotoneError):
        pair.left_boundary(wiggle, 0.5)


def test_left_boundary_range_error():
    pair = make_transform(0.5, 4.0)
    with pytest.raises(DomainError):
        pair.left_boundary(LINEAR, 5.0)  # above f(t) = 4


def test_identity_value():
    assert identity_value(LINEAR, 7.0) == 7.0
    assert identity_value(power_integrand(1.0, 0.5), 4.0) == pytest.approx(2.0, rel=1e-14)
