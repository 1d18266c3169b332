"""Four numerical routes to the order-alpha integral, plus integer-order forms.

Routes
------
direct       adaptive quadrature of the kernel form; the substitution
             u = (t - tau)**alpha removes the endpoint singularity exactly
stieltjes    left-endpoint sum against the integrator g
cavalieri    left-endpoint strip sum, equal widths on the transformed axis
transformed  adaptive quadrature of the bounded form f(h(x)) on [0, g(t)]

All four converge to the same value; they are kept separate so they can
cross-check one another.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError
from .gamma import recip_gamma
from .integrand import Integrand, evaluate
from .quadrature import (
    DEFAULT_ABS_TOL,
    DEFAULT_BUDGET,
    DEFAULT_REL_TOL,
    adaptive_quadrature,
)
from .transforms import TransformPair, validate_horizon, validate_order

METHODS = ("direct", "stieltjes", "cavalieri", "transformed", "oracle")

SPACING_TRANSFORMED = "transformed"
SPACING_TAU = "tau"


@dataclass(frozen=True)
class QuadratureResult:
    """Value plus the bookkeeping needed to compare routes."""

    value: float
    error_estimate: float
    method: str
    evaluations: int
    n: Optional[int] = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise DomainError(f"unknown method {self.method!r}")
        if not np.isfinite(self.error_estimate) or self.error_estimate < 0:
            raise DomainError("error estimate must be finite and >= 0")
        if self.evaluations <= 0:
            raise DomainError("evaluation count must be positive")


@dataclass(frozen=True)
class Partition:
    """Companion partitions: uniform points on one axis, images on the other.

    ``transformed`` lives on [0, t**alpha / Gamma(alpha+1)], ``tau`` on [0, t];
    tau[i] = h(transformed[i]) within roundoff either way.
    """

    transformed: np.ndarray
    tau: np.ndarray

    def __post_init__(self):
        if len(self.transformed) != len(self.tau):
            raise DomainError("companion partitions must have equal length")
        if np.any(np.diff(self.transformed) <= 0):
            raise DomainError("transformed-axis points must be strictly increasing")
        # adjacent images can round to equal doubles where the inverse
        # transform flattens, so the companion axis is only required monotone
        if np.any(np.diff(self.tau) < 0):
            raise DomainError("companion points must be non-decreasing")


def make_partition(pair: TransformPair, n: int, spacing: str = SPACING_TRANSFORMED) -> Partition:
    if n < 1:
        raise DomainError(f"partition size must be >= 1, got {n}")
    if spacing == SPACING_TRANSFORMED:
        x1 = np.linspace(0.0, pair.width, int(n) + 1)
        x2 = pair.inverse(x1)
    elif spacing == SPACING_TAU:
        x2 = np.linspace(0.0, pair.t, int(n) + 1)
        x1 = pair.forward(x2)
    else:
        raise DomainError(f"unknown partition spacing {spacing!r}")
    return Partition(transformed=x1, tau=x2)


def direct_rl(
    f: Integrand,
    alpha: float,
    t: float,
    budget: int = DEFAULT_BUDGET,
    abs_tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
    substitute: bool = True,
) -> QuadratureResult:
    """Kernel-form route: (1/Gamma(alpha)) int_0^t (t-tau)**(alpha-1) f(tau) dtau.

    With ``substitute`` (default) the change of variable u = (t - tau)**alpha
    turns the weighted measure into du / (alpha * Gamma(alpha)) and leaves a
    bounded integrand.  ``substitute=False`` integrates the raw form, which the
    interior-node rule tolerates; it is kept as a slower cross-check.
    """
    alpha = validate_order(alpha)
    t = validate_horizon(t)
    if budget < 64:
        raise DomainError(f"direct route needs a budget of at least 64, got {budget}")

    if substitute:
        scale = recip_gamma(alpha + 1.0)  # 1 / (alpha * Gamma(alpha))

        def bounded(u):
            tau = np.clip(t - np.asarray(u, dtype=float) ** (1.0 / alpha), 0.0, t)
            return evaluate(f, tau)

        raw, err, evals = adaptive_quadrature(bounded, 0.0, t**alpha, abs_tol, rel_tol, budget)
    else:
        scale = recip_gamma(alpha)

        def kernel(tau):
            arr = np.asarray(tau, dtype=float)
            diff = t - arr
            vals = np.asarray(evaluate(f, arr))
            # node rounding can land exactly on t; the point has measure zero
            with np.errstate(divide="ignore", over="ignore"):
                weight = np.where(diff > 0.0, diff, 1.0) ** (alpha - 1.0)
            return np.where(diff > 0.0, weight * vals, 0.0)

        raw, err, evals = adaptive_quadrature(kernel, 0.0, t, abs_tol, rel_tol, budget)

    return QuadratureResult(scale * raw, scale * err, "direct", evals)


def _left_sum(heights: np.ndarray, increments: np.ndarray) -> float:
    return float(np.dot(heights, increments))


def _coarse_estimate(heights: np.ndarray, points: np.ndarray, value: float) -> float:
    # error estimate by comparison with the stride-2 sub-partition
    if len(heights) < 2:
        return abs(value)
    coarse = float(np.dot(heights[::2], np.diff(points[::2])))
    return abs(value - coarse)


def stieltjes_sum(
    f: Integrand,
    pair: TransformPair,
    n: int,
    spacing: str = SPACING_TRANSFORMED,
) -> QuadratureResult:
    """Left-endpoint sum of f against the integrator: sum f(x2_i) * (g(x2_{i+1}) - g(x2_i))."""
    part = make_partition(pair, n, spacing)
    g_values = pair.forward(part.tau)
    heights = np.atleast_1d(np.asarray(evaluate(f, part.tau[:-1])))
    value = _left_sum(heights, np.diff(g_values))
    err = _coarse_estimate(heights, g_values, value)
    return QuadratureResult(value, err, "stieltjes", int(n), n=int(n))


def cavalieri_sum(
    f: Integrand,
    pair: TransformPair,
    n: int,
    spacing: str = SPACING_TRANSFORMED,
) -> QuadratureResult:
    """Equal-width strip sum on the transformed axis: sum f(h(x1_i)) * dx1."""
    part = make_partition(pair, n, spacing)
    heights = np.atleast_1d(np.asarray(evaluate(f, part.tau[:-1])))
    value = _left_sum(heights, np.diff(part.transformed))
    err = _coarse_estimate(heights, part.transformed, value)
    return QuadratureResult(value, err, "cavalieri", int(n), n=int(n))


def transformed_riemann(
    f: Integrand,
    pair: TransformPair,
    budget: int = DEFAULT_BUDGET,
    abs_tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> QuadratureResult:
    """Bounded-form route: int_0^{g(t)} f(h(x)) dx.

    No kernel singularity survives the transform, so this is the preferred
    high-accuracy route.
    """
    def composed(x):
        return evaluate(f, pair.inverse(x))

    value, err, evals = adaptive_quadrature(composed, 0.0, pair.width, abs_tol, rel_tol, budget)
    return QuadratureResult(value, err, "transformed", evals)


def cauchy_repeated(
    f: Integrand,
    n: int,
    t: float,
    budget: int = DEFAULT_BUDGET,
    abs_tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> QuadratureResult:
    """n-th antiderivative based at 0 through the single polynomial-kernel integral.

    (1/(n-1)!) int_0^t (t - tau)**(n-1) f(tau) dtau
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"repetition count must be a positive integer, got {n!r}")
    t = validate_horizon(t)
    scale = 1.0 / math.factorial(n - 1)

    def kernel(tau):
        arr = np.asarray(tau, dtype=float)
        return (t - arr) ** (n - 1) * np.asarray(evaluate(f, arr))

    raw, err, evals = adaptive_quadrature(kernel, 0.0, t, abs_tol, rel_tol, budget)
    return QuadratureResult(scale * raw, scale * err, "direct", evals)


def nested_integral_oracle(f: Integrand, n: int, t: float, resolution: int = 20_001) -> float:
    """Brute-force n-fold nested integration on a uniform grid (n in {1, 2, 3}).

    Repeated cumulative trapezoid integration; deliberately independent of the
    adaptive engine so it can validate cauchy_repeated.
    """
    if n not in (1, 2, 3):
        raise DomainError(f"nested oracle supports n in {{1, 2, 3}}, got {n!r}")
    t = validate_horizon(t)
    if resolution < 3:
        raise DomainError(f"resolution must be >= 3, got {resolution}")
    grid = np.linspace(0.0, t, int(resolution))
    dx = grid[1] - grid[0]
    values = np.atleast_1d(np.asarray(evaluate(f, grid), dtype=float))
    for _ in range(n):
        cumulative = np.concatenate(
            ([0.0], np.cumsum(0.5 * (values[1:] + values[:-1]) * dx))
        )
        values = cumulative
    return float(values[-1])
