"""Transform pair turning the singular-kernel integral into bounded forms.

For order alpha in (0, 1] and horizon t > 0 the integrator

    g(tau) = (t**alpha - (t - tau)**alpha) / Gamma(alpha + 1)

maps [0, t] monotonically onto [0, t**alpha / Gamma(alpha + 1)], and its
inverse is

    h(x) = t - (t**alpha - Gamma(alpha + 1) * x) ** (1 / alpha).

The strip boundary curves derived from a monotone integrand f are

    left(y)  = f^{-1}(y) - g(f^{-1}(y))
    right(y) = left(y) + t**alpha / Gamma(alpha + 1)
"""

import numpy as np

from .errors import DomainError
from .gamma import gamma
from .integrand import Integrand, evaluate, inverse_value

# Absolute tolerance for the inverse-transform radicand near the right endpoint.
RADICAND_TOLERANCE = 1e-12


def validate_order(alpha: float, allow_zero: bool = False) -> float:
    alpha = float(alpha)
    if not np.isfinite(alpha):
        raise DomainError(f"order must be finite, got {alpha!r}")
    if alpha == 0.0:
        if allow_zero:
            return alpha
        raise DomainError("order 0 is the identity operator; use the identity path")
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"order must lie in (0, 1], got {alpha:g}")
    return alpha


def validate_horizon(t: float) -> float:
    t = float(t)
    if not np.isfinite(t) or t <= 0.0:
        raise DomainError(f"horizon must be finite and > 0, got {t!r}")
    return t


class TransformPair:
    """Immutable forward/inverse transform bound to a fixed (alpha, t)."""

    __slots__ = ("alpha", "t", "gamma_alpha_plus_one", "width")

    def __init__(self, alpha: float, t: float):
        self.alpha = validate_order(alpha)
        self.t = validate_horizon(t)
        self.gamma_alpha_plus_one = gamma(self.alpha + 1.0)
        # Total image width t**alpha / Gamma(alpha + 1); also the constant
        # horizontal offset between the strip boundary curves.
        self.width = self.t**self.alpha / self.gamma_alpha_plus_one

    @property
    def upper(self) -> float:
        """Right endpoint of the transformed axis."""
        return self.width

    def forward(self, tau):
        """g(tau) on [0, t]; strictly increasing."""
        arr = np.asarray(tau, dtype=float)
        slack = 1e-12 * self.t
        if np.any(arr < -slack) or np.any(arr > self.t + slack):
            raise DomainError(f"tau outside [0, {self.t:g}]")
        arr = np.clip(arr, 0.0, self.t)
        t, a = self.t, self.alpha
        out = (t**a - (t - arr) ** a) / self.gamma_alpha_plus_one
        if np.asarray(tau).ndim == 0:
            return float(out)
        return out

    def inverse(self, x):
        """h(x) on [0, t**alpha / Gamma(alpha + 1)]; inverse of forward."""
        arr = np.asarray(x, dtype=float)
        t, a = self.t, self.alpha
        radicand = t**a - self.gamma_alpha_plus_one * arr
        if np.any(radicand < -RADICAND_TOLERANCE) or np.any(arr < -RADICAND_TOLERANCE):
            raise DomainError(f"x outside [0, {self.width:g}]")
        radicand = np.maximum(radicand, 0.0)
        out = np.clip(t - radicand ** (1.0 / a), 0.0, t)
        if np.asarray(x).ndim == 0:
            return float(out)
        return out

    def left_boundary(self, f: Integrand, y):
        """Left strip-boundary abscissa at height y: f^{-1}(y) - g(f^{-1}(y))."""
        tau = inverse_value(f, y, self.t)
        return tau - self.forward(tau)

    def right_boundary(self, f: Integrand, y):
        """Right strip-boundary abscissa: the left one shifted by the constant width."""
        return self.left_boundary(f, y) + self.width

    def __repr__(self):
        return f"TransformPair(alpha={self.alpha:g}, t={self.t:g})"


def make_transform(alpha: float, t: float) -> TransformPair:
    """Build the transform pair; rejects alpha = 0 (degenerate identity case)."""
    return TransformPair(alpha, t)


def identity_value(f: Integrand, t: float) -> float:
    """Order-zero operator: plain evaluation f(t)."""
    return float(evaluate(f, validate_horizon(t)))
