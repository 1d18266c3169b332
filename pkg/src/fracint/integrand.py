"""Integrand descriptions shared by the quadrature engines and strip geometry."""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DomainError, NonMonotoneError

INCREASING = "increasing"
DECREASING = "decreasing"
UNKNOWN = "unknown"

BISECTION_ITERATIONS = 80


@dataclass(frozen=True)
class Integrand:
    """A real function on [0, t] with optional monotonicity and inverse metadata.

    ``fn`` should accept numpy arrays (all built-in integrands do); scalar-only
    callables are tolerated through :func:`evaluate`.  ``power`` carries
    ``(coefficient, exponent)`` when the function is c*tau**p, which unlocks the
    closed-form route.
    """

    fn: Callable
    monotone: str = UNKNOWN
    inverse: Optional[Callable] = None
    label: str = "f"
    power: Optional[tuple] = None

    def __post_init__(self):
        if self.monotone not in (INCREASING, DECREASING, UNKNOWN):
            raise DomainError(f"unknown monotonicity tag {self.monotone!r}")

    def __call__(self, x):
        return self.fn(x)


def evaluate(fn, x):
    """Evaluate ``fn`` on scalar or array ``x``, tolerating scalar-only callables."""
    arr = np.asarray(x, dtype=float)
    try:
        out = np.asarray(fn(arr), dtype=float)
    except (TypeError, ValueError):
        out = np.array([fn(float(v)) for v in np.atleast_1d(arr)], dtype=float)
        out = out.reshape(arr.shape)
    if out.shape != arr.shape:
        out = np.array([fn(float(v)) for v in np.atleast_1d(arr)], dtype=float)
        out = out.reshape(arr.shape)
    if arr.ndim == 0:
        return float(out)
    return out


def power_integrand(coefficient: float, exponent: float) -> Integrand:
    """The family c*tau**p (p >= 0), with analytic inverse when invertible."""
    c = float(coefficient)
    p = float(exponent)
    if not (np.isfinite(c) and np.isfinite(p)):
        raise DomainError("power integrand needs finite coefficient and exponent")
    if p < 0:
        raise DomainError(f"power integrand exponent must be >= 0, got {p:g}")

    def fn(tau):
        return c * np.asarray(tau, dtype=float) ** p

    if p == 0 or c == 0:
        monotone = UNKNOWN
        inverse = None
    else:
        monotone = INCREASING if c > 0 else DECREASING

        def inverse(y):
            return (np.asarray(y, dtype=float) / c) ** (1.0 / p)

    label = f"pow:{c:g}:{p:g}"
    return Integrand(fn=fn, monotone=monotone, inverse=inverse, label=label, power=(c, p))


def inverse_value(f: Integrand, y, upper: float):
    """f^{-1}(y) on [0, upper]: analytic inverse if present, else bisection.

    Bisection needs a declared monotone direction; it runs a fixed 80
    iterations or until the bracket is below 1e-13 * upper.
    """
    if f.inverse is not None:
        return evaluate(f.inverse, y)
    if f.monotone == UNKNOWN:
        raise NonMonotoneError(
            f"integrand {f.label!r} has no inverse and no declared monotone direction"
        )

    ys = np.atleast_1d(np.asarray(y, dtype=float))
    f_lo = evaluate(f, 0.0)
    f_hi = evaluate(f, upper)
    lo_val, hi_val = (f_lo, f_hi) if f.monotone == INCREASING else (f_hi, f_lo)
    slack = 1e-9 * max(1.0, abs(hi_val - lo_val))
    if np.any(ys < lo_val - slack) or np.any(ys > hi_val + slack):
        raise DomainError(
            f"value outside the range [{lo_val:g}, {hi_val:g}] of {f.label!r} on [0, {upper:g}]"
        )
    ys = np.clip(ys, lo_val, hi_val)

    lo = np.zeros_like(ys)
    hi = np.full_like(ys, float(upper))
    tol = 1e-13 * float(upper)
    sign = 1.0 if f.monotone == INCREASING else -1.0
    for _ in range(BISECTION_ITERATIONS):
        mid = 0.5 * (lo + hi)
        below = sign * (evaluate(f, mid) - ys) < 0.0
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
        if np.max(hi - lo) <= tol:
            break
    root = 0.5 * (lo + hi)
    if np.asarray(y).ndim == 0:
        return float(root[0])
    return root


def check_inverse(f: Integrand, upper: float, samples: int = 17, tol: float = 1e-10) -> None:
    """Verify f(f^{-1}(y)) = y on a sampled range; raises DomainError on mismatch."""
    ft = evaluate(f, upper)
    f0 = evaluate(f, 0.0)
    ys = np.linspace(min(f0, ft), max(f0, ft), samples)
    taus = inverse_value(f, ys, upper)
    resid = np.max(np.abs(evaluate(f, taus) - ys))
    scale = max(1.0, abs(ft), abs(f0))
    if resid > tol * scale:
        raise DomainError(
            f"inverse of {f.label!r} fails round-trip check (residual {resid:.3e})"
        )
