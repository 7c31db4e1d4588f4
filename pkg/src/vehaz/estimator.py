"""Fixed-bandwidth kernel estimator of the hazard rate and its derivative.

The estimate at x is the rank-weighted kernel sum over the sorted sample,

    sum_i  delta_(i) / (n - i + 1) * (1/b) * K((x - X_(i)) / b),

and the derivative replaces K with K' and 1/b with 1/b^2.  Grid evaluation
uses a sliding window over the sorted sample (compact support), which equals
the naive full summation term for term.
"""

from dataclasses import dataclass

import numpy as np

from . import _core
from .curvedist import CurveGraph


@dataclass(frozen=True)
class Bandwidth:
    """Smoothing scale, optionally tagged with the schedule that produced it."""

    value: float
    c0: float | None = None
    n_ref: int | None = None

    def __post_init__(self):
        if not self.value > 0:
            raise ValueError("bandwidth must be positive")

    @classmethod
    def from_schedule(cls, c0, n):
        """Optimal-rate schedule b = c0 * n^(-1/5)."""
        if c0 <= 0 or n < 1:
            raise ValueError("need c0 > 0 and n >= 1")
        return cls(c0 * n ** -0.2, c0=c0, n_ref=int(n))


def _as_bandwidth(b):
    return b if isinstance(b, Bandwidth) else Bandwidth(float(b))


def _grid_values(sample, kernel, b, grid, deriv):
    grid = np.ascontiguousarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 1:
        raise ValueError("grid must be a nonempty 1-d array")
    if np.any(np.diff(grid) < 0):
        raise ValueError("grid must be ascending")
    return _core.hazard_grid(sample.x, sample.weights(), b.value,
                             kernel.halfwidth, kernel.kind, deriv, grid)


def estimate(sample, kernel, b, x):
    """Hazard estimate at a single point."""
    b = _as_bandwidth(b)
    return float(_grid_values(sample, kernel, b, np.array([float(x)]), False)[0])


def estimate_d1(sample, kernel, b, x):
    """Derivative of the hazard estimate at a single point."""
    b = _as_bandwidth(b)
    return float(_grid_values(sample, kernel, b, np.array([float(x)]), True)[0])


def estimate_on_grid(sample, kernel, b, grid, deriv=False):
    """Evaluate the estimate on an ascending grid, as a curve graph."""
    b = _as_bandwidth(b)
    return CurveGraph(np.asarray(grid, dtype=float),
                      _grid_values(sample, kernel, b, grid, deriv))


def comparison_grid(b, kernel, tau, points=512, include_boundary=False):
    """Default evaluation grid on [b*halfwidth, tau - b*halfwidth].

    Interior by default: near the edges the kernel window leaves the data
    range and the estimate is boundary-biased.  ``include_boundary`` extends
    the grid to [0, tau].
    """
    b = _as_bandwidth(b)
    if include_boundary:
        lo, hi = 0.0, tau
    else:
        lo, hi = b.value * kernel.halfwidth, tau - b.value * kernel.halfwidth
    if not lo < hi:
        raise ValueError(f"empty evaluation interval [{lo}, {hi}]")
    return np.linspace(lo, hi, points)
