"""Planar distances between curve graphs and the derived error criteria.

Curves are compared as graphs: the polyline through (x_j, y_j) stands in for
the point set {(x, f(x))}.  The one-directional visual errors integrate (or
maximise) the Euclidean point-to-graph distance along the source curve; the
symmetrised versions combine both directions, the sup-version being the
Hausdorff distance.  The vertical criteria l1/l2/linf are included for
comparison; note l2 is the *integrated square* (no root), matching the usual
convention for integrated squared error.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _core

DIRECTIONS = ("est_to_truth", "truth_to_est")


@dataclass(frozen=True)
class CurveGraph:
    """A function discretized as a polyline over strictly ascending abscissae."""

    xs: np.ndarray
    ys: np.ndarray

    def __post_init__(self):
        xs = np.ascontiguousarray(self.xs, dtype=float)
        ys = np.ascontiguousarray(self.ys, dtype=float)
        if xs.ndim != 1 or xs.shape != ys.shape or xs.size < 1:
            raise ValueError("xs and ys must be equal-length 1-d arrays")
        if not (np.all(np.isfinite(xs)) and np.all(np.isfinite(ys))):
            raise ValueError("graph values must be finite")
        if xs.size > 1 and np.any(np.diff(xs) <= 0):
            raise ValueError("xs must be strictly ascending")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)

    @property
    def m(self):
        return self.xs.shape[0]

    def x_range(self):
        return (float(self.xs[0]), float(self.xs[-1]))


@dataclass(frozen=True)
class ErrorReport:
    """All criteria for one (estimate, truth) pair.

    ``eh`` marks the estimate-to-truth direction, ``he`` the reverse.
    """

    l1: float
    l2: float
    linf: float
    ve1_eh: float
    ve1_he: float
    ve2_eh: float
    ve2_he: float
    veinf_eh: float
    veinf_he: float
    se1: float
    se2: float
    seinf: float

    def as_dict(self):
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def point_to_graph(p, g):
    """Shortest Euclidean distance from the point p = (x, y) to the graph g."""
    x, y = p
    return float(_core.polyline_min_dists(
        np.array([float(x)]), np.array([float(y)]), g.xs, g.ys)[0])


def graph_to_graph_dists(src, tgt):
    """Distance from every vertex of ``src`` to the polyline of ``tgt``."""
    return _core.polyline_min_dists(src.xs, src.ys, tgt.xs, tgt.ys)


def _overlap(a, b):
    lo = max(a.xs[0], b.xs[0])
    hi = min(a.xs[-1], b.xs[-1])
    if lo > hi:
        raise ValueError("graphs share no x-interval")
    return lo, hi


def _restrict(g, lo, hi):
    """Vertices of g inside [lo, hi], with interpolated endpoint vertices."""
    xs, ys = g.xs, g.ys
    i0 = np.searchsorted(xs, lo, side="left")
    i1 = np.searchsorted(xs, hi, side="right")
    cx = xs[i0:i1]
    cy = ys[i0:i1]
    if cx.size == 0 or cx[0] > lo:
        cx = np.concatenate(([lo], cx))
        cy = np.concatenate(([np.interp(lo, xs, ys)], cy))
    if cx[-1] < hi:
        cx = np.concatenate((cx, [hi]))
        cy = np.concatenate((cy, [np.interp(hi, xs, ys)]))
    return cx, cy


def _summarize(d, cx, p):
    if p == math.inf:
        return float(np.max(d))
    if p == 1:
        return float(np.trapezoid(d, cx))
    if p == 2:
        return math.sqrt(float(np.trapezoid(d * d, cx)))
    raise ValueError("p must be 1, 2 or inf")


def ve(direction, p, est, truth):
    """One-directional visual error of order p in {1, 2, inf}.

    Point-to-graph distances are taken from the source graph's vertices
    (clipped to the shared x-interval) to the full target polyline, then
    integrated by the composite trapezoid rule (p = 1, 2; the quadratic
    version returns the square root) or maximised (p = inf).
    """
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be one of {DIRECTIONS}")
    src, tgt = (est, truth) if direction == "est_to_truth" else (truth, est)
    lo, hi = _overlap(est, truth)
    cx, cy = _restrict(src, lo, hi)
    d = _core.polyline_min_dists(cx, cy, tgt.xs, tgt.ys)
    return _summarize(d, cx, p)


def se(p, est, truth):
    """Symmetrised error of order p: both directional errors combined.

    Quadratic version combines in a Pythagorean way; the sup-version is the
    Hausdorff distance.  The combined quadratic and absolute versions are not
    metrics (the triangle inequality fails).
    """
    a = ve("est_to_truth", p, est, truth)
    b = ve("truth_to_est", p, est, truth)
    if p == math.inf:
        return max(a, b)
    if p == 1:
        return a + b
    if p == 2:
        return math.sqrt(a * a + b * b)
    raise ValueError("p must be 1, 2 or inf")


def lp(p, est, truth):
    """Vertical criterion of order p over the shared x-interval.

    Both graphs are resampled onto the union grid by linear interpolation;
    integrals use the composite trapezoid rule.  The quadratic version is the
    integrated square, without a root.
    """
    lo, hi = _overlap(est, truth)
    ux = np.union1d(est.xs, truth.xs)
    ux = ux[(ux >= lo) & (ux <= hi)]
    if ux.size == 0 or ux[0] > lo:
        ux = np.concatenate(([lo], ux))
    if ux[-1] < hi:
        ux = np.concatenate((ux, [hi]))
    diff = np.interp(ux, est.xs, est.ys) - np.interp(ux, truth.xs, truth.ys)
    if p == math.inf:
        return float(np.max(np.abs(diff)))
    if p == 1:
        return float(np.trapezoid(np.abs(diff), ux))
    if p == 2:
        return float(np.trapezoid(diff * diff, ux))
    raise ValueError("p must be 1, 2 or inf")


def compare_graphs(est, truth):
    """Evaluate every criterion for one pair, sharing the distance arrays."""
    lo, hi = _overlap(est, truth)
    ex, ey = _restrict(est, lo, hi)
    tx, ty = _restrict(truth, lo, hi)
    d_eh = _core.polyline_min_dists(ex, ey, truth.xs, truth.ys)
    d_he = _core.polyline_min_dists(tx, ty, est.xs, est.ys)

    ve1_eh = float(np.trapezoid(d_eh, ex))
    ve1_he = float(np.trapezoid(d_he, tx))
    ve2_eh = math.sqrt(float(np.trapezoid(d_eh * d_eh, ex)))
    ve2_he = math.sqrt(float(np.trapezoid(d_he * d_he, tx)))
    veinf_eh = float(np.max(d_eh))
    veinf_he = float(np.max(d_he))

    return ErrorReport(
        l1=lp(1, est, truth),
        l2=lp(2, est, truth),
        linf=lp(math.inf, est, truth),
        ve1_eh=ve1_eh,
        ve1_he=ve1_he,
        ve2_eh=ve2_eh,
        ve2_he=ve2_he,
        veinf_eh=veinf_eh,
        veinf_he=veinf_he,
        se1=ve1_eh + ve1_he,
        se2=math.sqrt(ve2_eh * ve2_eh + ve2_he * ve2_he),
        seinf=max(veinf_eh, veinf_he),
    )
