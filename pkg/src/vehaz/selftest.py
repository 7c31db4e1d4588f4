"""Quick built-in oracle checks, runnable from the CLI without pytest.

Each check recomputes a handful of core results against an independent route
(quadrature, naive summation, exhaustive segment scan) and reports pass/fail.
"""

import math

import numpy as np
from scipy.integrate import quad

from ._core import polyline_min_dists
from .asymptotics import AsymptoticSpec, mise_asymptotic, weighted_mise_asymptotic
from .curvedist import CurveGraph, compare_graphs, point_to_graph
from .estimator import Bandwidth, estimate_on_grid
from .kernels import builtin_kernel
from .models import Exponential
from .sampling import CensoredSample


def _check_kernel_constants():
    for name in ("epanechnikov", "biweight", "triweight"):
        k = builtin_kernel(name)
        alpha = quad(lambda u: float(k(u)) ** 2, -1.0, 1.0, epsabs=1e-13)[0]
        beta = quad(lambda u: u * u * float(k(u)), -1.0, 1.0, epsabs=1e-13)[0]
        mass = quad(lambda u: float(k(u)), -1.0, 1.0, epsabs=1e-13)[0]
        if abs(alpha - k.alpha) > 1e-10 or abs(beta - k.beta) > 1e-10:
            return False, f"{name}: quadrature moments disagree with stored constants"
        if abs(mass - 1.0) > 1e-10:
            return False, f"{name}: kernel mass {mass} != 1"
    return True, "moment constants reproduced by quadrature"


def _naive_estimate(sample, kernel, b, x):
    n = sample.n
    total = 0.0
    for i in range(n):
        w = sample.delta[i] / (n - i)
        total += w * float(kernel((x - sample.x[i]) / b))
    return total / b


def _check_estimator():
    kernel = builtin_kernel("epanechnikov")
    hand = CensoredSample(np.array([1.0, 2.0]), np.array([1, 1]))
    got = estimate_on_grid(hand, kernel, Bandwidth(1.0), np.array([1.0])).ys[0]
    if got != 0.375:
        return False, f"two-point hand value {got} != 0.375"
    rng = np.random.default_rng(99)
    for _ in range(20):
        n = int(rng.integers(2, 50))
        x = np.sort(rng.exponential(size=n))
        delta = rng.integers(0, 2, size=n)
        sample = CensoredSample(x, delta)
        b = Bandwidth(float(rng.uniform(0.1, 1.0)))
        grid = np.sort(rng.uniform(0.0, 3.0, size=17))
        fast = estimate_on_grid(sample, kernel, b, grid).ys
        slow = np.array([_naive_estimate(sample, kernel, b.value, g) for g in grid])
        if np.max(np.abs(fast - slow)) > 1e-12:
            return False, "windowed grid evaluation disagrees with naive summation"
    return True, "hand value and naive-summation agreement"


def _brute_point_dist(px, py, qx, qy):
    best = math.inf
    for j in range(len(qx) - 1):
        ux, uy = qx[j + 1] - qx[j], qy[j + 1] - qy[j]
        t = ((px - qx[j]) * ux + (py - qy[j]) * uy) / (ux * ux + uy * uy)
        t = min(1.0, max(0.0, t))
        fx, fy = px - qx[j] - t * ux, py - qy[j] - t * uy
        best = min(best, math.hypot(fx, fy))
    return best


def _check_geometry():
    diag = CurveGraph(np.array([0.0, 2.0]), np.array([0.0, 2.0]))
    if point_to_graph((0.0, 1.0), diag) != math.sqrt(0.5):
        return False, "distance to diagonal segment is off"
    flat = CurveGraph(np.array([0.0, 10.0]), np.array([3.0, 3.0]))
    if point_to_graph((5.0, 3.25), flat) != 0.25:
        return False, "vertical drop distance is off"
    rng = np.random.default_rng(17)
    for _ in range(100):
        m = int(rng.integers(2, 40))
        qx = np.sort(rng.uniform(0.0, 10.0, size=m))
        qx += np.arange(m) * 1e-9
        qy = rng.normal(size=m)
        px, py = float(rng.uniform(-1, 11)), float(rng.normal())
        got = float(polyline_min_dists(np.array([px]), np.array([py]), qx, qy)[0])
        want = _brute_point_dist(px, py, qx, qy)
        if abs(got - want) > 1e-12:
            return False, f"windowed distance {got} != brute force {want}"
    return True, "closed forms and brute-force scan agree"


def _check_domination():
    rng = np.random.default_rng(5)
    for _ in range(20):
        xs = np.linspace(0.0, 5.0, 64)
        ye = 1.0 + 0.5 * np.sin(xs * rng.uniform(0.5, 2.0)) + rng.normal(0, 0.05, xs.size)
        yt = 1.0 + 0.5 * np.cos(xs * rng.uniform(0.5, 2.0))
        est, truth = CurveGraph(xs, ye), CurveGraph(xs, yt)
        rep = compare_graphs(est, truth)
        if rep.ve2_eh ** 2 > rep.l2 + 1e-12 or rep.ve2_he ** 2 > rep.l2 + 1e-12:
            return False, "squared visual error exceeds vertical integrated square"
        d = polyline_min_dists(xs, ye, xs, yt)
        if np.any(d > np.abs(ye - yt) + 1e-12):
            return False, "point-to-graph distance exceeds the vertical gap"
    return True, "visual-vertical domination holds on random pairs"


def _check_exponential_targets():
    failure = Exponential(1.0)
    censor = Exponential(1.0)
    kernel = builtin_kernel("triweight")
    spec = AsymptoticSpec(failure, censor, kernel, 400, 0.3, 0.3, 1.2)
    mise = mise_asymptotic(spec)
    wmise = weighted_mise_asymptotic(spec)
    if abs(wmise - mise) > 1e-12 * max(1.0, mise):
        return False, f"flat-hazard weighting changed the integral: {wmise} vs {mise}"
    return True, "flat hazard makes weighted and plain integrals equal"


CHECKS = (
    ("kernel-constants", _check_kernel_constants),
    ("estimator", _check_estimator),
    ("geometry", _check_geometry),
    ("domination", _check_domination),
    ("exponential-targets", _check_exponential_targets),
)


def run_selftest(quiet=False):
    """Run all checks; returns True when everything passed."""
    ok_all = True
    for name, fn in CHECKS:
        ok, detail = fn()
        ok_all &= ok
        if not quiet:
            print(f"{'ok  ' if ok else 'FAIL'} {name}: {detail}")
    return ok_all
