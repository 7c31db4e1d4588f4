"""Closed-form asymptotic error quantities for the kernel hazard estimator.

The pointwise squared bias and variance are

    mu2(x)    = [ (b^2 / 2) * h''(x) * beta(K) ]^2
    sigma2(x) = h(x) * alpha(K) / [ n * b * (1 - F(x)) * (1 - G(x)) ],

their integral over the evaluation domain is the asymptotic MISE, and the
weighted variant divides the integrand by 1 + h'(x)^2.  The weighted integral
is the asymptotic value of the expected squared one-directional visual error;
twice it is the target for the symmetrised quadratic criterion.
"""

import math
from dataclasses import dataclass

from scipy.optimize import brentq

_SURVIVAL_FLOOR = 1e-12


@dataclass(frozen=True)
class AsymptoticSpec:
    """Everything the asymptotic formulas need, with a guarded domain."""

    failure: object
    censor: object
    kernel: object
    n: int
    b: float
    x_lo: float
    tau: float

    def __post_init__(self):
        if self.n < 1 or not self.b > 0:
            raise ValueError("need n >= 1 and b > 0")
        if not 0 <= self.x_lo < self.tau:
            raise ValueError("need 0 <= x_lo < tau")
        if _joint_survival(self.failure, self.censor, self.tau) <= _SURVIVAL_FLOOR:
            raise ValueError("joint survival vanishes at tau; shrink the domain")


def _joint_survival(failure, censor, x):
    return (1.0 - failure.cdf(x)) * (1.0 - censor.cdf(x))


def mu2(spec, x):
    """Pointwise squared bias term."""
    half_b2 = spec.b * spec.b / 2.0
    v = half_b2 * spec.failure.hazard_d2(x) * spec.kernel.beta
    return v * v


def sigma2(spec, x):
    """Pointwise variance term; fails where the at-risk probability vanishes."""
    s = _joint_survival(spec.failure, spec.censor, x)
    if s <= _SURVIVAL_FLOOR:
        raise ValueError(f"joint survival underflows at x = {x}")
    return spec.failure.hazard(x) * spec.kernel.alpha / (spec.n * spec.b * s)


def bridge_weight(failure, x):
    """Slope weight 1 / (1 + h'(x)^2) linking visual and vertical error."""
    d1 = failure.hazard_d1(x)
    return 1.0 / (1.0 + d1 * d1)


def dn_normalizer(failure, x0, est_value, true_value):
    """Slope-normalised vertical gap |est - true| / sqrt(1 + h'(x0)^2).

    The deterministic center that the random point-to-graph distances at x0
    approach, at rate n^(-2/5).
    """
    d1 = failure.hazard_d1(x0)
    return abs(est_value - true_value) / math.sqrt(1.0 + d1 * d1)


def adaptive_simpson(f, a, b, abs_tol=1e-9, max_depth=14):
    """Adaptive Simpson quadrature with Richardson correction.

    Recursion is capped at ``max_depth`` halvings (2^max_depth subintervals).
    """
    if not a < b:
        raise ValueError("need a < b")

    def simpson(fa, fm, fb, h):
        return h / 6.0 * (fa + 4.0 * fm + fb)

    def recurse(lo, hi, flo, fmid, fhi, whole, tol, depth):
        mid = 0.5 * (lo + hi)
        lm = 0.5 * (lo + mid)
        rm = 0.5 * (mid + hi)
        flm = f(lm)
        frm = f(rm)
        left = simpson(flo, flm, fmid, mid - lo)
        right = simpson(fmid, frm, fhi, hi - mid)
        err = (left + right - whole) / 15.0
        if depth >= max_depth or abs(err) <= tol:
            return left + right + err
        return (recurse(lo, mid, flo, flm, fmid, left, tol / 2.0, depth + 1)
                + recurse(mid, hi, fmid, frm, fhi, right, tol / 2.0, depth + 1))

    fa, fb_ = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    if not all(math.isfinite(v) for v in (fa, fm, fb_)):
        raise ValueError("non-finite integrand")
    return recurse(a, b, fa, fm, fb_, simpson(fa, fm, fb_, b - a), abs_tol, 0)


def mise_asymptotic(spec, abs_tol=1e-9):
    """Integrated squared bias plus variance over [x_lo, tau]."""
    return adaptive_simpson(lambda x: mu2(spec, x) + sigma2(spec, x),
                            spec.x_lo, spec.tau, abs_tol=abs_tol)


def weighted_mise_asymptotic(spec, abs_tol=1e-9):
    """Same integral with the slope weight; asymptotic expected squared
    one-directional visual error."""
    return adaptive_simpson(
        lambda x: bridge_weight(spec.failure, x) * (mu2(spec, x) + sigma2(spec, x)),
        spec.x_lo, spec.tau, abs_tol=abs_tol)


def default_tau(failure, censor, level=0.05):
    """Largest usable time: where the joint survival (1-F)(1-G) hits ``level``.

    The 1 - level quantile of the observed-time distribution; beyond it the
    variance term blows up as the at-risk set empties.
    """
    if not 0.0 < level < 1.0:
        raise ValueError("level must be in (0, 1)")

    def g(x):
        return _joint_survival(failure, censor, x) - level

    hi = 1.0
    while g(hi) > 0.0:
        hi *= 2.0
        if hi > 1e12:
            raise ValueError("survival never falls to the requested level")
    return brentq(g, 0.0, hi, xtol=1e-12, rtol=8.9e-16)
