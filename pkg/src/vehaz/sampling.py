"""Censored-sample generation under random censorship.

Observed times are the minimum of a failure time and an independent censoring
time; the indicator records which one was seen.  Samples are kept in order-
statistic form because the estimator weights depend on ranks.

RNG identity, fixed across the package: Philox (counter-based) seeded through
``numpy.random.SeedSequence``.  Replicate streams come from
``SeedSequence(master_seed, spawn_key=(n, replicate))``, which is reproducible
and independent of execution order.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class CensoredSample:
    """Sorted observed times with aligned censoring indicators.

    ``x`` ascending; ``delta`` is 1 where the failure was observed, 0 where
    censored.  Ties in ``x`` place failures before censorings (the rank
    weights make the convention observable).
    """

    x: np.ndarray
    delta: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        delta = np.asarray(self.delta, dtype=np.int64)
        if x.ndim != 1 or x.shape != delta.shape or x.size < 1:
            raise ValueError("x and delta must be equal-length 1-d arrays, n >= 1")
        if np.any(x < 0) or not np.all(np.isfinite(x)):
            raise ValueError("observed times must be finite and nonnegative")
        if np.any(np.diff(x) < 0):
            raise ValueError("x must be sorted ascending")
        if not np.isin(delta, (0, 1)).all():
            raise ValueError("delta entries must be 0 or 1")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "delta", delta)

    @property
    def n(self):
        return self.x.shape[0]

    def weights(self):
        """Rank weights delta_(i) / (n - i + 1) in sorted order."""
        n = self.n
        return self.delta / (n - np.arange(n, dtype=float))

    @classmethod
    def from_unsorted(cls, x, delta):
        """Sort observations, breaking time ties with failures first."""
        x = np.asarray(x, dtype=float)
        delta = np.asarray(delta, dtype=np.int64)
        order = np.lexsort((1 - delta, x))
        return cls(x[order], delta[order])


def generate(failure, censor, n, seed):
    """Draw n independent (failure, censoring) pairs and censor them.

    Deterministic for a fixed seed: the first n uniforms drive the failure
    times, the next n the censoring times, both via inverse transform.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))
    t = failure.ppf(rng.random(n))
    c = censor.ppf(rng.random(n))
    x = np.minimum(t, c)
    delta = (t <= c).astype(np.int64)
    return CensoredSample.from_unsorted(x, delta)


def inverse_transform(model, u):
    """Quantile function cdf^{-1}(u) of a model, u strictly inside (0, 1)."""
    ua = np.asarray(u, dtype=float)
    if np.any(ua <= 0.0) or np.any(ua >= 1.0):
        raise ValueError("u must lie strictly inside (0, 1)")
    return model.ppf(u)


def replicate_seed(master_seed, n, replicate):
    """64-bit stream seed for one (sample size, replicate) cell.

    First word of ``SeedSequence(master_seed, spawn_key=(n, replicate))``;
    distinct cells get statistically independent Philox streams.
    """
    ss = np.random.SeedSequence(master_seed, spawn_key=(int(n), int(replicate)))
    return int(ss.generate_state(1, np.uint64)[0])
