"""Compact-support symmetric smoothing kernels on [-1, 1].

Each kernel carries its analytically computed moment constants: ``alpha``,
the integral of K^2 (roughness), and ``beta``, the second moment of K.  Both
enter the asymptotic error formulas.  Bandwidth carries all scaling, so the
constants are directly comparable across kernels.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import _core

EPANECHNIKOV = 0
BIWEIGHT = 1
TRIWEIGHT = 2


@dataclass(frozen=True)
class KernelSpec:
    """A named kernel with evaluation, derivative, and moment constants."""

    name: str
    kind: int
    alpha: float
    beta: float
    halfwidth: float = 1.0

    @property
    def support(self):
        return (-self.halfwidth, self.halfwidth)

    def __call__(self, u):
        return _core.kernel_eval(self.kind, u)

    def deriv(self, u):
        return _core.kernel_deriv(self.kind, u)


# alpha = int K^2, beta = int u^2 K, both over [-1, 1], exact rationals:
#   epanechnikov (3/4)(1-u^2):     alpha 3/5,     beta 1/5
#   biweight    (15/16)(1-u^2)^2:  alpha 5/7,     beta 1/7
#   triweight   (35/32)(1-u^2)^3:  alpha 350/429, beta 1/9
_BUILTINS = {
    "epanechnikov": KernelSpec("epanechnikov", EPANECHNIKOV,
                               float(Fraction(3, 5)), float(Fraction(1, 5))),
    "biweight": KernelSpec("biweight", BIWEIGHT,
                           float(Fraction(5, 7)), float(Fraction(1, 7))),
    "triweight": KernelSpec("triweight", TRIWEIGHT,
                            float(Fraction(350, 429)), float(Fraction(1, 9))),
}


def builtin_kernel(name):
    """Look up a built-in kernel by name."""
    try:
        return _BUILTINS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown kernel {name!r}; known: {sorted(_BUILTINS)}") from None


def kernel_moments(spec):
    """The stored (alpha, beta) moment constants of a kernel."""
    return (spec.alpha, spec.beta)
