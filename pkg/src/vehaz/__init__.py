"""Kernel hazard estimation from censored data, visual-error curve criteria,
and a Monte Carlo harness tying their expectations to weighted integrated
squared error."""

from ._core import backend_name
from .asymptotics import (AsymptoticSpec, adaptive_simpson, bridge_weight,
                          default_tau, dn_normalizer, mise_asymptotic, mu2,
                          sigma2, weighted_mise_asymptotic)
from .curvedist import (CurveGraph, ErrorReport, compare_graphs, lp,
                        point_to_graph, se, ve)
from .estimator import (Bandwidth, comparison_grid, estimate, estimate_d1,
                        estimate_on_grid)
from .harness import (AggregateResult, ConfigError, ExperimentConfig,
                      ScenarioReport, emit, run_experiment, scenario_bimodal)
from .kernels import KernelSpec, builtin_kernel, kernel_moments
from .models import (BimodalHazard, Exponential, LifetimeModel, NoCensoring,
                     Uniform, Weibull, catalog, resolve_model)
from .sampling import CensoredSample, generate, inverse_transform, replicate_seed

__version__ = "0.1.0"

__all__ = [
    "AggregateResult", "AsymptoticSpec", "Bandwidth", "BimodalHazard",
    "CensoredSample", "ConfigError", "CurveGraph", "ErrorReport",
    "ExperimentConfig", "Exponential", "KernelSpec", "LifetimeModel",
    "NoCensoring", "ScenarioReport", "Uniform", "Weibull",
    "adaptive_simpson", "backend_name", "bridge_weight", "builtin_kernel",
    "catalog", "compare_graphs", "comparison_grid", "default_tau",
    "dn_normalizer", "emit", "estimate", "estimate_d1", "estimate_on_grid",
    "generate", "inverse_transform", "kernel_moments", "lp",
    "mise_asymptotic", "mu2", "point_to_graph", "replicate_seed",
    "resolve_model", "run_experiment", "scenario_bimodal", "se", "sigma2",
    "ve", "weighted_mise_asymptotic",
]
