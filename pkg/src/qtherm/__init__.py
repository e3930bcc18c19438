"""Nonextensive thermostatistics toolkit.

Rescaling group of the nonadditivity index, q-deformed algebra with its
generalized distributive laws, entropy functionals with escort
constraints, and self-consistent MaxEnt solvers built on trinomial root
finding.
"""

from .deformation import (
    additive_dual,
    compose,
    fluctuation_q,
    heat_bath_q,
    multiplicative_dual,
    rescale_bath,
    rescaled_fluctuation,
    transform,
)
from .entropy import (
    PartitionSum,
    as_distribution,
    avg_hybrid,
    escort,
    escort_mean,
    hartley_moments,
    hybrid,
    partition_sum,
    product_distribution,
    quasi_additivity_alpha,
    quasi_additivity_check,
    renyi,
    shannon,
    tsallis,
)
from .errors import (
    DivergentSeriesError,
    DomainError,
    DualityRangeWarning,
    NonConvergenceError,
    NoRealRootError,
    ParseError,
    QThermError,
    RenormalizationWarning,
)
from .maxent import (
    MaxEntSolution,
    as_spectrum,
    partition_bound_check,
    solve_maxent,
    solve_maxent_renyi,
    solve_maxent_shannon_limit,
)
from .qalgebra import (
    dist_add,
    dist_div,
    dist_mul,
    dist_sub,
    exp_scaling,
    log_scaling,
    q_add,
    q_div,
    q_exp,
    q_log,
    q_mul,
    q_sub,
)
from .trinomial import (
    lambert_w,
    series_coefficient,
    series_radius,
    solve_trinomial,
    trinomial_b,
    trinomial_series,
)

__version__ = "0.1.0"

__all__ = [
    "MaxEntSolution",
    "PartitionSum",
    "QThermError",
    "DomainError",
    "NoRealRootError",
    "DivergentSeriesError",
    "NonConvergenceError",
    "ParseError",
    "RenormalizationWarning",
    "DualityRangeWarning",
    "additive_dual",
    "as_distribution",
    "as_spectrum",
    "avg_hybrid",
    "compose",
    "dist_add",
    "dist_div",
    "dist_mul",
    "dist_sub",
    "escort",
    "escort_mean",
    "exp_scaling",
    "fluctuation_q",
    "hartley_moments",
    "heat_bath_q",
    "hybrid",
    "lambert_w",
    "log_scaling",
    "multiplicative_dual",
    "partition_bound_check",
    "partition_sum",
    "product_distribution",
    "q_add",
    "q_div",
    "q_exp",
    "q_log",
    "q_mul",
    "q_sub",
    "quasi_additivity_alpha",
    "quasi_additivity_check",
    "renyi",
    "rescale_bath",
    "rescaled_fluctuation",
    "series_coefficient",
    "series_radius",
    "shannon",
    "solve_maxent",
    "solve_maxent_renyi",
    "solve_maxent_shannon_limit",
    "solve_trinomial",
    "transform",
    "trinomial_b",
    "trinomial_series",
]
