"""Optimal preventive replacement for series/parallel systems whose
component lifetimes are dependent through a copula.

The library computes long-run expected cost rates under age replacement
(replace at failure or at age T, whichever comes first) and periodic
replacement (replace at failure or at the K-th inspection epoch K*tau),
optionally charging deviation costs for early/late replacement, and finds
the optimal T* and K* together with the existence/uniqueness condition
checks that justify them.
"""

from .copulas import (CopulaFamily, CopulaModel, MonotonicityReport, Verdict,
                      alpha_i, check_alpha_decreasing, check_eta_increasing,
                      copula_cdf, eta_i, partial_derivative)
from .cost_models import (CostParams, PolicyKind, PolicyQuery, age_cost_rate,
                          deviation_expected_time, periodic_cost_rate)
from .errors import (CapabilityError, CopmaintError, DomainError,
                     NoFiniteOptimumError, NoInteriorOptimumError,
                     NumericsError, ParameterError, RegionError)
from .lifetimes import Family, LifetimeModel
from .mc_oracle import SimConfig, SimEstimate, estimate_cost_rate
from .optimizers import (ConditionReport, PolicyResult, ThresholdStatus,
                         check_conditions, first_order_residual, optimize_age,
                         optimize_periodic)
from .scenario import (Scenario, ScenarioError, dump_scenario, load_scenario,
                       parse_scenario)
from .systems import (SystemSpec, Topology, cumulative_survival, hazard_limit,
                      mttf, system_cdf, system_hazard, system_survival)

__version__ = "0.1.0"

__all__ = [
    "CopulaFamily", "CopulaModel", "MonotonicityReport", "Verdict",
    "alpha_i", "check_alpha_decreasing", "check_eta_increasing",
    "copula_cdf", "eta_i", "partial_derivative",
    "CostParams", "PolicyKind", "PolicyQuery", "age_cost_rate",
    "deviation_expected_time", "periodic_cost_rate",
    "CapabilityError", "CopmaintError", "DomainError",
    "NoFiniteOptimumError", "NoInteriorOptimumError", "NumericsError",
    "ParameterError", "RegionError",
    "Family", "LifetimeModel",
    "SimConfig", "SimEstimate", "estimate_cost_rate",
    "ConditionReport", "PolicyResult", "ThresholdStatus",
    "check_conditions", "first_order_residual", "optimize_age",
    "optimize_periodic",
    "Scenario", "ScenarioError", "dump_scenario", "load_scenario",
    "parse_scenario",
    "SystemSpec", "Topology", "cumulative_survival", "hazard_limit", "mttf",
    "system_cdf", "system_hazard", "system_survival",
]
