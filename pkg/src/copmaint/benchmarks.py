"""Build optimizer inputs for the benchmark-table configurations and
recompute table rows."""

from __future__ import annotations

from .copulas import CopulaFamily, CopulaModel
from .cost_models import CostParams
from .lifetimes import LifetimeModel
from .optimizers import PolicyResult, optimize_age, optimize_periodic
from .reference_tables import DEVIATION_SCENARIOS, TableSpec
from .systems import SystemSpec, Topology


def table_system(spec: TableSpec, sweep_value) -> SystemSpec:
    n = int(sweep_value) if spec.sweep == "n" else spec.n
    theta = spec.theta if spec.sweep == "n" else float(sweep_value)
    comp = LifetimeModel.weibull(spec.rate, spec.shape)
    fam = (CopulaFamily.INDEPENDENCE if theta == 1.0
           else CopulaFamily.GUMBEL_HOUGAARD)
    # theta=1 Gumbel-Hougaard IS independence; either model gives identical
    # numbers, independence just skips the frailty machinery.
    copula = (CopulaModel.independence(n) if fam is CopulaFamily.INDEPENDENCE
              else CopulaModel(fam, theta, n))
    return SystemSpec(Topology(spec.topology), (comp,) * n, copula)


def table_costs(spec: TableSpec, sweep_value, scenario_index: int) -> CostParams:
    n = int(sweep_value) if spec.sweep == "n" else spec.n
    c_d1, c_d2 = DEVIATION_SCENARIOS[scenario_index]
    return CostParams.uniform(spec.c_f, spec.c_p_each, n, c_d1, c_d2)


def compute_cell(spec: TableSpec, sweep_value, scenario_index: int) -> PolicyResult:
    """Re-optimize one (row, scenario) cell of a benchmark table."""
    system = table_system(spec, sweep_value)
    costs = table_costs(spec, sweep_value, scenario_index)
    deviation = scenario_index > 0
    if spec.policy == "age":
        return optimize_age(system, costs, deviation)
    return optimize_periodic(system, costs, spec.tau, deviation)
