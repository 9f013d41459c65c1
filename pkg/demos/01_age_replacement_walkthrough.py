"""Walk through a single age-replacement optimization, end to end.

Two Weibull components in series, tied together by a Gumbel-Hougaard copula.
We build the system, look at its survival curve, sweep the expected cost
rate by hand, and then let the optimizer find the stationary point and
justify it with the uniqueness condition checks.
"""

import numpy as np

import copmaint as cm

# ---------------------------------------------------------------------------
# The system: two identical Weibull(lam=0.4, shape=2.5) components whose
# lifetimes are positively dependent (Kendall's tau = 1 - 1/theta = 0.5).
# ---------------------------------------------------------------------------
component = cm.LifetimeModel.weibull(0.4, 2.5)
copula = cm.CopulaModel(cm.CopulaFamily.GUMBEL_HOUGAARD, theta=2.0, n=2)
system = cm.SystemSpec(cm.Topology.SERIES, (component, component), copula)

print("system MTTF:", round(cm.mttf(system), 4))
for t in (0.5, 1.0, 1.5, 2.0):
    print(f"  S({t}) = {cm.system_survival(system, t):.4f}")

# ---------------------------------------------------------------------------
# Costs: a failure costs 100, planned replacement costs 5 per component.
# C(T) = expected cycle cost / expected cycle length (renewal-reward).
# ---------------------------------------------------------------------------
costs = cm.CostParams.uniform(c_f=100.0, c_p_each=5.0, n=2)

print("\ncost-rate sweep:")
for T in np.arange(0.4, 1.45, 0.2):
    print(f"  C({T:.1f}) = {cm.age_cost_rate(system, costs, T):8.4f}")

# ---------------------------------------------------------------------------
# The optimizer brackets the first-order-condition residual and refines with
# Brent; the attached report says *why* the optimum is unique: components
# are IFR, the copula diagnostic is monotone, and the hazard-limit threshold
# holds (trivially here, since the Weibull hazard grows without bound).
# ---------------------------------------------------------------------------
result = cm.optimize_age(system, costs)
print(f"\noptimal T*   = {result.optimum:.4f}")
print(f"minimal cost = {result.cost_rate:.4f}")
print(f"uniqueness guaranteed: {result.uniqueness_guaranteed}")
print(f"threshold status:      {result.condition_report.threshold_satisfied.value}")

# ---------------------------------------------------------------------------
# Deviation costs: charge 2/unit-time for replacing after a failure has
# already happened (downtime) and 1/unit-time for replacing a system that
# would have lived longer (wasted life).  Planning later becomes attractive.
# ---------------------------------------------------------------------------
dev_costs = cm.CostParams.uniform(100.0, 5.0, 2, c_d1=2.0, c_d2=1.0)
dev = cm.optimize_age(system, dev_costs, deviation=True)
print(f"\nwith deviation costs: T* = {dev.optimum:.4f}, cost = {dev.cost_rate:.4f}")
print("deviation costs push T* up:", dev.optimum > result.optimum)
