"""Periodic replacement: preventive maintenance on a lattice.

When replacements can only happen at inspection epochs tau, 2*tau, ...,
the decision variable is the integer number of periods K.  The periodic
cost functional is exactly the age functional restricted to the lattice,
so the optimal K*tau always lands within one period of the continuous T*
and can never beat it.
"""

import copmaint as cm

component = cm.LifetimeModel.weibull(0.4, 2.5)
copula = cm.CopulaModel(cm.CopulaFamily.GUMBEL_HOUGAARD, 2.0, 2)
system = cm.SystemSpec(cm.Topology.SERIES, (component,) * 2, copula)
costs = cm.CostParams.uniform(100.0, 5.0, 2)

age = cm.optimize_age(system, costs)
print(f"continuous benchmark: T* = {age.optimum:.4f}, cost = {age.cost_rate:.4f}\n")

print(f"{'tau':>6} {'K*':>4} {'K*tau':>7} {'cost':>9} {'penalty vs age':>15}")
for tau in (0.4, 0.2, 0.1, 0.05, 0.01):
    r = cm.optimize_periodic(system, costs, tau)
    penalty = r.cost_rate - age.cost_rate
    print(f"{tau:>6} {r.optimum:>4} {r.optimum * tau:>7.2f} {r.cost_rate:>9.4f} {penalty:>15.6f}")

print("""
A finer inspection lattice converges to the continuous optimum; even the
coarse tau=0.4 lattice costs only a fraction of a percent more.  The scan
stops at the first K where the cost stops decreasing, which the monotone
stopping inequality guarantees is the global integer optimum.
""")

# the full cost profile around K* for one lattice
tau = 0.1
print(f"cost profile at tau={tau}:")
for K in range(5, 12):
    marker = "  <-- K*" if K == cm.optimize_periodic(system, costs, tau).optimum else ""
    print(f"  K={K:>2}: {cm.periodic_cost_rate(system, costs, K, tau):.4f}{marker}")
