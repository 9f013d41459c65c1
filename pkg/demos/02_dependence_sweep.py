"""How much does dependence between components matter?

Sweep the Gumbel-Hougaard parameter theta for a four-component system and
watch the optimal policy move.  For a series system, stronger dependence is
good news: components tend to fail together, the system behaves more like a
single component, and replacements can be scheduled later at lower cost.
For a parallel system the effect reverses -- redundancy only helps when the
spares fail independently.
"""

import copmaint as cm

component = cm.LifetimeModel.weibull(0.4, 2.5)
costs = cm.CostParams.uniform(100.0, 5.0, 4)

print(f"{'theta':>6} | {'series T*':>9} {'series C':>9} | {'parallel T*':>11} {'parallel C':>10}")
print("-" * 58)
for theta in (1.0, 2.0, 4.0, 6.5, 15.0):
    copula = (cm.CopulaModel.independence(4) if theta == 1.0
              else cm.CopulaModel(cm.CopulaFamily.GUMBEL_HOUGAARD, theta, 4))
    row = []
    for topo in (cm.Topology.SERIES, cm.Topology.PARALLEL):
        system = cm.SystemSpec(topo, (component,) * 4, copula)
        r = cm.optimize_age(system, costs)
        row += [r.optimum, r.cost_rate]
    print(f"{theta:>6} | {row[0]:>9.4f} {row[1]:>9.4f} | {row[2]:>11.4f} {row[3]:>10.4f}")

print("""
Reading the table: as theta grows the series column gets cheaper and the
parallel column gets more expensive, meeting in the middle -- at perfect
dependence both topologies degenerate to a single component.  Ignoring
dependence (fitting theta=1 when the truth is theta=4) would misprice the
series policy by roughly a third.
""")
