"""Invert the subsidy model: what can an announced budget actually buy?

Given globally announced supply-side subsidies, find the electrolysis
capacity they can carry over a full payback period, next to what implemented
demand-side policy already supports.
"""

from h2gap import ParamSet, capacity_supported_by_budget, fixtures

pipe = fixtures.builtin_pipeline()
budget = 308.0  # announced supply-side subsidies, $bn

print(f"announced pipeline 2024-2030: {pipe.total_additions():.1f} GW")
print(f"announced subsidy budget:     {budget:.0f} $bn\n")

for scenario in ("progressive", "central", "conservative"):
    params = ParamSet.builtin(scenario)
    res = capacity_supported_by_budget(budget, params, carbon_pricing=False,
                                       pipeline=pipe)
    share = res.subsidy_supported_gw / pipe.total_additions()
    print(f"{scenario:<13} subsidy-funded {res.subsidy_supported_gw:>6.1f} GW "
          f"({share:.0%} of pipeline), demand-policy "
          f"{res.demand_supported_gw:>6.1f} GW")

central = ParamSet.builtin("central")
print("\nfunded build years (central, chronological fill):")
res = capacity_supported_by_budget(budget, central, False, pipe)
for year, gw in res.per_year_gw.items():
    marker = "#" * int(round(gw))
    print(f"  {year}: {gw:>6.2f} GW {marker}")
print(f"  spent {res.spent_busd:.1f} of {res.budget_busd:.0f} $bn")

uniform = capacity_supported_by_budget(budget, central, False, pipe,
                                       allocation="uniform")
print(f"\nuniform scaling instead of chronological fill: "
      f"{uniform.subsidy_supported_gw:.1f} GW "
      "(cheaper late-decade capacity is reached immediately)")

saturated = capacity_supported_by_budget(5000.0, central, False, pipe)
print(f"\na 5000 $bn budget saturates the pipeline: "
      f"{saturated.subsidy_supported_gw:.1f} GW funded, "
      f"saturated={saturated.saturated}")
