"""Learning-curve investment costs and the levelised cost of hydrogen.

Shows how electrolyser investment costs fall as the announced pipeline is
built out (and the scenario median continues it after 2030), and decomposes
the LCOH into electricity, stack, balance-of-plant and transport/storage.
"""

from h2gap import ParamSet, fixtures, investment_costs, lcoh

params = ParamSet.builtin("central")
trajectory = fixtures.median_extended_pipeline(2045)

print("cumulative capacity and investment costs (central):")
print(f"{'year':<6}{'capacity GW':>12}{'stack $/kW':>12}{'BoP $/kW':>10}"
      f"{'total $/kW':>12}{'stack share':>13}")
for year in (2023, 2024, 2026, 2028, 2030, 2035, 2040, 2045):
    inv = investment_costs(year, trajectory, params)
    print(f"{year:<6}{inv.cumulative_capacity_gw:>12.1f}{inv.stack:>12.1f}"
          f"{inv.balance_of_plant:>10.1f}{inv.total:>12.1f}{inv.stack_share:>13.1%}")

print("\nLCOH decomposition ($/MWh of hydrogen):")
print(f"{'year':<6}{'electricity':>12}{'stack':>8}{'BoP':>8}{'T&S':>8}{'total':>8}")
for year in (2024, 2030, 2035, 2040, 2045):
    b = lcoh(year, trajectory, params)
    print(f"{year:<6}{b.electricity:>12.1f}{b.stack_capital:>8.1f}"
          f"{b.bop_capital:>8.1f}{b.transport_storage:>8.1f}{b.total:>8.1f}")

print("\nthe three bundled parameter sets at 2030:")
for scenario in ("progressive", "central", "conservative"):
    p = ParamSet.builtin(scenario)
    print(f"  {scenario:<13} LCOH {lcoh(2030, trajectory, p).total:>6.1f} $/MWh")
