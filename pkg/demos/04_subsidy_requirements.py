"""Required subsidies to bridge the hydrogen-gas cost gap.

Walks cost gaps with and without carbon pricing, finds the parity year, and
accumulates annual subsidy requirements for the 2030 project pipeline
(cohorts keep their build-year LCOH over a 15-year payback).
"""

from h2gap import (
    ParamSet,
    cost_gap,
    cumulative_subsidies,
    demand_supported_additions,
    fixtures,
    parity_year,
)

pipe = fixtures.builtin_pipeline()
extended = fixtures.median_extended_pipeline(2045)

central = ParamSet.builtin("central")
print("cost gap to natural gas, central estimate ($/MWh):")
print(f"{'year':<6}{'carbon off':>12}{'carbon on':>12}")
for year in (2024, 2030, 2035, 2040, 2045):
    print(f"{year:<6}{cost_gap(year, extended, central, False):>12.1f}"
          f"{cost_gap(year, extended, central, True):>12.1f}")
print(f"parity (carbon on): {parity_year(extended, central, True, 2045)}; "
      f"carbon off: {parity_year(extended, central, False, 2045) or 'none by 2045'}")

supported = demand_supported_additions(central, pipe)
traj = pipe.with_supported(supported)
print(f"\ndemand-side policy carries {sum(supported.values()):.1f} GW of the "
      f"{pipe.total_additions():.1f} GW pipeline")

for carbon in (False, True):
    schedule = cumulative_subsidies(traj, central, carbon, 2045)
    peak_year, peak = schedule.peak()
    label = "with carbon pricing" if carbon else "without carbon pricing"
    print(f"\nsubsidies {label}:")
    print(f"  peak {peak:.1f} $bn/yr in {peak_year}; "
          f"cumulative through 2045: {schedule.total_busd / 1000:.2f} $tn")
    for year in (2026, 2030, 2035, 2040, 2045):
        print(f"  {year}: {schedule.annual(year):>7.1f} $bn/yr, "
              f"cumulative {schedule.cumulative(year):>8.1f} $bn")

print("\nsensitivity bracket (cumulative $tn through 2045):")
for scenario in ("progressive", "central", "conservative"):
    p = ParamSet.builtin(scenario)
    sup = demand_supported_additions(p, pipe)
    t = pipe.with_supported(sup)
    off = cumulative_subsidies(t, p, False, 2045).total_busd / 1000
    on = cumulative_subsidies(t, p, True, 2045).total_busd / 1000
    print(f"  {scenario:<13} {off:>6.2f} (carbon off)  {on:>6.2f} (carbon on)")

# continuing along the scenario median after 2030 needs far more support
ext_traj = fixtures.median_extended_pipeline(2045).with_supported(supported)
beyond = cumulative_subsidies(ext_traj, central, False, 2045)
print(f"\nfollowing the scenario median after 2030 (carbon off): "
      f"{beyond.total_busd / 1000:.2f} $tn cumulative by 2045")
