import dataclasses
import math

import pytest

from h2gap import (
    CapacityTrajectory,
    ParamSet,
    TimeAnchoredSeries,
    annuity_factor,
    investment_costs,
    lcoh,
)


# ---------------------------------------------------------------------------
# TimeAnchoredSeries
# ---------------------------------------------------------------------------

def test_linear_interpolation_between_anchors():
    elec = TimeAnchoredSeries({2024: 60.0, 2030: 50.0, 2045: 35.0})
    assert elec.at(2027) == pytest.approx(55.0)


def test_anchor_years_are_exact():
    s = TimeAnchoredSeries({2024: 60.0, 2030: 50.0, 2045: 35.0})
    for year, value in ((2024, 60.0), (2030, 50.0), (2045, 35.0)):
        assert s.at(year) == value


def test_co2_path_interpolation():
    co2 = TimeAnchoredSeries({2024: 117, 2030: 149, 2035: 192, 2040: 246, 2045: 316})
    assert co2.at(2043) == pytest.approx(288.0)  # 246 + 3/5 * 70


def test_constant_after_last_anchor():
    s = TimeAnchoredSeries({2024: 19.0, 2030: 22.0})
    assert s.at(2035) == 22.0
    assert s.at(2100) == 22.0


def test_error_before_first_anchor():
    s = TimeAnchoredSeries({2024: 19.0, 2030: 22.0})
    with pytest.raises(ValueError):
        s.at(2023)


def test_single_anchor_is_constant_from_that_year():
    s = TimeAnchoredSeries({2024: 15.0})
    assert s.at(2024) == 15.0
    assert s.at(2050) == 15.0


def test_scaled_series():
    s = TimeAnchoredSeries({2024: 100.0, 2030: 200.0}).scaled(1.2)
    assert s.at(2024) == pytest.approx(120.0)
    assert s.at(2030) == pytest.approx(240.0)


# ---------------------------------------------------------------------------
# Annuity factor
# ---------------------------------------------------------------------------

def test_annuity_factor_values():
    assert annuity_factor(0.08, 15) == pytest.approx(0.11683, abs=1e-5)
    assert annuity_factor(0.08, 10) == pytest.approx(0.14903, abs=1e-5)


def test_annuity_zero_rate_limit():
    assert annuity_factor(0.0, 10) == pytest.approx(0.1, rel=1e-12)
    assert annuity_factor(0.0, 15) == pytest.approx(1.0 / 15.0, rel=1e-12)


def test_annuity_domain_errors():
    with pytest.raises(ValueError):
        annuity_factor(0.08, 0.5)
    with pytest.raises(ValueError):
        annuity_factor(-0.01, 10)


# ---------------------------------------------------------------------------
# CapacityTrajectory
# ---------------------------------------------------------------------------

def test_cumulative_is_end_of_year():
    traj = CapacityTrajectory(2023, 1.86, {2024: 10.0, 2025: 20.0})
    assert traj.cumulative(2023) == pytest.approx(1.86)
    assert traj.cumulative(2024) == pytest.approx(11.86)
    assert traj.cumulative(2025) == pytest.approx(31.86)
    assert traj.cumulative(2030) == pytest.approx(31.86)  # flat after last addition


def test_trajectory_validation():
    with pytest.raises(ValueError):
        CapacityTrajectory(2023, 1.86, {2024: -1.0})
    with pytest.raises(ValueError):
        CapacityTrajectory(2023, 1.86, {2023: 5.0})   # not after base year
    with pytest.raises(ValueError):
        CapacityTrajectory(2023, 0.0, {2024: 5.0})
    with pytest.raises(ValueError):
        CapacityTrajectory(2023, 1.86, {2024: 5.0}, supported_gw={2024: 6.0})
    traj = CapacityTrajectory(2023, 1.86, {2024: 5.0})
    with pytest.raises(ValueError):
        traj.cumulative(2022)


def test_with_supported_and_net_additions():
    traj = CapacityTrajectory(2023, 1.86, {2024: 10.0, 2025: 20.0})
    traj2 = traj.with_supported({2024: 4.0, 2025: 6.0})
    assert traj2.net_addition(2024) == pytest.approx(6.0)
    assert traj2.net_addition(2025) == pytest.approx(14.0)
    assert traj.net_addition(2024) == pytest.approx(10.0)  # original untouched


def test_extended_rejects_overlap():
    traj = CapacityTrajectory(2023, 1.86, {2024: 10.0})
    with pytest.raises(ValueError):
        traj.extended({2024: 1.0})
    ext = traj.extended({2025: 2.0})
    assert ext.cumulative(2025) == pytest.approx(13.86)


# ---------------------------------------------------------------------------
# ParamSet
# ---------------------------------------------------------------------------

def test_builtin_central_matches_published_central_estimates(central):
    assert central.investment_2023 == 1850.0
    assert central.stack_share_2023 == 0.25
    assert central.learning_rate_stack == 0.18
    assert central.learning_rate_bop == 0.10
    assert central.payback_period == 15.0
    assert central.full_load_hours == 3750.0
    assert central.cost_of_capital == 0.08
    assert central.fom_share == 0.03
    assert central.transport_storage == 20.0
    assert central.emission_intensity == 0.265
    assert central.efficiency.at(2024) == 0.69
    assert central.efficiency.at(2045) == 0.76
    assert central.stack_lifetime.at(2024) == 10.0
    assert central.stack_lifetime.at(2030) == 15.0
    assert central.gas_price.at(2024) == 19.0
    assert central.gas_price.at(2030) == 22.0


def test_sensitivity_sets_inside_published_ranges(central, progressive, conservative):
    ranges = {
        "investment_2023": (1700.0, 2000.0),
        "stack_share_2023": (0.14, 0.29),
        "learning_rate_stack": (0.15, 0.20),
        "learning_rate_bop": (0.05, 0.12),
        "full_load_hours": (3250.0, 4250.0),
        "cost_of_capital": (0.06, 0.10),
        "fom_share": (0.015, 0.05),
    }
    for p in (central, progressive, conservative):
        for name, (lo, hi) in ranges.items():
            assert lo <= getattr(p, name) <= hi, (p.scenario_id, name)
    # carbon price sensitivity is +-20% of the central path
    assert progressive.co2_price.at(2030) == pytest.approx(1.2 * 149.0)
    assert conservative.co2_price.at(2030) == pytest.approx(0.8 * 149.0)


def test_from_dict_missing_key():
    with pytest.raises(ValueError, match="missing key"):
        ParamSet.from_dict({"scenario_id": "x"})


# ---------------------------------------------------------------------------
# Learning-curve investment costs
# ---------------------------------------------------------------------------

def test_base_year_split(pipeline_traj, central):
    inv = investment_costs(2023, pipeline_traj, central)
    assert inv.stack == pytest.approx(462.5)
    assert inv.balance_of_plant == pytest.approx(1387.5)
    assert inv.total == pytest.approx(1850.0)


def test_one_doubling_applies_learning_rates_exactly(central):
    traj = CapacityTrajectory(2023, 1.86, {2024: 1.86})  # exactly one doubling
    inv = investment_costs(2024, traj, central)
    assert inv.stack == pytest.approx(462.5 * 0.82, rel=1e-12)
    assert inv.balance_of_plant == pytest.approx(1387.5 * 0.90, rel=1e-12)


def test_2030_total_on_bundled_pipeline(pipeline_traj, central):
    assert pipeline_traj.cumulative(2030) == pytest.approx(441.0)
    inv = investment_costs(2030, pipeline_traj, central)
    assert inv.total == pytest.approx(701.0, rel=0.01)


def test_monotone_nonincreasing_in_capacity(central):
    traj = CapacityTrajectory(2023, 1.86, {y: 10.0 * (y - 2023) for y in range(2024, 2031)})
    totals = [investment_costs(y, traj, central).total for y in range(2023, 2031)]
    assert all(b <= a for a, b in zip(totals, totals[1:]))


def test_halving_learning_rate_raises_costs(central):
    slow = dataclasses.replace(central, learning_rate_stack=0.09,
                               learning_rate_bop=0.05)
    traj = CapacityTrajectory(2023, 1.86, {2024: 50.0})
    assert investment_costs(2024, traj, slow).total \
        > investment_costs(2024, traj, central).total


def test_start_of_year_option_lags_by_one_year(pipeline_traj, central):
    lagged = investment_costs(2025, pipeline_traj, central, contemporaneous=False)
    assert lagged.cumulative_capacity_gw == pytest.approx(
        pipeline_traj.cumulative(2024))


def test_year_before_base_is_error(pipeline_traj, central):
    with pytest.raises(ValueError):
        investment_costs(2022, pipeline_traj, central)


def test_stack_share_declines_under_central_learning(pipeline_traj, central):
    s24 = investment_costs(2024, pipeline_traj, central).stack_share
    s30 = investment_costs(2030, pipeline_traj, central).stack_share
    assert s30 < s24 < central.stack_share_2023


# ---------------------------------------------------------------------------
# LCOH
# ---------------------------------------------------------------------------

def _flat_params(**overrides):
    raw = dict(
        scenario_id="toy", investment_2023=0.0, stack_share_2023=0.25,
        learning_rate_stack=0.18, learning_rate_bop=0.10,
        stack_lifetime=TimeAnchoredSeries({2024: 10.0}), payback_period=15.0,
        full_load_hours=3750.0, cost_of_capital=0.08,
        efficiency=TimeAnchoredSeries({2024: 0.69}), fom_share=0.03,
        transport_storage=20.0,
        electricity_price=TimeAnchoredSeries({2024: 0.0}),
        gas_price=TimeAnchoredSeries({2024: 19.0}),
        co2_price=TimeAnchoredSeries({2024: 117.0}),
        emission_intensity=0.265,
    )
    raw.update(overrides)
    return ParamSet(**raw)


def test_only_transport_storage_remains_without_capex_and_power(pipeline_traj):
    params = _flat_params()
    b = lcoh(2025, pipeline_traj, params)
    assert b.total == pytest.approx(20.0, abs=1e-12)
    assert b.electricity == 0.0
    assert b.stack_capital == 0.0
    assert b.bop_capital == 0.0


def test_2030_central_total(pipeline_traj, central):
    # published cost-gap of 107 $/MWh plus a 22 $/MWh gas price
    assert lcoh(2030, pipeline_traj, central).total == pytest.approx(129.0, abs=2.0)


def test_breakdown_components_sum_to_total(pipeline_traj, central):
    for year in (2024, 2027, 2030):
        b = lcoh(year, pipeline_traj, central)
        assert b.total == pytest.approx(
            b.electricity + b.stack_capital + b.bop_capital + b.transport_storage,
            abs=1e-9)


def test_collapses_to_single_annuity_when_lifetimes_match(pipeline_traj, central):
    merged = dataclasses.replace(
        central, stack_lifetime=TimeAnchoredSeries({2024: central.payback_period}))
    for year in (2024, 2030):
        b = lcoh(year, pipeline_traj, merged)
        inv = investment_costs(year, pipeline_traj, merged)
        a = annuity_factor(merged.cost_of_capital, merged.payback_period)
        eta = merged.efficiency.at(year)
        single = ((a + merged.fom_share) * inv.total / merged.full_load_hours
                  * 1000.0 + merged.electricity_price.at(year)) / eta \
            + merged.transport_storage
        assert b.total == pytest.approx(single, abs=1e-9)


@pytest.mark.parametrize("field,delta,direction", [
    ("cost_of_capital", +0.01, +1),
    ("transport_storage", +5.0, +1),
    ("full_load_hours", +250.0, -1),
])
def test_lcoh_monotonic_in_scalar_inputs(pipeline_traj, central, field, delta, direction):
    bumped = dataclasses.replace(central, **{field: getattr(central, field) + delta})
    diff = lcoh(2030, pipeline_traj, bumped).total - lcoh(2030, pipeline_traj, central).total
    assert math.copysign(1.0, diff) == direction


def test_lcoh_increasing_in_electricity_price(pipeline_traj, central):
    bumped = dataclasses.replace(
        central, electricity_price=central.electricity_price.scaled(1.1))
    assert lcoh(2030, pipeline_traj, bumped).total \
        > lcoh(2030, pipeline_traj, central).total


def test_lcoh_decreasing_in_efficiency(pipeline_traj, central):
    better = dataclasses.replace(
        central, efficiency=TimeAnchoredSeries({2024: 0.74}))
    assert lcoh(2030, pipeline_traj, better).total \
        < lcoh(2030, pipeline_traj, central).total


def test_lcoh_before_2024_is_error(pipeline_traj, central):
    with pytest.raises(ValueError):
        lcoh(2023, pipeline_traj, central)
