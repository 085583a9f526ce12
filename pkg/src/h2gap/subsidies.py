"""Cost gap to natural gas, required subsidies and the budget-to-capacity inversion.

A project finished in year t' must sell hydrogen at its own LCOH (locked at
the build year) throughout the payback period. The per-MWh subsidy it needs
in payment year t is the clamped gap to the then-current total gas cost
``max(0, LCOH[t'] - gas[t])``, so required annual subsidies stack cohorts::

    S_t = sum over build years t' in [t - tau + 1, t] of
          dC[t'] * FLH * eta[t'] * max(0, LCOH[t'] - gas[t])

with dC the capacity additions net of the demand-policy-supported share.
Each cohort receives exactly ``tau`` annual payments (build year included)
unless the reporting horizon cuts the window short. There is no discounting
across payment years and no clawback after parity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .costs import CapacityTrajectory, ParamSet, lcoh
from .units import production_to_capacity

__all__ = [
    "GasCost", "SubsidySchedule", "BudgetSupportResult",
    "gas_cost", "cost_gap", "parity_year", "demand_supported_additions",
    "annual_subsidies", "cumulative_subsidies", "capacity_supported_by_budget",
]

FIRST_SUBSIDY_YEAR = 2024
POLICY_WINDOW = (2024, 2030)   # years across which demand-side support is spread
DEFAULT_POLICY_MT = 7.0        # implemented demand-side measures, Mt H2 per year


@dataclass(frozen=True)
class GasCost:
    """Total cost of natural gas per MWh: fuel plus (optional) carbon cost."""
    year: int
    fuel: float
    co2_component: float

    @property
    def total(self) -> float:
        return self.fuel + self.co2_component


def gas_cost(year: int, params: ParamSet, carbon_pricing: bool) -> GasCost:
    """Gas cost in ``year``; the CO2 component is emission intensity x CO2 price."""
    if year < 2024:
        raise ValueError(f"gas cost is defined from 2024 onwards, got {year}")
    fuel = params.gas_price.at(year)
    co2 = params.emission_intensity * params.co2_price.at(year) if carbon_pricing else 0.0
    return GasCost(year=int(year), fuel=fuel, co2_component=co2)


def cost_gap(year: int, trajectory: CapacityTrajectory, params: ParamSet,
             carbon_pricing: bool) -> float:
    """Signed LCOH-minus-gas gap in $/MWh; negative once parity is passed."""
    return lcoh(year, trajectory, params).total - gas_cost(year, params, carbon_pricing).total


def parity_year(trajectory: CapacityTrajectory, params: ParamSet,
                carbon_pricing: bool, horizon: int) -> int | None:
    """First year up to ``horizon`` with a non-positive cost gap, if any."""
    if horizon < FIRST_SUBSIDY_YEAR:
        raise ValueError(f"horizon must be >= {FIRST_SUBSIDY_YEAR}, got {horizon}")
    for year in range(FIRST_SUBSIDY_YEAR, horizon + 1):
        if cost_gap(year, trajectory, params, carbon_pricing) <= 0.0:
            return year
    return None


def demand_supported_additions(params: ParamSet, pipeline: CapacityTrajectory,
                               policy_mt: float = DEFAULT_POLICY_MT) -> dict[int, float]:
    """Capacity additions already carried by demand-side policy, by build year.

    The policy volume (Mt H2 per year by 2030) converts to cumulative input
    capacity at 2030 efficiency and the parameter set's full-load hours, and
    is spread across the 2024-2030 build years proportionally to the
    pipeline's annual additions.
    """
    if policy_mt < 0.0:
        raise ValueError(f"policy volume must be >= 0, got {policy_mt}")
    years = [y for y in pipeline.build_years
             if POLICY_WINDOW[0] <= y <= POLICY_WINDOW[1]]
    if policy_mt == 0.0:
        return {y: 0.0 for y in years}
    total = production_to_capacity(policy_mt, params.full_load_hours,
                                   params.efficiency.at(2030))
    window_additions = sum(pipeline.addition(y) for y in years)
    if total > window_additions:
        raise ValueError(
            f"demand-supported capacity ({total:.1f} GW) exceeds the announced "
            f"pipeline ({window_additions:.1f} GW) in {POLICY_WINDOW}")
    return {y: total * pipeline.addition(y) / window_additions for y in years}


def _payback_payments(params: ParamSet) -> int:
    return int(math.ceil(params.payback_period))


def _cohort_unit_cost(build_year: int, trajectory: CapacityTrajectory,
                      params: ParamSet, carbon_pricing: bool) -> float:
    """Subsidy per GW built in ``build_year`` over its payback window ($bn/GW)."""
    locked_lcoh = lcoh(build_year, trajectory, params).total
    eta = params.efficiency.at(build_year)
    total_gap = sum(
        max(0.0, locked_lcoh - gas_cost(t, params, carbon_pricing).total)
        for t in range(build_year, build_year + _payback_payments(params)))
    # GW * h/yr * eta -> MWh H2 (1e3), times $/MWh, to $bn (1e-9)
    return params.full_load_hours * eta * total_gap * 1e-6


def annual_subsidies(year: int, trajectory: CapacityTrajectory, params: ParamSet,
                     carbon_pricing: bool) -> float:
    """Required subsidies paid out in ``year`` ($bn/yr) across active cohorts.

    A cohort built in t' is active for the payment years t' .. t'+tau-1; its
    LCOH stays locked at the build year while the gas reference follows the
    payment year.
    """
    if year < FIRST_SUBSIDY_YEAR:
        raise ValueError(f"subsidies are defined from {FIRST_SUBSIDY_YEAR}, got {year}")
    payments = _payback_payments(params)
    gas_total = gas_cost(year, params, carbon_pricing).total
    total = 0.0
    for build_year in trajectory.build_years:
        if not build_year <= year <= build_year + payments - 1:
            continue
        net = trajectory.net_addition(build_year)
        if net <= 0.0:
            continue
        gap = lcoh(build_year, trajectory, params).total - gas_total
        if gap <= 0.0:
            continue
        total += net * params.full_load_hours \
            * params.efficiency.at(build_year) * gap * 1e-6
    return total


@dataclass(frozen=True)
class SubsidySchedule:
    """Annual and cumulative subsidy requirements ($bn) over a horizon."""
    scenario_id: str
    carbon_pricing: bool
    through_year: int
    years: tuple[int, ...]
    annual_busd: tuple[float, ...]
    cumulative_busd: tuple[float, ...]

    def annual(self, year: int) -> float:
        return self.annual_busd[self.years.index(year)]

    def cumulative(self, year: int) -> float:
        return self.cumulative_busd[self.years.index(year)]

    @property
    def total_busd(self) -> float:
        return self.cumulative_busd[-1]

    def peak(self) -> tuple[int, float]:
        """(year, $bn) of the highest annual requirement."""
        idx = max(range(len(self.years)), key=lambda i: self.annual_busd[i])
        return self.years[idx], self.annual_busd[idx]

    def rows(self) -> list[dict]:
        return [{"year": y, "annual_busd": a, "cumulative_busd": c,
                 "scenario": self.scenario_id,
                 "carbon_pricing": "on" if self.carbon_pricing else "off"}
                for y, a, c in zip(self.years, self.annual_busd, self.cumulative_busd)]


def cumulative_subsidies(trajectory: CapacityTrajectory, params: ParamSet,
                         carbon_pricing: bool, through_year: int) -> SubsidySchedule:
    """Subsidy schedule for every build year of ``trajectory`` up to the horizon.

    Payments beyond ``through_year`` are cut off, so cohorts built close to
    the horizon only contribute their in-horizon payment years.
    """
    if through_year < FIRST_SUBSIDY_YEAR:
        raise ValueError(f"through_year must be >= {FIRST_SUBSIDY_YEAR}")
    years = tuple(range(FIRST_SUBSIDY_YEAR, through_year + 1))
    annual = tuple(annual_subsidies(y, trajectory, params, carbon_pricing)
                   for y in years)
    running, cumulative = 0.0, []
    for a in annual:
        running += a
        cumulative.append(running)
    return SubsidySchedule(scenario_id=params.scenario_id,
                           carbon_pricing=carbon_pricing,
                           through_year=through_year, years=years,
                           annual_busd=annual, cumulative_busd=tuple(cumulative))


@dataclass(frozen=True)
class BudgetSupportResult:
    """How much capacity a subsidy budget can carry, next to demand policy."""
    budget_busd: float
    subsidy_supported_gw: float
    demand_supported_gw: float
    spent_busd: float
    saturated: bool
    allocation: str
    per_year_gw: Mapping[int, float]

    @property
    def total_supported_gw(self) -> float:
        return self.subsidy_supported_gw + self.demand_supported_gw


BUDGET_TOLERANCE_BUSD = 0.1


def capacity_supported_by_budget(budget_busd: float, params: ParamSet,
                                 carbon_pricing: bool,
                                 pipeline: CapacityTrajectory,
                                 policy_mt: float = DEFAULT_POLICY_MT,
                                 allocation: str = "chronological") -> BudgetSupportResult:
    """Invert the subsidy model: capacity affordable with a fixed budget ($bn).

    Demand-side policy first carries its share of the pipeline; the budget
    then funds the remaining (net) additions, with the LCOH path held fixed
    at the full-pipeline learning trajectory (no learning feedback from the
    smaller funded build-out).

    ``allocation='chronological'`` fills build years in order until the money
    runs out, which mirrors projects coming online as announced;
    ``allocation='uniform'`` instead scales every year's net additions by one
    factor found by bisection. A budget larger than the full-pipeline
    requirement returns the whole pipeline with ``saturated=True``.
    """
    if budget_busd < 0.0:
        raise ValueError(f"budget must be >= 0, got {budget_busd}")
    if allocation not in ("chronological", "uniform"):
        raise ValueError(f"allocation must be chronological or uniform, "
                         f"got {allocation!r}")
    supported = demand_supported_additions(params, pipeline, policy_mt)
    traj = pipeline.with_supported(supported)
    build_years = traj.build_years
    unit_cost = {y: _cohort_unit_cost(y, traj, params, carbon_pricing)
                 for y in build_years}
    net = {y: traj.net_addition(y) for y in build_years}
    full_cost = sum(net[y] * unit_cost[y] for y in build_years)
    demand_total = sum(supported.values())

    if budget_busd >= full_cost:
        return BudgetSupportResult(
            budget_busd=budget_busd, subsidy_supported_gw=sum(net.values()),
            demand_supported_gw=demand_total, spent_busd=full_cost,
            saturated=True, allocation=allocation, per_year_gw=dict(net))

    per_year: dict[int, float] = {y: 0.0 for y in build_years}
    if allocation == "chronological":
        remaining = budget_busd
        for y in build_years:
            cost = net[y] * unit_cost[y]
            if cost <= remaining:
                per_year[y] = net[y]
                remaining -= cost
            else:
                if unit_cost[y] > 0.0:
                    per_year[y] = remaining / unit_cost[y]
                remaining = 0.0
                break
    else:
        # bisect the uniform scaling factor; S(lambda) is monotone in lambda
        lo, hi = 0.0, 1.0
        def spend(lam: float) -> float:
            return sum(lam * net[y] * unit_cost[y] for y in build_years)
        while spend(hi) - spend(lo) > BUDGET_TOLERANCE_BUSD / 2.0:
            mid = 0.5 * (lo + hi)
            if spend(mid) <= budget_busd:
                lo = mid
            else:
                hi = mid
        lam = lo
        per_year = {y: lam * net[y] for y in build_years}

    spent = sum(per_year[y] * unit_cost[y] for y in build_years)
    return BudgetSupportResult(
        budget_busd=budget_busd, subsidy_supported_gw=sum(per_year.values()),
        demand_supported_gw=demand_total, spent_busd=spent, saturated=False,
        allocation=allocation, per_year_gw=per_year)
