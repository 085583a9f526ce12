"""Techno-economic core: parameter sets, learning-curve investment costs and LCOH.

The levelised cost of hydrogen (LCOH, $/MWh of hydrogen, LHV basis) is computed
with the annuity method::

    LCOH = (1/eta) * ( (a(r, tau) + FOM) * I_bop / FLH
                     + (a(r, tau_stack) + FOM) * I_stack / FLH
                     + p_elec ) + VOM

with two separate annuities because the stack is replaced more often than the
balance of plant, and specific investment costs that fall with cumulative
installed capacity through component-specific learning rates::

    I_t = I_2023 * (C_t / C_2023) ** log2(1 - LR)

``C_t`` denotes global cumulative electrolysis capacity at the *end* of year t
(additions of year t included); the start-of-year alternative is available via
``investment_costs(..., contemporaneous=False)`` for sensitivity checks.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

import numpy as np

__all__ = [
    "TimeAnchoredSeries",
    "ParamSet",
    "CapacityTrajectory",
    "InvestmentCosts",
    "LCOHBreakdown",
    "annuity_factor",
    "investment_costs",
    "lcoh",
]


class TimeAnchoredSeries:
    """Piecewise-linear time series: linear between anchors, constant after the last.

    Years before the first anchor are an error rather than an extrapolation,
    so that accidental use of e.g. an electricity price before its calibration
    window fails loudly.
    """

    def __init__(self, anchors: Mapping[int, float]):
        if not anchors:
            raise ValueError("series needs at least one anchor")
        years = sorted(int(y) for y in anchors)
        if len(years) != len(set(years)):
            raise ValueError("anchor years must be unique")
        self._years = np.array(years, dtype=float)
        self._values = np.array([float(anchors[y]) for y in years])

    @property
    def first_year(self) -> int:
        return int(self._years[0])

    @property
    def last_year(self) -> int:
        return int(self._years[-1])

    def at(self, year: float) -> float:
        """Value at ``year``; exact at anchors, linear in between, flat afterwards."""
        if year < self._years[0]:
            raise ValueError(
                f"year {year} is before the first anchor ({self.first_year})")
        return float(np.interp(year, self._years, self._values))

    def scaled(self, factor: float) -> "TimeAnchoredSeries":
        """New series with every anchor value multiplied by ``factor``."""
        return TimeAnchoredSeries(
            {int(y): v * factor for y, v in zip(self._years, self._values)})

    def anchors(self) -> dict[int, float]:
        return {int(y): float(v) for y, v in zip(self._years, self._values)}

    def __repr__(self) -> str:
        return f"TimeAnchoredSeries({self.anchors()!r})"


def annuity_factor(rate: float, years: float) -> float:
    """Annuity factor a(r, n) = r / (1 - (1+r)^-n) in 1/yr.

    At r = 0 the limit 1/n is returned. ``years`` may be fractional (the
    stack lifetime is interpolated in time).
    """
    if years < 1.0:
        raise ValueError(f"annuity period must be >= 1 year, got {years}")
    if rate < 0.0:
        raise ValueError(f"cost of capital must be >= 0, got {rate}")
    if rate == 0.0:
        return 1.0 / years
    return rate / (1.0 - (1.0 + rate) ** (-years))


def _series(obj) -> TimeAnchoredSeries:
    if isinstance(obj, TimeAnchoredSeries):
        return obj
    return TimeAnchoredSeries({int(k): float(v) for k, v in obj.items()})


@dataclass(frozen=True)
class ParamSet:
    """One techno-economic parameterization (central, progressive or conservative).

    All prices in 2023US$. Efficiency is the LHV electrolyser efficiency;
    capacity always denotes the electrical input capacity of the electrolyser.
    """

    scenario_id: str
    investment_2023: float          # $/kW(el), total electrolyser in 2023
    stack_share_2023: float         # stack share of the 2023 investment
    learning_rate_stack: float      # fractional cost drop per capacity doubling
    learning_rate_bop: float
    stack_lifetime: TimeAnchoredSeries   # yr
    payback_period: float                # yr, annuity horizon for the whole unit
    full_load_hours: float               # h/yr
    cost_of_capital: float               # fraction/yr
    efficiency: TimeAnchoredSeries       # LHV fraction
    fom_share: float                     # fixed O&M, fraction of investment per yr
    transport_storage: float             # $/MWh H2 (variable O&M)
    electricity_price: TimeAnchoredSeries   # $/MWh(el)
    gas_price: TimeAnchoredSeries           # $/MWh(gas), fuel only
    co2_price: TimeAnchoredSeries           # $/tCO2
    emission_intensity: float               # tCO2 per MWh(gas), upstream included

    def __post_init__(self):
        if not 0.0 < self.stack_share_2023 < 1.0:
            raise ValueError("stack share must be in (0, 1)")
        for name in ("learning_rate_stack", "learning_rate_bop"):
            lr = getattr(self, name)
            if not 0.0 < lr < 1.0:
                raise ValueError(f"{name} must be in (0, 1), got {lr}")
        if self.cost_of_capital <= 0.0:
            raise ValueError("cost of capital must be positive")
        if self.payback_period < 1.0:
            raise ValueError("payback period must be >= 1 year")
        if self.investment_2023 < 0.0:
            raise ValueError("2023 investment cost must be non-negative")

    @classmethod
    def from_dict(cls, raw: Mapping) -> "ParamSet":
        try:
            return cls(
                scenario_id=str(raw["scenario_id"]),
                investment_2023=float(raw["investment_2023_usd_per_kw"]),
                stack_share_2023=float(raw["stack_share_2023"]),
                learning_rate_stack=float(raw["learning_rate_stack"]),
                learning_rate_bop=float(raw["learning_rate_bop"]),
                stack_lifetime=_series(raw["stack_lifetime_yr"]),
                payback_period=float(raw["payback_period_yr"]),
                full_load_hours=float(raw["full_load_hours"]),
                cost_of_capital=float(raw["cost_of_capital"]),
                efficiency=_series(raw["efficiency_lhv"]),
                fom_share=float(raw["fom_share_per_yr"]),
                transport_storage=float(raw["transport_storage_usd_per_mwh"]),
                electricity_price=_series(raw["electricity_usd_per_mwh"]),
                gas_price=_series(raw["gas_usd_per_mwh"]),
                co2_price=_series(raw["co2_usd_per_t"]),
                emission_intensity=float(raw["gas_emission_intensity_t_per_mwh"]),
            )
        except KeyError as exc:
            raise ValueError(f"parameter file is missing key {exc}") from None

    @classmethod
    def from_json(cls, path) -> "ParamSet":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    @classmethod
    def builtin(cls, scenario_id: str) -> "ParamSet":
        """Load one of the bundled parameter sets (central/progressive/conservative)."""
        from . import fixtures
        return cls.from_json(fixtures.params_path(scenario_id))


class CapacityTrajectory:
    """Annual electrolysis capacity additions on top of an installed base.

    ``additions_gw`` maps build year -> newly added capacity (GW el input);
    ``supported_gw`` is the part of each year's additions whose cost gap is
    already carried by demand-side policy and therefore needs no supply-side
    subsidy. Cumulative capacity at year t includes year-t additions.
    """

    def __init__(self, base_year: int, base_capacity_gw: float,
                 additions_gw: Mapping[int, float],
                 supported_gw: Mapping[int, float] | None = None):
        if base_capacity_gw <= 0.0:
            raise ValueError("base capacity must be positive")
        self.base_year = int(base_year)
        self.base_capacity_gw = float(base_capacity_gw)
        adds = {int(y): float(v) for y, v in additions_gw.items()}
        sup = {int(y): float(v) for y, v in (supported_gw or {}).items()}
        for y, v in adds.items():
            if y <= self.base_year:
                raise ValueError(f"addition year {y} not after base year {base_year}")
            if v < 0.0:
                raise ValueError(f"negative capacity addition in {y}")
        for y, v in sup.items():
            if v < 0.0:
                raise ValueError(f"negative supported capacity in {y}")
            if v > adds.get(y, 0.0) + 1e-9:
                raise ValueError(
                    f"supported capacity exceeds additions in {y}: {v} > {adds.get(y, 0.0)}")
        self._additions = dict(sorted(adds.items()))
        self._supported = {y: sup.get(y, 0.0) for y in self._additions}

    @property
    def build_years(self) -> list[int]:
        return list(self._additions)

    @property
    def last_year(self) -> int:
        return max(self._additions, default=self.base_year)

    def addition(self, year: int) -> float:
        return self._additions.get(int(year), 0.0)

    def supported(self, year: int) -> float:
        return self._supported.get(int(year), 0.0)

    def net_addition(self, year: int) -> float:
        """Additions minus demand-policy-supported capacity (GW)."""
        return self.addition(year) - self.supported(year)

    def cumulative(self, year: int) -> float:
        """Cumulative capacity (GW) at the end of ``year``."""
        year = int(year)
        if year < self.base_year:
            raise ValueError(f"year {year} is before the base year {self.base_year}")
        return self.base_capacity_gw + sum(
            v for y, v in self._additions.items() if y <= year)

    def total_additions(self) -> float:
        return sum(self._additions.values())

    def total_supported(self) -> float:
        return sum(self._supported.values())

    def with_supported(self, supported_gw: Mapping[int, float]) -> "CapacityTrajectory":
        return CapacityTrajectory(self.base_year, self.base_capacity_gw,
                                  self._additions, supported_gw)

    def extended(self, additions_gw: Mapping[int, float]) -> "CapacityTrajectory":
        """New trajectory with extra build years appended (must not overlap)."""
        overlap = set(self._additions) & {int(y) for y in additions_gw}
        if overlap:
            raise ValueError(f"extension overlaps existing build years: {sorted(overlap)}")
        merged = dict(self._additions)
        merged.update({int(y): float(v) for y, v in additions_gw.items()})
        return CapacityTrajectory(self.base_year, self.base_capacity_gw,
                                  merged, self._supported)

    def __repr__(self) -> str:
        return (f"CapacityTrajectory(base={self.base_capacity_gw} GW in "
                f"{self.base_year}, years {self.build_years[:1]}..{self.last_year})")


@dataclass(frozen=True)
class InvestmentCosts:
    """Specific investment costs ($/kW el) split into stack and balance of plant."""
    year: int
    stack: float
    balance_of_plant: float
    cumulative_capacity_gw: float

    @property
    def total(self) -> float:
        return self.stack + self.balance_of_plant

    @property
    def stack_share(self) -> float:
        return self.stack / self.total


def investment_costs(year: int, trajectory: CapacityTrajectory, params: ParamSet,
                     contemporaneous: bool = True) -> InvestmentCosts:
    """Learning-curve investment costs in ``year``.

    Stack and balance of plant learn separately from the 2023 base split;
    the stack share in later years is an output of the two learning curves.
    ``contemporaneous=False`` uses start-of-year cumulative capacity instead
    of the default end-of-year convention.
    """
    year = int(year)
    if year < trajectory.base_year:
        raise ValueError(f"year {year} is before the base year {trajectory.base_year}")
    c_base = trajectory.base_capacity_gw
    if contemporaneous:
        c_t = trajectory.cumulative(year)
    else:
        c_t = trajectory.cumulative(max(year - 1, trajectory.base_year))
    if c_t < c_base:
        raise ValueError(f"cumulative capacity {c_t} below the {trajectory.base_year} "
                         f"base {c_base}")
    ratio = c_t / c_base
    stack0 = params.stack_share_2023 * params.investment_2023
    bop0 = (1.0 - params.stack_share_2023) * params.investment_2023
    stack = stack0 * ratio ** math.log2(1.0 - params.learning_rate_stack)
    bop = bop0 * ratio ** math.log2(1.0 - params.learning_rate_bop)
    return InvestmentCosts(year=year, stack=stack, balance_of_plant=bop,
                           cumulative_capacity_gw=c_t)


@dataclass(frozen=True)
class LCOHBreakdown:
    """Levelised cost of hydrogen and its components, all in $/MWh H2 (LHV)."""
    year: int
    electricity: float
    stack_capital: float
    bop_capital: float
    transport_storage: float
    # inputs used, for reporting
    efficiency: float
    full_load_hours: float
    investment_stack: float        # $/kW
    investment_bop: float          # $/kW
    annuity_stack: float           # 1/yr
    annuity_bop: float             # 1/yr

    @property
    def total(self) -> float:
        return (self.electricity + self.stack_capital + self.bop_capital
                + self.transport_storage)


def lcoh(year: int, trajectory: CapacityTrajectory, params: ParamSet) -> LCOHBreakdown:
    """Levelised cost of hydrogen in ``year`` for the given capacity trajectory.

    Capital terms annualize the year's learning-curve investment costs over
    the payback period (balance of plant) and the stack lifetime (stack);
    the electricity and capital terms are scaled by 1/efficiency to express
    them per MWh of hydrogen. Transport and storage enter as a flat $/MWh adder.
    """
    year = int(year)
    if year < 2024:
        raise ValueError(f"LCOH is defined from 2024 onwards, got {year}")
    inv = investment_costs(year, trajectory, params)
    eta = params.efficiency.at(year)
    a_bop = annuity_factor(params.cost_of_capital, params.payback_period)
    a_stack = annuity_factor(params.cost_of_capital, params.stack_lifetime.at(year))
    # $/kW / (h/yr) = $/kWh -> *1000 to $/MWh (electrical), /eta to $/MWh H2
    kwh_to_mwh = 1000.0
    bop_cap = (a_bop + params.fom_share) * inv.balance_of_plant \
        / params.full_load_hours * kwh_to_mwh / eta
    stack_cap = (a_stack + params.fom_share) * inv.stack \
        / params.full_load_hours * kwh_to_mwh / eta
    elec = params.electricity_price.at(year) / eta
    return LCOHBreakdown(
        year=year,
        electricity=elec,
        stack_capital=stack_cap,
        bop_capital=bop_cap,
        transport_storage=params.transport_storage,
        efficiency=eta,
        full_load_hours=params.full_load_hours,
        investment_stack=inv.stack,
        investment_bop=inv.balance_of_plant,
        annuity_stack=a_stack,
        annuity_bop=a_bop,
    )
