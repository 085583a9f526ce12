"""h2gap: green hydrogen project tracking, levelised cost and subsidy-gap toolkit.

The package quantifies three things for green hydrogen:

* the *past implementation gap* -- how announced electrolyser projects fared
  against their announced launch years, tracked across database vintages;
* the *ambition gap* -- announced 2030 capacity versus requirements in
  stringent climate scenarios;
* the *future implementation gap* -- the cost gap of green hydrogen against
  natural gas under endogenous learning, and the subsidies needed to close it.

Everything is deterministic: pure functions over immutable inputs.
"""

from .costs import (
    CapacityTrajectory,
    InvestmentCosts,
    LCOHBreakdown,
    ParamSet,
    TimeAnchoredSeries,
    annuity_factor,
    investment_costs,
    lcoh,
)
from .projects import (
    CapacitySeries,
    Fate,
    FateRates,
    ProjectRecord,
    SankeyData,
    Snapshot,
    Status,
    TransitionReport,
    distribute_confidential,
    fate_rates,
    implementation_gap,
    load_snapshot,
    pipeline,
    sankey_flows,
    track,
)
from .scenarios import (
    RequirementStats,
    ScenarioRequirement,
    ambition_gap,
    load_requirements,
    median_trajectory,
    stats,
)
from .subsidies import (
    BudgetSupportResult,
    GasCost,
    SubsidySchedule,
    annual_subsidies,
    capacity_supported_by_budget,
    cost_gap,
    cumulative_subsidies,
    demand_supported_additions,
    gas_cost,
    parity_year,
)
from .units import LHV_KWH_PER_KG, capacity_to_production, production_to_capacity

__version__ = "0.1.0"
