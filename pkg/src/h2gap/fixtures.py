"""Bundled data fixtures and their loaders.

The package ships a synthetic-but-consistent data bundle under
``data/fixtures/``: three parameter files (central / progressive /
conservative), a capacity-addition trajectory for the announced project
pipeline, a scenario-requirement table and three small project snapshots.
``H2GAP_DATA_DIR`` overrides the bundle location, e.g. to point the toolkit
at real database exports in the same schema.
"""

from __future__ import annotations

import csv
import os
from pathlib import Path

from .costs import CapacityTrajectory
from .scenarios import ScenarioRequirement, load_requirements, median_trajectory, stats

__all__ = [
    "data_dir", "params_path", "pipeline_path", "requirements_path",
    "snapshot_path", "load_pipeline", "builtin_pipeline",
    "builtin_requirements", "median_extended_pipeline",
]

ENV_DATA_DIR = "H2GAP_DATA_DIR"
SCENARIO_IDS = ("central", "progressive", "conservative")


def data_dir() -> Path:
    override = os.environ.get(ENV_DATA_DIR)
    if override:
        return Path(override)
    return Path(__file__).parent / "data" / "fixtures"


def params_path(scenario_id: str) -> Path:
    if scenario_id not in SCENARIO_IDS:
        raise ValueError(f"unknown scenario {scenario_id!r}, "
                         f"expected one of {SCENARIO_IDS}")
    return data_dir() / f"params_{scenario_id}.json"


def pipeline_path() -> Path:
    return data_dir() / "pipeline_additions.csv"


def requirements_path() -> Path:
    return data_dir() / "scenario_requirements.csv"


def snapshot_path(vintage_year: int) -> Path:
    return data_dir() / f"snap{vintage_year}.csv"


def load_pipeline(path) -> CapacityTrajectory:
    """Read a capacity trajectory CSV (columns ``year,additions_gw,approximate``).

    The earliest row is the installed base: cumulative capacity at the end of
    that year. Later rows are annual additions.
    """
    rows: dict[int, float] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        for i, row in enumerate(csv.DictReader(fh), start=2):
            try:
                year = int(row["year"])
                gw = float(row["additions_gw"])
            except (KeyError, TypeError, ValueError):
                raise ValueError(f"{path}:{i}: expected year and additions_gw "
                                 f"columns with numeric values") from None
            if year in rows:
                raise ValueError(f"{path}:{i}: duplicate year {year}")
            rows[year] = gw
    if len(rows) < 2:
        raise ValueError(f"{path}: need a base year plus at least one addition year")
    base_year = min(rows)
    base = rows.pop(base_year)
    return CapacityTrajectory(base_year=base_year, base_capacity_gw=base,
                              additions_gw=rows)


def builtin_pipeline() -> CapacityTrajectory:
    return load_pipeline(pipeline_path())


def builtin_requirements() -> list[ScenarioRequirement]:
    return load_requirements(requirements_path())


def median_extended_pipeline(horizon: int,
                             pipeline: CapacityTrajectory | None = None,
                             requirements: list[ScenarioRequirement] | None = None,
                             ) -> CapacityTrajectory:
    """Pipeline trajectory continued past 2030 along the scenario medians.

    Uses the 2040 and 2050 requirement medians (outliers excluded) to extend
    the announced pipeline, which drives post-2030 learning and, when asked
    for, post-2030 subsidy cohorts.
    """
    pipe = pipeline if pipeline is not None else builtin_pipeline()
    if horizon <= pipe.last_year:
        return pipe
    reqs = requirements if requirements is not None else builtin_requirements()
    c2030 = pipe.cumulative(2030)
    m40 = stats(reqs, 2040).median
    m50 = stats(reqs, 2050).median
    continuation = median_trajectory(c2030, m40, m50, horizon)
    return pipe.extended({y: continuation.addition(y)
                          for y in continuation.build_years})
