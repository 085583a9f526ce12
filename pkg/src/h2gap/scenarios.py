"""Electrolysis requirements in stringent climate scenarios and the ambition gap.

Holds per-scenario 2030-2050 electrolysis capacity requirements, computes
distribution statistics (quartiles with linear interpolation between closest
ranks, numpy's default), the signed gap between a requirement and the project
pipeline, and the piecewise-linear capacity trajectory that continues the
2030 pipeline along the scenario median.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .costs import CapacityTrajectory
from .units import production_to_capacity

__all__ = [
    "ScenarioRequirement",
    "RequirementStats",
    "load_requirements",
    "stats",
    "ambition_gap",
    "median_trajectory",
]

# Scenario sources that report hydrogen production instead of electrolysis
# capacity are converted at load time with these fixed assumptions.
CONVERSION_FLH = 3750.0
CONVERSION_EFFICIENCY = 0.69


@dataclass(frozen=True)
class ScenarioRequirement:
    """One (source, scenario, year) electrolysis capacity requirement in GW."""
    source: str
    scenario_name: str
    year: int
    capacity_gw: float
    outlier: bool = False
    approximate: bool = False

    def __post_init__(self):
        if self.capacity_gw <= 0.0:
            raise ValueError(f"requirement capacity must be positive: {self}")


@dataclass(frozen=True)
class RequirementStats:
    year: int
    n: int
    minimum: float
    q1: float
    median: float
    q3: float
    maximum: float


def load_requirements(path) -> list[ScenarioRequirement]:
    """Read a scenario requirement CSV.

    Columns: ``source,scenario_name,year,capacity_gw,production_mt_per_yr,
    outlier,approximate``. Exactly one of ``capacity_gw`` /
    ``production_mt_per_yr`` must be filled per row; production volumes are
    converted to input capacity at 3750 full-load hours and 69% efficiency.
    Duplicate (source, scenario_name, year) keys are an error.
    """
    reqs: list[ScenarioRequirement] = []
    seen: set[tuple] = set()
    with open(path, newline="", encoding="utf-8") as fh:
        for i, row in enumerate(csv.DictReader(fh), start=2):
            cap = (row.get("capacity_gw") or "").strip()
            prod = (row.get("production_mt_per_yr") or "").strip()
            if bool(cap) == bool(prod):
                raise ValueError(
                    f"{path}:{i}: exactly one of capacity_gw and "
                    "production_mt_per_yr must be given")
            capacity = float(cap) if cap else production_to_capacity(
                float(prod), CONVERSION_FLH, CONVERSION_EFFICIENCY)
            req = ScenarioRequirement(
                source=row["source"].strip(),
                scenario_name=row["scenario_name"].strip(),
                year=int(row["year"]),
                capacity_gw=capacity,
                outlier=_parse_bool(row.get("outlier", "false"), path, i),
                approximate=_parse_bool(row.get("approximate", "false"), path, i),
            )
            key = (req.source, req.scenario_name, req.year)
            if key in seen:
                raise ValueError(f"{path}:{i}: duplicate scenario key {key}")
            seen.add(key)
            reqs.append(req)
    return reqs


def _parse_bool(text: str, path, line: int) -> bool:
    t = (text or "false").strip().lower()
    if t in ("true", "1", "yes"):
        return True
    if t in ("false", "0", "no", ""):
        return False
    raise ValueError(f"{path}:{line}: cannot parse boolean {text!r}")


def stats(requirements: list[ScenarioRequirement], year: int,
          exclude_outliers: bool = True) -> RequirementStats:
    """Five-number summary of the requirements for one target year.

    Quartiles use linear interpolation between closest ranks
    (``numpy.percentile`` default).
    """
    values = [r.capacity_gw for r in requirements
              if r.year == year and not (exclude_outliers and r.outlier)]
    if not values:
        raise ValueError(f"no scenario requirements for {year} "
                         f"(exclude_outliers={exclude_outliers})")
    arr = np.asarray(values, dtype=float)
    q1, med, q3 = np.percentile(arr, [25.0, 50.0, 75.0])
    return RequirementStats(year=year, n=arr.size, minimum=float(arr.min()),
                            q1=float(q1), median=float(med), q3=float(q3),
                            maximum=float(arr.max()))


def ambition_gap(requirement_gw: float, pipeline_gw: float) -> float:
    """Scenario requirement minus announced pipeline, in GW.

    Negative values mean the pipeline already exceeds the requirement.
    """
    return requirement_gw - pipeline_gw


def median_trajectory(pipeline_2030_gw: float, median_2040_gw: float,
                      median_2050_gw: float, horizon: int) -> CapacityTrajectory:
    """Post-2030 capacity trajectory along the scenario median.

    Annual additions are piecewise-constant so that cumulative capacity is
    linear through (2030, pipeline), (2040, median 2040) and (2050,
    median 2050); additions are zero after 2050. The returned trajectory is
    based at 2030 with the pipeline as installed base; splice it onto a
    pipeline trajectory with :meth:`CapacityTrajectory.extended` when a single
    2023-based series is needed.
    """
    if horizon < 2030:
        raise ValueError(f"horizon must be >= 2030, got {horizon}")
    if median_2040_gw < pipeline_2030_gw or median_2050_gw < median_2040_gw:
        raise ValueError(
            "cumulative targets must be non-decreasing: "
            f"{pipeline_2030_gw} (2030), {median_2040_gw} (2040), "
            f"{median_2050_gw} (2050)")
    step_2030s = (median_2040_gw - pipeline_2030_gw) / 10.0
    step_2040s = (median_2050_gw - median_2040_gw) / 10.0
    additions = {}
    for year in range(2031, horizon + 1):
        if year <= 2040:
            additions[year] = step_2030s
        elif year <= 2050:
            additions[year] = step_2040s
        else:
            additions[year] = 0.0
    return CapacityTrajectory(base_year=2030, base_capacity_gw=pipeline_2030_gw,
                              additions_gw=additions)
