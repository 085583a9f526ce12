"""Electrolyser project announcements: snapshot loading, tracking and fate rates.

A *snapshot* is one vintage of a project-announcement database. Projects carry
a stable reference id across vintages, which makes it possible to follow each
announcement over time and classify its fate (realised on schedule, delayed,
or disappeared), to measure the implementation gap between announced and
realised capacity, and to lay the flows out as a Sankey diagram.

Snapshot CSV schema (UTF-8, comma-separated, header required)::

    ref_id,name,country,region,status,launch_year,capacity_mw_el,confidential[,demo_state]

Status strings are matched case-insensitively; ``FID`` and
``Under construction`` both normalize to the merged ``FID/Construction``
category. ``DEMO`` rows additionally need ``demo_state`` (``running``,
``future`` or ``decommissioned``) to be mapped onto an operating status.
Rows without a launch year or capacity, or with an ``Other`` status, are
dropped (counted in the load report); unparseable rows fail the load with
line-level diagnostics.
"""

from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Status", "Fate", "ProjectRecord", "Snapshot", "LoadReport",
    "SnapshotSchemaError", "SnapshotDataError",
    "load_snapshot", "distribute_confidential", "track", "fate_rates",
    "implementation_gap", "pipeline", "sankey_flows",
    "TransitionReport", "ProjectFate", "FateRates", "FateShares",
    "CapacitySeries", "SankeyData", "SankeyNode", "SankeyFlow",
]


class Status(str, Enum):
    CONCEPT = "Concept"
    FEASIBILITY_STUDY = "FeasibilityStudy"
    FID_CONSTRUCTION = "FID_Construction"
    DEMO = "DEMO"
    OPERATIONAL = "Operational"
    DECOMMISSIONED = "Decommissioned"
    OTHER = "Other"


_STATUS_ALIASES = {
    "concept": Status.CONCEPT,
    "feasibility study": Status.FEASIBILITY_STUDY,
    "feasibilitystudy": Status.FEASIBILITY_STUDY,
    "feasibility_study": Status.FEASIBILITY_STUDY,
    "fid": Status.FID_CONSTRUCTION,
    "under construction": Status.FID_CONSTRUCTION,
    "fid/construction": Status.FID_CONSTRUCTION,
    "fid_construction": Status.FID_CONSTRUCTION,
    "demo": Status.DEMO,
    "operational": Status.OPERATIONAL,
    "decommissioned": Status.DECOMMISSIONED,
    "other": Status.OTHER,
    "other/unknown": Status.OTHER,
}

_DEMO_STATES = {
    "running": Status.OPERATIONAL,
    "future": Status.FID_CONSTRUCTION,
    "decommissioned": Status.DECOMMISSIONED,
}

_REQUIRED_COLUMNS = ("ref_id", "name", "country", "region", "status",
                     "launch_year", "capacity_mw_el", "confidential")


class SnapshotSchemaError(ValueError):
    """The snapshot file does not match the documented column schema."""


class SnapshotDataError(ValueError):
    """One or more rows could not be parsed; carries (line, message) pairs."""

    def __init__(self, path, row_errors: list[tuple[int, str]]):
        self.path = str(path)
        self.row_errors = row_errors
        lines = "; ".join(f"line {ln}: {msg}" for ln, msg in row_errors)
        super().__init__(f"{path}: {len(row_errors)} bad row(s): {lines}")


@dataclass(frozen=True)
class ProjectRecord:
    """One project announcement row. Capacity is MW of electrical input."""
    ref_id: str
    name: str
    country: str
    region: str
    status: Status
    launch_year: int | None
    capacity_mw: float | None
    confidential: bool = False
    synthetic: bool = False   # pro-rata share of a confidential project; untrackable

    def __post_init__(self):
        if self.capacity_mw is not None and self.capacity_mw <= 0.0:
            raise ValueError(f"{self.ref_id}: capacity must be positive when present")


@dataclass(frozen=True)
class LoadReport:
    kept: int
    dropped: int
    dropped_reasons: Mapping[str, int]


class Snapshot:
    """One database vintage. Records are immutable after construction."""

    def __init__(self, vintage_year: int, records: Iterable[ProjectRecord],
                 load_report: LoadReport | None = None):
        self.vintage_year = int(vintage_year)
        self.records = tuple(sorted(records, key=lambda r: r.ref_id))
        self.load_report = load_report
        seen: set[str] = set()
        for rec in self.records:
            if rec.ref_id in seen:
                raise ValueError(f"duplicate ref_id {rec.ref_id!r} in snapshot "
                                 f"{self.vintage_year}")
            seen.add(rec.ref_id)

    def by_ref(self) -> dict[str, ProjectRecord]:
        return {r.ref_id: r for r in self.records}

    def total_capacity_mw(self) -> float:
        return sum(r.capacity_mw or 0.0 for r in self.records)

    def __len__(self) -> int:
        return len(self.records)

    def __repr__(self) -> str:
        return f"Snapshot({self.vintage_year}, {len(self.records)} records)"


def _parse_bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("true", "1", "yes"):
        return True
    if t in ("false", "0", "no", ""):
        return False
    raise ValueError(f"cannot parse boolean {text!r}")


def load_snapshot(path, vintage_year: int) -> Snapshot:
    """Read and filter one snapshot CSV.

    Keeps only announcements with a launch year, a capacity value and a
    meaningful status; ``FID`` and ``Under construction`` are merged, and
    ``DEMO`` rows are allocated to Operational / FID_Construction /
    Decommissioned according to their ``demo_state``. The kept/dropped
    tally is attached as ``snapshot.load_report``.

    Raises :class:`SnapshotSchemaError` for a malformed header,
    :class:`SnapshotDataError` (with line numbers) for unparseable rows or
    duplicated reference ids.
    """
    records: list[ProjectRecord] = []
    errors: list[tuple[int, str]] = []
    dropped = Counter()
    seen: set[str] = set()
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [c for c in _REQUIRED_COLUMNS if c not in header]
        if missing:
            raise SnapshotSchemaError(f"{path}: missing column(s) {missing}")
        for line, row in enumerate(reader, start=2):
            try:
                rec = _parse_row(row, header)
            except ValueError as exc:
                errors.append((line, str(exc)))
                continue
            if rec is None:
                continue
            rec, drop_reason = rec
            if drop_reason is not None:
                dropped[drop_reason] += 1
                continue
            if rec.ref_id in seen:
                errors.append((line, f"duplicate ref_id {rec.ref_id!r}"))
                continue
            seen.add(rec.ref_id)
            records.append(rec)
    if errors:
        raise SnapshotDataError(path, errors)
    report = LoadReport(kept=len(records), dropped=sum(dropped.values()),
                        dropped_reasons=dict(dropped))
    return Snapshot(vintage_year, records, load_report=report)


def _parse_row(row: Mapping[str, str], header: Sequence[str]):
    """Parse one CSV row -> (record, drop_reason) or raise ValueError."""
    ref_id = (row["ref_id"] or "").strip()
    if not ref_id:
        raise ValueError("empty ref_id")
    status_text = (row["status"] or "").strip()
    status = _STATUS_ALIASES.get(" ".join(status_text.lower().split()))
    if status is None:
        raise ValueError(f"unknown status {status_text!r}")
    launch_text = (row["launch_year"] or "").strip()
    launch_year = int(launch_text) if launch_text else None
    cap_text = (row["capacity_mw_el"] or "").strip()
    capacity = float(cap_text) if cap_text else None
    if capacity is not None and capacity <= 0.0:
        raise ValueError(f"capacity must be positive, got {capacity}")
    confidential = _parse_bool(row["confidential"] or "")
    if status is Status.DEMO:
        if "demo_state" not in header:
            raise ValueError("DEMO row requires a demo_state column")
        state = (row.get("demo_state") or "").strip().lower()
        if state not in _DEMO_STATES:
            raise ValueError(f"DEMO row needs demo_state in {sorted(_DEMO_STATES)}, "
                             f"got {state!r}")
        status = _DEMO_STATES[state]

    drop_reason = None
    if status is Status.OTHER:
        drop_reason = "status_other"
    elif launch_year is None:
        drop_reason = "missing_launch_year"
    elif capacity is None:
        drop_reason = "missing_capacity"
    rec = ProjectRecord(ref_id=ref_id, name=(row["name"] or "").strip(),
                        country=(row["country"] or "").strip(),
                        region=(row["region"] or "").strip(), status=status,
                        launch_year=launch_year, capacity_mw=capacity,
                        confidential=confidential)
    return rec, drop_reason


def distribute_confidential(snapshot: Snapshot) -> Snapshot:
    """Reassign confidential capacity pro rata to regions.

    Every confidential record is replaced by one synthetic record per region,
    sized by the region's share of non-confidential capacity. Synthetic
    records keep launch year and status but cannot be tracked across
    vintages. Total capacity is preserved. A snapshot without any
    non-confidential capacity has no defined proportions and is an error.
    """
    confidential = [r for r in snapshot.records if r.confidential]
    if not confidential:
        return snapshot
    open_records = [r for r in snapshot.records if not r.confidential]
    total_open = sum(r.capacity_mw or 0.0 for r in open_records)
    if total_open <= 0.0:
        raise ValueError("cannot distribute confidential capacity: no "
                         "non-confidential capacity to define region shares")
    region_caps: dict[str, float] = {}
    for rec in open_records:
        region_caps[rec.region] = region_caps.get(rec.region, 0.0) + (rec.capacity_mw or 0.0)
    shares = {region: cap / total_open for region, cap in sorted(region_caps.items())}
    out = list(open_records)
    for rec in confidential:
        for region, share in shares.items():
            if share == 0.0:
                continue
            out.append(ProjectRecord(
                ref_id=f"{rec.ref_id}::{region}", name=rec.name,
                country=rec.country, region=region, status=rec.status,
                launch_year=rec.launch_year,
                capacity_mw=(rec.capacity_mw or 0.0) * share,
                confidential=False, synthetic=True))
    return Snapshot(snapshot.vintage_year, out, load_report=snapshot.load_report)


# ---------------------------------------------------------------------------
# Tracking across vintages
# ---------------------------------------------------------------------------

class Fate(str, Enum):
    SUCCESS = "success"
    DELAYED = "delayed"
    DISAPPEARED = "disappeared"


@dataclass(frozen=True)
class ProjectFate:
    """Fate of one tracked project of the target-year cohort.

    ``capacity_mw`` is the capacity credited to the fate (the final vintage's
    value when the project is still present, the announced value when it
    vanished); ``dummy_mw`` is the announced-minus-final difference booked as
    a dummy adjustment so that fates plus dummies reproduce the announced
    total exactly.
    """
    ref_id: str
    name: str
    status_announced: Status
    fate: Fate
    capacity_mw: float
    dummy_mw: float = 0.0
    final_status: Status | None = None
    final_launch_year: int | None = None
    operational_late: bool = False   # delayed but operational before the final vintage
    early: bool = False              # operational with a launch year before the target


@dataclass(frozen=True)
class TransitionReport:
    target_year: int
    earlier_vintage: int
    later_vintage: int
    final_vintage: int
    fates: tuple[ProjectFate, ...]
    announced_mw: float          # earlier-vintage cohort total
    later_announced_mw: float    # same cohort as expected in the middle vintage

    def fate_total_mw(self, fate: Fate) -> float:
        return sum(f.capacity_mw for f in self.fates if f.fate is fate)

    @property
    def dummy_total_mw(self) -> float:
        return sum(f.dummy_mw for f in self.fates)

    @property
    def realized_mw(self) -> float:
        return self.fate_total_mw(Fate.SUCCESS)

    def rows(self) -> list[dict]:
        return [
            {"ref_id": f.ref_id, "name": f.name,
             "status_announced": f.status_announced.value, "fate": f.fate.value,
             "capacity_mw": f.capacity_mw, "dummy_mw": f.dummy_mw,
             "final_status": f.final_status.value if f.final_status else "",
             "final_launch_year": f.final_launch_year if f.final_launch_year else "",
             "operational_late": f.operational_late, "early": f.early}
            for f in self.fates
        ]


def track(earlier: Snapshot, later: Snapshot, final: Snapshot,
          target_year: int) -> TransitionReport:
    """Classify the fate of every project announced for ``target_year``.

    The cohort is taken from the earlier vintage (launch year equal to the
    target year, synthetic confidential shares excluded) and judged against
    the final vintage:

    * success      -- present, Operational, launch year still the target year
                      (or moved earlier; flagged ``early``)
    * delayed      -- present with a later launch year, or still listed for
                      the target year without having become operational
    * disappeared  -- absent from the final vintage, or decommissioned

    Capacity changes between the two vintages are reconciled with dummy
    adjustments so announced capacity is conserved. The middle vintage only
    contributes the revised cohort expectation for reporting.
    """
    if not (earlier.vintage_year <= later.vintage_year <= final.vintage_year):
        raise ValueError(
            f"snapshot vintages must be in non-decreasing order, got "
            f"{earlier.vintage_year}, {later.vintage_year}, {final.vintage_year}")
    if target_year > final.vintage_year:
        raise ValueError(f"target year {target_year} is after the final vintage "
                         f"{final.vintage_year}")
    cohort = [r for r in earlier.records
              if r.launch_year == target_year and not r.synthetic]
    final_by_ref = final.by_ref()
    fates: list[ProjectFate] = []
    for rec in cohort:
        cap_e = rec.capacity_mw or 0.0
        fin = final_by_ref.get(rec.ref_id)
        if fin is None or fin.synthetic:
            fates.append(ProjectFate(rec.ref_id, rec.name, rec.status,
                                     Fate.DISAPPEARED, cap_e))
            continue
        if fin.status is Status.DECOMMISSIONED:
            fates.append(ProjectFate(rec.ref_id, rec.name, rec.status,
                                     Fate.DISAPPEARED, cap_e,
                                     final_status=fin.status,
                                     final_launch_year=fin.launch_year))
            continue
        cap_f = fin.capacity_mw or 0.0
        dummy = cap_e - cap_f
        fl = fin.launch_year if fin.launch_year is not None else target_year
        if fin.status is Status.OPERATIONAL and fl <= target_year:
            fates.append(ProjectFate(rec.ref_id, rec.name, rec.status,
                                     Fate.SUCCESS, cap_f, dummy,
                                     final_status=fin.status, final_launch_year=fl,
                                     early=fl < target_year))
        else:
            fates.append(ProjectFate(
                rec.ref_id, rec.name, rec.status, Fate.DELAYED, cap_f, dummy,
                final_status=fin.status, final_launch_year=fl,
                operational_late=fin.status is Status.OPERATIONAL and fl > target_year))
    later_cohort_mw = sum(r.capacity_mw or 0.0 for r in later.records
                          if r.launch_year == target_year and not r.synthetic)
    return TransitionReport(
        target_year=target_year, earlier_vintage=earlier.vintage_year,
        later_vintage=later.vintage_year, final_vintage=final.vintage_year,
        fates=tuple(fates), announced_mw=sum(r.capacity_mw or 0.0 for r in cohort),
        later_announced_mw=later_cohort_mw)


@dataclass(frozen=True)
class FateShares:
    success: float
    delayed: float
    disappeared: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.success, self.delayed, self.disappeared)


@dataclass(frozen=True)
class FateRates:
    target_year: int
    total: FateShares
    by_status: Mapping[Status, FateShares] | None = None


def _shares(fates: Sequence[ProjectFate]) -> FateShares:
    total = sum(f.capacity_mw for f in fates)
    if total <= 0.0:
        raise ValueError("no announced capacity to compute fate shares")
    by_fate = {fate: sum(f.capacity_mw for f in fates if f.fate is fate)
               for fate in Fate}
    return FateShares(success=by_fate[Fate.SUCCESS] / total,
                      delayed=by_fate[Fate.DELAYED] / total,
                      disappeared=by_fate[Fate.DISAPPEARED] / total)


def fate_rates(report: TransitionReport, by_status: bool = False) -> FateRates:
    """Capacity-weighted success/delay/disappearance shares.

    Dummy adjustments are excluded from the denominators; grouping is by the
    status each project had in the earlier vintage.
    """
    if not report.fates:
        raise ValueError("transition report is empty")
    grouped = None
    if by_status:
        grouped = {}
        for status in sorted({f.status_announced for f in report.fates},
                             key=lambda s: s.value):
            members = [f for f in report.fates if f.status_announced is status]
            if sum(f.capacity_mw for f in members) > 0.0:
                grouped[status] = _shares(members)
    return FateRates(target_year=report.target_year, total=_shares(report.fates),
                     by_status=grouped)


def implementation_gap(earlier: Snapshot, realized_gw: float,
                       target_year: int) -> float:
    """Announced capacity for the target year minus realised capacity, >= 0 (GW)."""
    announced_mw = sum(r.capacity_mw or 0.0 for r in earlier.records
                       if r.launch_year == target_year)
    return max(0.0, announced_mw / 1000.0 - realized_gw)


# ---------------------------------------------------------------------------
# Pipeline aggregation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CapacitySeries:
    """Annual and cumulative announced capacity (GW), grouped."""
    group_by: str
    years: tuple[int, ...]
    groups: tuple[str, ...]
    annual_gw: Mapping[tuple[str, int], float]

    def annual(self, group: str, year: int) -> float:
        return self.annual_gw.get((group, year), 0.0)

    def annual_total(self, year: int) -> float:
        return sum(v for (_, y), v in self.annual_gw.items() if y == year)

    def cumulative(self, group: str, through_year: int) -> float:
        return sum(v for (g, y), v in self.annual_gw.items()
                   if g == group and y <= through_year)

    def cumulative_total(self, through_year: int | None = None) -> float:
        if not self.years:
            return 0.0
        last = self.years[-1] if through_year is None else through_year
        return sum(v for (_, y), v in self.annual_gw.items() if y <= last)

    def rows(self) -> list[dict]:
        out = []
        for group in self.groups:
            for year in self.years:
                out.append({"group": group, "year": year,
                            "annual_gw": self.annual(group, year),
                            "cumulative_gw": self.cumulative(group, year)})
        return out


def pipeline(snapshot: Snapshot, through_year: int,
             group_by: str = "year") -> CapacitySeries:
    """Announced capacity additions per launch year up to ``through_year``.

    ``group_by`` is one of ``year``, ``status`` or ``region``. Cumulative
    values include every launch year from the earliest record. Decommissioned
    records are excluded: they are no longer part of the expected stock.
    """
    if group_by not in ("year", "status", "region"):
        raise ValueError(f"group_by must be year/status/region, got {group_by!r}")
    annual: dict[tuple[str, int], float] = {}
    for rec in snapshot.records:
        if rec.launch_year is None or rec.launch_year > through_year:
            continue
        if rec.status is Status.DECOMMISSIONED:
            continue
        if group_by == "year":
            key = str(rec.launch_year)
        elif group_by == "status":
            key = rec.status.value
        else:
            key = rec.region
        k = (key, rec.launch_year)
        annual[k] = annual.get(k, 0.0) + (rec.capacity_mw or 0.0) / 1000.0
    years = tuple(sorted({y for _, y in annual}))
    groups = tuple(sorted({g for g, _ in annual}))
    return CapacitySeries(group_by=group_by, years=years, groups=groups,
                          annual_gw=annual)


# ---------------------------------------------------------------------------
# Sankey flows
# ---------------------------------------------------------------------------

ENTERING = "new_or_delayed_in"
INCREASED = "capacity_increased"
REDUCED = "capacity_reduced"
DISAPPEARED = "disappeared"
DELAYED_OUT = "delayed_out"
MOVED_EARLIER = "moved_earlier"
REALIZED = "realized"
NOT_REALIZED = "not_realized"

_BOOKKEEPING = {ENTERING, INCREASED, REDUCED, DISAPPEARED, DELAYED_OUT,
                MOVED_EARLIER, REALIZED, NOT_REALIZED}


@dataclass(frozen=True)
class SankeyNode:
    stage: int
    label: str
    capacity_gw: float


@dataclass(frozen=True)
class SankeyFlow:
    stage_from: int
    label_from: str
    stage_to: int
    label_to: str
    capacity_gw: float


@dataclass(frozen=True)
class SankeyData:
    target_year: int
    stages: tuple[str, ...]       # one label per vintage plus "outcome"
    nodes: tuple[SankeyNode, ...]
    flows: tuple[SankeyFlow, ...]

    def stage_total_gw(self, stage: int) -> float:
        """Capacity of the target-year cohort at one stage (status nodes only)."""
        return sum(n.capacity_gw for n in self.nodes
                   if n.stage == stage and n.label not in _BOOKKEEPING)

    def node_balance_errors(self, tol_gw: float = 1e-9) -> list[str]:
        """Internal status nodes whose inflow and outflow disagree."""
        inflow: dict[tuple[int, str], float] = {}
        outflow: dict[tuple[int, str], float] = {}
        for f in self.flows:
            outflow[(f.stage_from, f.label_from)] = \
                outflow.get((f.stage_from, f.label_from), 0.0) + f.capacity_gw
            inflow[(f.stage_to, f.label_to)] = \
                inflow.get((f.stage_to, f.label_to), 0.0) + f.capacity_gw
        bad = []
        last_stage = len(self.stages) - 1
        for node in self.nodes:
            if node.label in _BOOKKEEPING or not 0 < node.stage < last_stage:
                continue
            key = (node.stage, node.label)
            if abs(inflow.get(key, 0.0) - outflow.get(key, 0.0)) > tol_gw:
                bad.append(f"stage {node.stage} {node.label}: in "
                           f"{inflow.get(key, 0.0)} != out {outflow.get(key, 0.0)}")
        return bad

    def node_rows(self) -> list[dict]:
        return [{"stage": n.stage, "stage_label": self.stages[n.stage],
                 "node": n.label, "capacity_gw": n.capacity_gw} for n in self.nodes]

    def flow_rows(self) -> list[dict]:
        return [{"stage_from": f.stage_from, "node_from": f.label_from,
                 "stage_to": f.stage_to, "node_to": f.label_to,
                 "capacity_gw": f.capacity_gw} for f in self.flows]


def sankey_flows(snapshots: Sequence[Snapshot], target_year: int) -> SankeyData:
    """Cohort development across vintages as Sankey nodes and flows (GW).

    One stage per snapshot plus a final outcome stage (realized vs not).
    Projects joining the cohort in a later vintage enter through
    ``new_or_delayed_in`` source nodes; capacity revisions between vintages
    are booked against ``capacity_increased`` / ``capacity_reduced`` nodes so
    that every internal status node balances exactly.
    """
    if len(snapshots) < 2:
        raise ValueError("need at least two snapshots for a Sankey layout")
    vintages = [s.vintage_year for s in snapshots]
    if any(b < a for a, b in zip(vintages, vintages[1:])):
        raise ValueError(f"snapshots must be ordered by vintage, got {vintages}")

    def cohort(snap: Snapshot) -> dict[str, ProjectRecord]:
        return {r.ref_id: r for r in snap.records
                if r.launch_year == target_year and not r.synthetic}

    cohorts = [cohort(s) for s in snapshots]
    flow_acc: dict[tuple[int, str, int, str], float] = {}

    def add_flow(stage_from: int, label_from: str, stage_to: int, label_to: str,
                 mw: float) -> None:
        if mw <= 0.0:
            return
        key = (stage_from, label_from, stage_to, label_to)
        flow_acc[key] = flow_acc.get(key, 0.0) + mw / 1000.0

    n = len(snapshots)
    for i in range(n - 1):
        cur, nxt = cohorts[i], cohorts[i + 1]
        nxt_by_ref = snapshots[i + 1].by_ref()
        for ref in sorted(set(cur) | set(nxt)):
            if ref in cur and ref in nxt:
                c0 = cur[ref].capacity_mw or 0.0
                c1 = nxt[ref].capacity_mw or 0.0
                add_flow(i, cur[ref].status.value, i + 1, nxt[ref].status.value,
                         min(c0, c1))
                if c0 > c1:
                    add_flow(i, cur[ref].status.value, i + 1, REDUCED, c0 - c1)
                elif c1 > c0:
                    add_flow(i, INCREASED, i + 1, nxt[ref].status.value, c1 - c0)
            elif ref in cur:
                rec = cur[ref]
                moved = nxt_by_ref.get(ref)
                if moved is not None and not moved.synthetic and \
                        moved.launch_year is not None:
                    label = DELAYED_OUT if moved.launch_year > target_year \
                        else MOVED_EARLIER
                else:
                    label = DISAPPEARED
                add_flow(i, rec.status.value, i + 1, label, rec.capacity_mw or 0.0)
            else:
                add_flow(i, ENTERING, i + 1, nxt[ref].status.value,
                         nxt[ref].capacity_mw or 0.0)
    # outcome stage: realised on schedule vs still open
    for ref in sorted(cohorts[-1]):
        rec = cohorts[-1][ref]
        label = REALIZED if rec.status is Status.OPERATIONAL else NOT_REALIZED
        add_flow(n - 1, rec.status.value, n, label, rec.capacity_mw or 0.0)

    nodes: dict[tuple[int, str], float] = {}
    for i, members in enumerate(cohorts):
        for rec in members.values():
            key = (i, rec.status.value)
            nodes[key] = nodes.get(key, 0.0) + (rec.capacity_mw or 0.0) / 1000.0
    for (sf, lf, st, lt), gw in flow_acc.items():
        if lf in _BOOKKEEPING:
            nodes[(sf, lf)] = nodes.get((sf, lf), 0.0) + gw
        if lt in _BOOKKEEPING:
            nodes[(st, lt)] = nodes.get((st, lt), 0.0) + gw

    stages = tuple(str(v) for v in vintages) + ("outcome",)
    node_list = tuple(SankeyNode(stage, label, gw)
                      for (stage, label), gw in sorted(nodes.items()))
    flow_list = tuple(SankeyFlow(sf, lf, st, lt, gw)
                      for (sf, lf, st, lt), gw in sorted(flow_acc.items()))
    return SankeyData(target_year=target_year, stages=stages,
                      nodes=node_list, flows=flow_list)
