"""Command-line interface.

Commands::

    h2gap track      --snapshots s21.csv,s22.csv,s23.csv --target-year 2022
    h2gap ambition   [--year 2030] [--exclude-outliers true|false]
    h2gap lcoh       [--scenario central] [--horizon 2045]
    h2gap gap        [--scenario central] [--carbon-pricing on|off]
    h2gap subsidies  [--through 2045] [--include-post2030]
    h2gap support    --budget 308 [--allocation chronological|uniform]
    h2gap sweep      [--horizon 2045]

Common flags: ``--params FILE``, ``--scenario``, ``--carbon-pricing on|off``,
``--horizon YEAR``, ``--format csv|json``, ``--out DIR``, ``--pipeline FILE``,
``--scenarios-file FILE``, ``--policy-mt MT``. Bundled fixture data is used
for anything not supplied; ``H2GAP_DATA_DIR`` points all defaults somewhere
else.

Exit codes: 0 on success; 2 for usage, configuration and file/schema
problems; 3 for data-validation failures in otherwise well-formed inputs
(bad row values are reported with line numbers).

Output is fully deterministic: rerunning a command yields byte-identical
files, and the CSV and JSON renderings carry identical values.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from pathlib import Path

from . import fixtures
from .costs import CapacityTrajectory, ParamSet, lcoh
from .projects import (
    SnapshotDataError,
    SnapshotSchemaError,
    fate_rates,
    load_snapshot,
    pipeline,
    sankey_flows,
    track,
)
from .scenarios import ambition_gap, load_requirements, stats
from .subsidies import (
    annual_subsidies,
    capacity_supported_by_budget,
    cost_gap,
    cumulative_subsidies,
    demand_supported_additions,
    gas_cost,
    parity_year,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3


class ConfigError(Exception):
    """Configuration / input-schema problem (exit code 2)."""


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--params", metavar="FILE",
                        help="parameter JSON overriding the bundled scenario file")
    parser.add_argument("--scenario", default="central",
                        choices=["central", "progressive", "conservative"])
    parser.add_argument("--carbon-pricing", default="off", choices=["on", "off"])
    parser.add_argument("--horizon", type=int, default=2045)
    parser.add_argument("--format", default="csv", choices=["csv", "json"])
    parser.add_argument("--out", metavar="DIR", default="h2gap_out",
                        help="output directory (default: ./h2gap_out)")
    parser.add_argument("--pipeline", metavar="FILE",
                        help="capacity-addition CSV (default: bundled fixture)")
    parser.add_argument("--scenarios-file", metavar="FILE",
                        help="scenario requirement CSV (default: bundled fixture)")
    parser.add_argument("--policy-mt", type=float, default=7.0,
                        help="demand-side policy volume in Mt H2/yr (default 7)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="h2gap",
        description="Green hydrogen project tracking, LCOH and subsidy gaps.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("track", help="track a launch-year cohort across vintages")
    p.add_argument("--snapshots", required=True,
                   help="comma-separated snapshot CSVs, oldest first")
    p.add_argument("--target-year", type=int, required=True)
    p.add_argument("--vintages",
                   help="comma-separated vintage years (default: from file names)")
    _common_flags(p)

    p = sub.add_parser("ambition", help="scenario statistics and the ambition gap")
    p.add_argument("--year", type=int, default=2030)
    p.add_argument("--exclude-outliers", default="true", choices=["true", "false"])
    p.add_argument("--snapshot", metavar="FILE",
                   help="project snapshot for the pipeline side "
                        "(default: bundled 2023 vintage)")
    _common_flags(p)

    p = sub.add_parser("lcoh", help="levelised cost of hydrogen by year")
    _common_flags(p)

    p = sub.add_parser("gap", help="cost gap between hydrogen and natural gas")
    _common_flags(p)

    p = sub.add_parser("subsidies", help="required annual and cumulative subsidies")
    p.add_argument("--through", type=int,
                   help="last payment year (default: --horizon)")
    p.add_argument("--include-post2030", action="store_true",
                   help="also subsidise build years after 2030 along the "
                        "scenario-median continuation")
    _common_flags(p)

    p = sub.add_parser("support", help="capacity supportable by a subsidy budget")
    p.add_argument("--budget", type=float, required=True, metavar="BUSD",
                   help="available subsidies in billion US$")
    p.add_argument("--allocation", default="chronological",
                   choices=["chronological", "uniform"])
    _common_flags(p)

    p = sub.add_parser("sweep", help="scenario x carbon-pricing summary sweep")
    _common_flags(p)
    return parser


# ---------------------------------------------------------------------------
# Output helpers
# ---------------------------------------------------------------------------

def _write_rows(rows: list[dict], out_dir: Path, name: str, fmt: str) -> Path:
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"{name}.{fmt}"
    if fmt == "json":
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2)
            fh.write("\n")
    else:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            if rows:
                writer = csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
                writer.writeheader()
                writer.writerows(rows)
    return path


def _require_file(path_text: str | None, fallback: Path, what: str) -> Path:
    path = Path(path_text) if path_text else fallback
    if not path.is_file():
        raise ConfigError(f"{what} not found: {path}")
    return path


def _load_params(args) -> ParamSet:
    if args.params:
        path = _require_file(args.params, Path(args.params), "parameter file")
        try:
            return ParamSet.from_json(path)
        except (ValueError, json.JSONDecodeError) as exc:
            raise ConfigError(f"bad parameter file {path}: {exc}") from None
    path = _require_file(None, fixtures.params_path(args.scenario), "parameter file")
    return ParamSet.from_json(path)


def _load_pipeline(args) -> CapacityTrajectory:
    path = _require_file(args.pipeline, fixtures.pipeline_path(), "pipeline file")
    return fixtures.load_pipeline(path)


def _load_requirements(args):
    path = _require_file(args.scenarios_file, fixtures.requirements_path(),
                         "scenario requirement file")
    return load_requirements(path)


def _extended_trajectory(args, pipe: CapacityTrajectory) -> CapacityTrajectory:
    if args.horizon <= pipe.last_year:
        return pipe
    return fixtures.median_extended_pipeline(args.horizon, pipeline=pipe,
                                             requirements=_load_requirements(args))


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_track(args) -> int:
    paths = [p.strip() for p in args.snapshots.split(",") if p.strip()]
    if len(paths) < 2:
        raise ConfigError("track needs at least two snapshot files")
    if args.vintages:
        vintages = [int(v) for v in args.vintages.split(",")]
        if len(vintages) != len(paths):
            raise ConfigError("--vintages must match the number of snapshots")
    else:
        vintages = []
        for p in paths:
            m = re.search(r"(\d{4})", Path(p).stem)
            if not m:
                raise ConfigError(f"cannot infer vintage year from {p!r}; "
                                  "pass --vintages")
            vintages.append(int(m.group(1)))
    snaps = [load_snapshot(_require_file(p, Path(p), "snapshot"), v)
             for p, v in zip(paths, vintages)]
    for snap, path in zip(snaps, paths):
        rep = snap.load_report
        print(f"loaded {path}: {rep.kept} kept, {rep.dropped} dropped "
              f"{dict(rep.dropped_reasons) or ''}")

    report = track(snaps[0], snaps[1] if len(snaps) > 2 else snaps[0],
                   snaps[-1], args.target_year)
    rates = fate_rates(report, by_status=True)
    sankey = sankey_flows(snaps, args.target_year)

    out = Path(args.out)
    _write_rows(report.rows(), out, "transitions", args.format)
    rate_rows = [{"group": "total", **_share_row(rates.total)}]
    rate_rows += [{"group": status.value, **_share_row(shares)}
                  for status, shares in (rates.by_status or {}).items()]
    _write_rows(rate_rows, out, "fate_rates", args.format)
    _write_rows(sankey.node_rows(), out, "sankey_nodes", args.format)
    _write_rows(sankey.flow_rows(), out, "sankey_flows", args.format)

    announced_gw = report.announced_mw / 1000.0
    print(f"\ncohort {args.target_year}: announced {announced_gw:.3f} GW "
          f"(vintage {report.earlier_vintage}), realised on time "
          f"{report.realized_mw / 1000.0:.3f} GW")
    print(f"{'group':<20} {'success':>8} {'delayed':>8} {'disappeared':>12}")
    for row in rate_rows:
        print(f"{row['group']:<20} {row['success']:>8.1%} {row['delayed']:>8.1%} "
              f"{row['disappeared']:>12.1%}")
    return EXIT_OK


def _share_row(shares) -> dict:
    return {"success": shares.success, "delayed": shares.delayed,
            "disappeared": shares.disappeared}


def cmd_ambition(args) -> int:
    reqs = _load_requirements(args)
    exclude = args.exclude_outliers == "true"
    year_reqs = [r for r in reqs if r.year == args.year
                 and not (exclude and r.outlier)]
    if not year_reqs:
        raise ConfigError(f"no scenario requirements for {args.year}")
    st = stats(reqs, args.year, exclude_outliers=exclude)
    snap_path = _require_file(args.snapshot, fixtures.snapshot_path(2023),
                              "snapshot")
    m = re.search(r"(\d{4})", snap_path.stem)
    snap = load_snapshot(snap_path, int(m.group(1)) if m else 0)
    pipe_gw = pipeline(snap, args.year).cumulative_total(args.year)

    out = Path(args.out)
    stat_rows = [{"year": st.year, "n": st.n, "min_gw": st.minimum,
                  "q1_gw": st.q1, "median_gw": st.median, "q3_gw": st.q3,
                  "max_gw": st.maximum, "pipeline_gw": pipe_gw,
                  "median_gap_gw": ambition_gap(st.median, pipe_gw)}]
    _write_rows(stat_rows, out, "ambition_stats", args.format)
    gap_rows = [{"source": r.source, "scenario_name": r.scenario_name,
                 "requirement_gw": r.capacity_gw,
                 "gap_gw": ambition_gap(r.capacity_gw, pipe_gw)}
                for r in sorted(year_reqs, key=lambda r: (r.capacity_gw, r.source))]
    _write_rows(gap_rows, out, "ambition_gaps", args.format)

    print(f"requirements {args.year}: n={st.n} median={st.median:.0f} GW "
          f"IQR {st.q1:.0f}-{st.q3:.0f} GW range {st.minimum:.0f}-{st.maximum:.0f} GW")
    print(f"pipeline through {args.year}: {pipe_gw:.1f} GW")
    print(f"median ambition gap: {ambition_gap(st.median, pipe_gw):.1f} GW "
          f"({sum(1 for r in gap_rows if r['gap_gw'] <= 0)} of {st.n} scenarios "
          "already covered)")
    return EXIT_OK


def cmd_lcoh(args) -> int:
    params = _load_params(args)
    traj = _extended_trajectory(args, _load_pipeline(args))
    rows = []
    for year in range(2024, args.horizon + 1):
        b = lcoh(year, traj, params)
        rows.append({"year": year, "electricity": b.electricity,
                     "stack_capital": b.stack_capital,
                     "bop_capital": b.bop_capital,
                     "transport_storage": b.transport_storage,
                     "lcoh": b.total,
                     "investment_total_usd_per_kw":
                         b.investment_stack + b.investment_bop,
                     "efficiency": b.efficiency})
    _write_rows(rows, Path(args.out), "lcoh", args.format)
    print(f"{'year':<6} {'LCOH':>8} {'elec':>8} {'stack':>8} {'BoP':>8} {'T&S':>6}")
    for r in rows:
        print(f"{r['year']:<6} {r['lcoh']:>8.1f} {r['electricity']:>8.1f} "
              f"{r['stack_capital']:>8.1f} {r['bop_capital']:>8.1f} "
              f"{r['transport_storage']:>6.1f}")
    return EXIT_OK


def cmd_gap(args) -> int:
    params = _load_params(args)
    carbon = args.carbon_pricing == "on"
    traj = _extended_trajectory(args, _load_pipeline(args))
    rows = []
    for year in range(2024, args.horizon + 1):
        total = lcoh(year, traj, params).total
        gas = gas_cost(year, params, carbon).total
        rows.append({"year": year, "lcoh": total, "gas_total": gas,
                     "gap": total - gas})
    _write_rows(rows, Path(args.out), "gap", args.format)
    parity = parity_year(traj, params, carbon, args.horizon)
    print(f"{'year':<6} {'LCOH':>8} {'gas':>8} {'gap':>8}")
    for r in rows:
        print(f"{r['year']:<6} {r['lcoh']:>8.1f} {r['gas_total']:>8.1f} "
              f"{r['gap']:>8.1f}")
    print(f"parity year ({params.scenario_id}, carbon {args.carbon_pricing}): "
          f"{parity if parity else 'none through ' + str(args.horizon)}")
    return EXIT_OK


def cmd_subsidies(args) -> int:
    params = _load_params(args)
    carbon = args.carbon_pricing == "on"
    through = args.through if args.through else args.horizon
    pipe = _load_pipeline(args)
    supported = demand_supported_additions(params, pipe, args.policy_mt)
    if args.include_post2030:
        traj = fixtures.median_extended_pipeline(
            through, pipeline=pipe, requirements=_load_requirements(args))
    else:
        traj = pipe
    schedule = cumulative_subsidies(traj.with_supported(supported), params,
                                    carbon, through)
    _write_rows(schedule.rows(), Path(args.out), "subsidies", args.format)
    peak_year, peak = schedule.peak()
    print(f"{'year':<6} {'annual $bn':>12} {'cumulative $bn':>15}")
    for y, a, c in zip(schedule.years, schedule.annual_busd,
                       schedule.cumulative_busd):
        print(f"{y:<6} {a:>12.2f} {c:>15.1f}")
    print(f"cumulative through {through}: {schedule.total_busd:.0f} $bn "
          f"(peak {peak:.1f} $bn in {peak_year})")
    return EXIT_OK


def cmd_support(args) -> int:
    params = _load_params(args)
    carbon = args.carbon_pricing == "on"
    pipe = _load_pipeline(args)
    result = capacity_supported_by_budget(args.budget, params, carbon, pipe,
                                          policy_mt=args.policy_mt,
                                          allocation=args.allocation)
    rows = [{"budget_busd": result.budget_busd,
             "subsidy_supported_gw": result.subsidy_supported_gw,
             "demand_supported_gw": result.demand_supported_gw,
             "total_supported_gw": result.total_supported_gw,
             "spent_busd": result.spent_busd,
             "saturated": result.saturated,
             "allocation": result.allocation,
             "scenario": params.scenario_id,
             "carbon_pricing": args.carbon_pricing}]
    _write_rows(rows, Path(args.out), "support", args.format)
    flag = " (budget exceeds full-pipeline requirement)" if result.saturated else ""
    print(f"budget {result.budget_busd:.0f} $bn supports "
          f"{result.subsidy_supported_gw:.1f} GW by 2030{flag}")
    print(f"demand-side policy supports a further "
          f"{result.demand_supported_gw:.1f} GW")
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.params:
        raise ConfigError("sweep uses the three bundled scenario files; "
                          "--params is not applicable")
    pipe = _load_pipeline(args)
    reqs = _load_requirements(args)
    extended = fixtures.median_extended_pipeline(args.horizon, pipeline=pipe,
                                                 requirements=reqs)
    rows = []
    for scenario in ("central", "progressive", "conservative"):
        params = ParamSet.from_json(fixtures.params_path(scenario))
        supported = demand_supported_additions(params, pipe, args.policy_mt)
        traj = pipe.with_supported(supported)
        for carbon in (False, True):
            schedule = cumulative_subsidies(traj, params, carbon, args.horizon)
            peak_year, peak = schedule.peak()
            parity = parity_year(extended, params, carbon, args.horizon)
            rows.append({"scenario": scenario,
                         "carbon_pricing": "on" if carbon else "off",
                         "cumulative_busd": schedule.total_busd,
                         "annual_peak_busd": peak,
                         "peak_year": peak_year,
                         "parity_year": parity if parity else ""})
    _write_rows(rows, Path(args.out), "sweep", args.format)
    print(f"{'scenario':<14} {'carbon':<7} {'cum $bn':>9} {'peak $bn':>9} "
          f"{'peak yr':>8} {'parity':>7}")
    for r in rows:
        print(f"{r['scenario']:<14} {r['carbon_pricing']:<7} "
              f"{r['cumulative_busd']:>9.0f} {r['annual_peak_busd']:>9.1f} "
              f"{r['peak_year']:>8} {str(r['parity_year'] or '-'):>7}")
    return EXIT_OK


_COMMANDS = {
    "track": cmd_track,
    "ambition": cmd_ambition,
    "lcoh": cmd_lcoh,
    "gap": cmd_gap,
    "subsidies": cmd_subsidies,
    "support": cmd_support,
    "sweep": cmd_sweep,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SnapshotSchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SnapshotDataError as exc:
        print(f"error: {exc.path}: {len(exc.row_errors)} bad row(s)",
              file=sys.stderr)
        for line, msg in exc.row_errors:
            print(f"  line {line}: {msg}", file=sys.stderr)
        return EXIT_DATA
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
