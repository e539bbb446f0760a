"""Command-line front end.

Four subcommands: analyze (list records -> scaling points, trends,
ratios, rank agreement), simulate (timeline scenario -> timing
breakdown), bounds (design numbers -> floors on 1 - alpha), forecast
(scaling curves and feasibility verdicts).

Reports are deterministic: the same invocation on the same inputs
produces the same bytes. Inputs are identified by path and sha256
digest, never by timestamps. Text output shows 6 significant digits;
--json emits the same report at full precision.

Exit codes: 0 success, 1 usage error, 2 unusable input.

The analyze subcommand reads the dataset path from --dataset, then the
PARLIMITS_DATASET environment variable, then falls back to the packaged
June 2017 records.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import warnings
from dataclasses import dataclass, field

from . import __version__
from .amdahl import AlphaValue
from .bounds import (
    bound_context_switch,
    bound_os_looping,
    bound_propagation,
    bound_start_stop,
    combined_limit,
    mpe_grouping_effect,
)
from .errors import SchemaError
from .forecast import feasibility, virtual_scale
from .ingest import bundled_csv_text, derive_points, load_csv, parse_csv
from .stats import AxisSpec, RankPairing, cross_benchmark_ratio, fit_by_category, is_weak_agreement, rank_correlation
from .timeline import load_scenario, simulate

DATASET_ENV_VAR = "PARLIMITS_DATASET"

# Per-unit rows beyond this would bloat reports without informing anyone.
MAX_UNIT_ROWS = 32


@dataclass
class ReportTable:
    title: str
    columns: tuple[str, ...]
    rows: list[tuple]


@dataclass
class ReportDocument:
    """Everything one invocation produced, renderable as text or JSON."""

    command: str
    version: str = __version__
    inputs: list[dict[str, str]] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)
    tables: list[ReportTable] = field(default_factory=list)

    def add_input(self, label: str, text: str) -> None:
        digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
        self.inputs.append({"source": label, "sha256": digest})

    def add_table(self, title: str, columns: tuple[str, ...], rows: list[tuple]) -> ReportTable:
        table = ReportTable(title, columns, rows)
        self.tables.append(table)
        return table

    def to_json(self) -> str:
        doc = {
            "tool": "parlimits",
            "version": self.version,
            "command": self.command,
            "inputs": self.inputs,
            "counts": self.counts,
            "warnings": self.warnings,
            "tables": [
                {"title": t.title, "columns": list(t.columns),
                 "rows": [list(r) for r in t.rows]}
                for t in self.tables
            ],
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"parlimits {self.version}", f"command: {self.command}"]
        for item in self.inputs:
            lines.append(f"input: {item['source']} sha256={item['sha256']}")
        for key in sorted(self.counts):
            lines.append(f"{key}: {self.counts[key]}")
        for message in self.warnings:
            lines.append(f"warning: {message}")
        for table in self.tables:
            lines.append("")
            lines.append(table.title)
            lines.extend(_render_table(table))
        return "\n".join(lines) + "\n"


def _cell(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.5e}"
    return str(value)


def _render_table(table: ReportTable) -> list[str]:
    cells = [list(table.columns)] + [[_cell(v) for v in row] for row in table.rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(table.columns))]
    out = []
    for row in cells:
        out.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return out


class _Parser(argparse.ArgumentParser):
    """argparse, but usage failures exit 1 instead of 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="parlimits", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"parlimits {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("analyze", help="scaling points and trends from list records")
    p.add_argument("--dataset", help="record CSV (default: env or packaged data)")
    p.add_argument("--fits", action="store_true", help="per-architecture trend fits")
    p.add_argument("--ratios", action="store_true", help="cross-benchmark alpha ratios")
    p.add_argument("--rank-correlation", action="store_true",
                   help="rank agreement between benchmarks")
    p.add_argument("--weak-threshold", type=float, default=0.5,
                   help="|rho| below this counts as weak agreement")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("simulate", help="run a timeline scenario file")
    p.add_argument("scenario", help="scenario file (key = value lines)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("bounds", help="design-number floors on 1 - alpha")
    p.add_argument("--total-cycles", type=float, required=True)
    p.add_argument("--start-stop-cycles", type=float, required=True)
    p.add_argument("--distance-m", type=float, required=True)
    p.add_argument("--clock-hz", type=float, required=True)
    p.add_argument("--message-time-s", type=float, default=0.0)
    p.add_argument("--context-switch-cycles", type=float, required=True)
    p.add_argument("--n-units", type=int, required=True)
    p.add_argument("--dispatch-cycles", type=float, required=True)
    p.add_argument("--cores-per-group", type=int,
                   help="enable grouped dispatch with this block size")
    p.add_argument("--mpe-per-group", type=int,
                   help="management cores sacrificed per block")
    p.add_argument("--full-precision", action="store_true",
                   help="print bounds at full precision instead of 1 digit")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("forecast", help="scaling curves and feasibility")
    p.add_argument("--target", type=float, required=True, help="target rate, flop/s")
    p.add_argument("--per-processor-perf", type=float, required=True,
                   help="single unit rate, flop/s")
    p.add_argument("--achieved-one-minus-alpha", type=float, required=True)
    p.add_argument("--achieved-source", default="measured")
    p.add_argument("--marginal-factor", type=float, default=2.0)
    p.add_argument("--rpeak-max", type=float,
                   help="sweep ceiling, flop/s (default 10x target)")
    p.add_argument("--curves-dir", help="write each curve as a two-column CSV here")
    p.add_argument("--json", action="store_true")

    return parser


# ---- analyze ---------------------------------------------------------------

def _cmd_analyze(args: argparse.Namespace, report: ReportDocument) -> int:
    if args.dataset:
        source = args.dataset
    else:
        source = os.environ.get(DATASET_ENV_VAR, "")
    if source:
        records = load_csv(source)
        report.add_input(source, open(source, encoding="utf-8").read())
    else:
        text = bundled_csv_text()
        records = parse_csv(text, source="packaged:top500_2017.csv")
        report.add_input("packaged:top500_2017.csv", text)

    report.counts["records"] = len(records.records)
    report.counts["quarantined"] = len(records.rejections)
    for rej in records.rejections:
        report.warnings.append(f"row {rej.row_number} quarantined: {rej.reason}")
    if not records.records:
        report.warnings.append("no usable records in input; nothing to analyze")
        return 0

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        points = derive_points(records.records)
    for w in caught:
        report.warnings.append(str(w.message))

    rows = [
        (rec.name, rec.benchmark, rec.rank, rec.cores, point.efficiency,
         point.speedup, point.alpha_eff.one_minus_alpha, point.amplification)
        for rec, point in points
    ]
    report.add_table(
        "scaling points",
        ("name", "benchmark", "rank", "cores", "efficiency", "speedup",
         "one_minus_alpha", "amplification"),
        rows,
    )

    by_name: dict[str, dict[str, tuple]] = {}
    for rec, point in points:
        by_name.setdefault(rec.name, {})[rec.benchmark] = (rec, point)

    if args.fits:
        cat_points = [
            (f"{rec.benchmark}/{rec.architecture}", float(rec.rank),
             point.alpha_eff.one_minus_alpha)
            for rec, point in points
        ]
        fits, unfit = fit_by_category(cat_points, AxisSpec(x="linear", y="log10"))
        fit_rows = [
            (cat, f.n, f.slope, f.intercept, f.rms_residual)
            for cat, f in sorted(fits.items())
        ]
        report.add_table(
            "trend fits: log10(one_minus_alpha) vs rank",
            ("category", "n", "slope", "intercept", "rms_residual"),
            fit_rows,
        )
        for cat, count in sorted(unfit.items()):
            report.warnings.append(
                f"category {cat}: only {count} point(s), no fit possible"
            )

    both = {
        name: entry for name, entry in by_name.items()
        if "HPL" in entry and "HPCG" in entry
    }

    if args.ratios:
        if both:
            names = sorted(both)
            pairs = [
                (both[n]["HPL"][1].alpha_eff.one_minus_alpha,
                 both[n]["HPCG"][1].alpha_eff.one_minus_alpha)
                for n in names
            ]
            summary = cross_benchmark_ratio(pairs)
            ratio_rows = [
                (n, p[0], p[1], r)
                for n, p, r in zip(names, pairs, summary.ratios)
            ]
            report.add_table(
                "one_minus_alpha ratios HPCG/HPL",
                ("name", "hpl", "hpcg", "ratio"),
                ratio_rows,
            )
            report.add_table(
                "ratio summary",
                ("median", "band_low", "band_high", "plausible"),
                [(summary.median, summary.band[0], summary.band[1], summary.plausible)],
            )
        else:
            report.warnings.append("no machine appears under both benchmarks; no ratios")

    if args.rank_correlation:
        if len(both) >= 3:
            pairing = RankPairing.from_raw(
                (name, both[name]["HPL"][0].rank, both[name]["HPCG"][0].rank)
                for name in sorted(both)
            )
            rho = rank_correlation(pairing)
            report.add_table(
                "rank agreement HPL vs HPCG",
                ("n", "spearman_rho", "weak_agreement"),
                [(len(pairing), rho, is_weak_agreement(rho, args.weak_threshold))],
            )
        else:
            report.warnings.append(
                "fewer than 3 machines under both benchmarks; no rank correlation"
            )
    return 0


# ---- simulate --------------------------------------------------------------

def _cmd_simulate(args: argparse.Namespace, report: ReportDocument) -> int:
    scenario = load_scenario(args.scenario)
    report.add_input(args.scenario, open(args.scenario, encoding="utf-8").read())
    result = simulate(scenario)

    report.add_table(
        "timing",
        ("n_units", "total_cycles", "payload_cycles", "payload_cycles_effective",
         "alpha_eff", "one_minus_alpha"),
        [(result.n_units, result.total_cycles, result.payload_cycles,
          result.payload_cycles_effective, result.alpha_eff.alpha,
          result.alpha_eff.one_minus_alpha)],
    )
    report.add_table(
        "capacity shares",
        ("category", "share"),
        [(k, result.shares[k]) for k in
         ("software", "os", "access", "dispatch", "propagation", "payload", "idle")],
    )
    if result.n_units <= MAX_UNIT_ROWS:
        report.add_table(
            "per-unit timeline",
            ("unit", "start", "busy", "end", "idle"),
            [(i, s, b, e, d) for i, (s, b, e, d) in enumerate(
                zip(result.unit_start, result.unit_busy,
                    result.unit_end, result.unit_idle))],
        )
    else:
        report.warnings.append(
            f"per-unit table omitted ({result.n_units} units > {MAX_UNIT_ROWS})"
        )
    return 0


# ---- bounds ----------------------------------------------------------------

def _cmd_bounds(args: argparse.Namespace, report: ReportDocument) -> int:
    if (args.cores_per_group is None) != (args.mpe_per_group is None):
        raise SystemExit(_usage_exit(
            "bounds", "--cores-per-group and --mpe-per-group go together"))

    reports = [
        bound_start_stop(args.start_stop_cycles, args.total_cycles),
        bound_propagation(args.distance_m, args.clock_hz,
                          args.message_time_s, args.total_cycles),
        bound_context_switch(args.context_switch_cycles, args.total_cycles),
        bound_os_looping(args.n_units, args.dispatch_cycles, args.total_cycles),
    ]
    governing = combined_limit(reports)

    def disp(bound: float) -> str:
        return repr(bound) if args.full_precision else f"{bound:.0e}"

    rows = [(r.kind, r.bound, disp(r.bound)) for r in reports]
    rows.append((f"combined <- {governing.kind}", governing.bound, disp(governing.bound)))
    report.add_table(
        "floors on one_minus_alpha",
        ("mechanism", "bound", "display"),
        rows,
    )

    if args.cores_per_group is not None:
        effect = mpe_grouping_effect(
            args.n_units, args.cores_per_group, args.mpe_per_group,
            args.dispatch_cycles, args.total_cycles,
        )
        report.add_table(
            "grouped dispatch",
            ("addressable_units", "reduction_factor", "capacity_loss",
             "os_looping_bound", "display"),
            [(effect.addressable_units, effect.reduction_factor,
              effect.capacity_loss, effect.bound.bound, disp(effect.bound.bound))],
        )
    return 0


def _usage_exit(prog: str, message: str) -> int:
    print(f"parlimits {prog}: error: {message}", file=sys.stderr)
    return 1


# ---- forecast --------------------------------------------------------------

def _cmd_forecast(args: argparse.Namespace, report: ReportDocument) -> int:
    verdict = feasibility(
        args.target, args.per_processor_perf, args.achieved_one_minus_alpha,
        achieved_source=args.achieved_source,
        marginal_factor=args.marginal_factor,
    )
    report.add_table(
        "feasibility",
        ("target_flops", "hypothesis", "required_one_minus_alpha",
         "achieved_one_minus_alpha", "achieved_source", "verdict"),
        [(verdict.target_flops, verdict.hypothesis,
          verdict.required.one_minus_alpha, verdict.achieved.one_minus_alpha,
          verdict.achieved_source, verdict.verdict)],
    )

    rpeak_max = args.rpeak_max if args.rpeak_max else 10.0 * args.target
    curves = {
        "achieved": virtual_scale(
            args.per_processor_perf, AlphaValue(args.achieved_one_minus_alpha),
            k_max=rpeak_max / args.per_processor_perf,
            source=f"achieved ({args.achieved_source})"),
        "required": virtual_scale(
            args.per_processor_perf, verdict.required,
            k_max=rpeak_max / args.per_processor_perf,
            source="required for target"),
    }
    curve_rows = []
    for name in sorted(curves):
        curve = curves[name]
        curve_rows.append(
            (name, curve.source, len(curve.samples), curve.asymptote_flops,
             curve.samples[-1][1])
        )
    report.add_table(
        "scaling curves (fixed one_minus_alpha)",
        ("curve", "source", "samples", "asymptote_flops", "rmax_at_sweep_end"),
        curve_rows,
    )
    report.warnings.append(curves["achieved"].caveat)

    if args.curves_dir:
        os.makedirs(args.curves_dir, exist_ok=True)
        for name in sorted(curves):
            path = os.path.join(args.curves_dir, f"{name}.csv")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write("rpeak_flops,rmax_flops\n")
                for r_peak, r_max in curves[name].samples:
                    fh.write(f"{r_peak!r},{r_max!r}\n")
            report.warnings.append(f"wrote {path}")
    return 0


_COMMANDS = {
    "analyze": _cmd_analyze,
    "simulate": _cmd_simulate,
    "bounds": _cmd_bounds,
    "forecast": _cmd_forecast,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    report = ReportDocument(command="parlimits " + " ".join(argv))
    try:
        code = _COMMANDS[args.subcommand](args, report)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (OSError, ValueError) as exc:
        # Covers missing files, schema failures, scenario parse errors,
        # and domain errors: the input was unusable.
        print(f"parlimits: input error: {exc}", file=sys.stderr)
        return 2

    sys.stdout.write(report.to_json() if args.json else report.to_text())
    return code


if __name__ == "__main__":
    sys.exit(main())
