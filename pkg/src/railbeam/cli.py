"""Command line front end: requirements | synthesize | size | verify | array.

Every subcommand reads an optional key=value scenario file, writes its
delimited outputs (CSV/JSON) into --out, and renders matplotlib figures
alongside them unless --no-plot is given. Exit codes: 0 success or pass,
1 coverage/compliance failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict
from pathlib import Path

from . import plots, safety
from .coverage import verify_coverage, worst_angle_trace
from .envelope import (
    DEFAULT_RESOLUTION_RAD,
    boundary_angle,
    synthesize_envelope,
)
from .pattern import read_pattern_csv, write_pattern_csv
from .sizing import size_antenna, vertical_beamwidth
from .ula import (
    UniformLinearArraySpec,
    array_length,
    array_pattern,
    compliance_report,
    estimate_element_count,
)
from .units import linear_to_db

_DEFAULT_LEADS = (15.0, 20.0, 25.0, 30.0)
_DEFAULT_EXPONENTS = (2.0, 3.0, 4.0)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="key=value scenario file")
    common.add_argument("--out", type=Path, default=Path("."), help="output directory")
    common.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="table output format")
    common.add_argument("--resolution-deg", type=float, default=None,
                        help="synthesis resolution in degrees per bin")
    common.add_argument("--delta-deg", type=float, default=None,
                        help="intersection angle in degrees")
    common.add_argument("--no-plot", action="store_true", help="skip figure rendering")

    parser = argparse.ArgumentParser(
        prog="railbeam",
        description="Gain envelopes, antenna sizing, and coverage checks "
        "for train-mounted crossing-warning transmitters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("requirements", parents=[common],
                       help="stopping and notification distance tables")
    p.add_argument("--lead-s", type=float, nargs="*", default=list(_DEFAULT_LEADS),
                   help="lead times for the notification table")

    p = sub.add_parser("synthesize", parents=[common],
                       help="minimal required gain envelope for one scenario")
    p.add_argument("--lead-s", type=float, default=None)
    p.add_argument("--n", type=float, default=None, help="path loss exponent")

    p = sub.add_parser("size", parents=[common],
                       help="antenna dimensions over lead times and exponents")
    p.add_argument("--lead-s", type=float, nargs="*", default=list(_DEFAULT_LEADS))
    p.add_argument("--n", type=float, nargs="*", default=list(_DEFAULT_EXPONENTS))

    p = sub.add_parser("verify", parents=[common],
                       help="brute-force coverage check of a pattern CSV")
    p.add_argument("--pattern", type=Path, required=True, help="candidate pattern CSV")
    p.add_argument("--lead-s", type=float, default=None)
    p.add_argument("--n", type=float, default=None)
    p.add_argument("--train-samples", type=int, default=500)
    p.add_argument("--vehicle-samples", type=int, default=500)

    p = sub.add_parser("array", parents=[common],
                       help="uniform linear array pattern graded against the envelope")
    p.add_argument("--lead-s", type=float, default=None)
    p.add_argument("--n", type=float, default=None)
    p.add_argument("--elements", type=int, default=8)
    p.add_argument("--spacing-m", type=float, default=0.035)
    p.add_argument("--element-gain-dbi", type=float, default=12.0)
    p.add_argument("--phase-taper-deg", type=float, default=0.0)
    p.add_argument("--pattern", type=Path, default=None,
                   help="grade this pattern CSV instead of a synthesized array")
    return parser


def _setup(args, lead=None, n=None):
    overrides = {
        "lead_time_s": lead,
        "n": n,
        "delta_deg": args.delta_deg,
    }
    if args.config is not None:
        return safety.load_scenario(args.config, **overrides)
    return safety.build_scenario(**{k: v for k, v in overrides.items() if v is not None})


def _resolution(args) -> float:
    if args.resolution_deg is None:
        return DEFAULT_RESOLUTION_RAD
    return math.radians(args.resolution_deg)


def _write_json(path: Path, obj) -> None:
    with open(path, "w") as f:
        json.dump(obj, f, indent=2, sort_keys=True)
        f.write("\n")


def _write_table(path_base: Path, fmt: str, header: list[str], rows: list[list]) -> Path:
    if fmt == "json":
        path = path_base.with_suffix(".json")
        _write_json(path, [dict(zip(header, row)) for row in rows])
    else:
        path = path_base.with_suffix(".csv")
        with open(path, "w", newline="") as f:
            f.write(",".join(header) + "\n")
            for row in rows:
                f.write(",".join(_fmt_cell(c) for c in row) + "\n")
    return path


def _fmt_cell(value) -> str:
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)


def _dims_dict(dims) -> dict:
    d = asdict(dims)
    return {
        "max_gain_dbi": round(d["max_gain_dbi"], 4),
        "phi_max_deg": round(d["phi_max_deg"], 4),
        "length_m": round(d["length_m"], 3),
        "width_m": round(d["width_m"], 3),
        "horizontal_3db_beamwidth_deg": round(d["horizontal_3db_beamwidth_deg"], 4),
    }


def cmd_requirements(args) -> int:
    scenario, _, _ = _setup(args)
    table = safety.DEFAULT_STOPPING_TABLE
    stopping_rows = [
        [speed, safety.stopping_distance(speed, safety.Surface.DRY, table),
         safety.stopping_distance(speed, safety.Surface.WET, table)]
        for speed in table.speeds
    ]
    notif_rows = [
        [scenario.train_speed_mph, lead,
         safety.notification_distance(scenario.train_speed_mph, lead)]
        for lead in args.lead_s
    ]
    args.out.mkdir(parents=True, exist_ok=True)
    p1 = _write_table(args.out / "requirements_stopping", args.format,
                      ["vehicle_speed_mph", "dry_m", "wet_m"], stopping_rows)
    p2 = _write_table(args.out / "requirements_notification", args.format,
                      ["train_speed_mph", "lead_s", "distance_m"], notif_rows)
    if not args.no_plot:
        fig = plots.requirements_figure(stopping_rows, notif_rows)
        plots.save_figure(fig, args.out / "requirements.png")
    print(f"wrote {p1} and {p2}")
    return 0


def cmd_synthesize(args) -> int:
    _, params, geom = _setup(args, lead=args.lead_s, n=args.n)
    env = synthesize_envelope(geom, params, _resolution(args))
    dims = size_antenna(geom, params, _resolution(args))
    args.out.mkdir(parents=True, exist_ok=True)
    csv_path = args.out / "envelope.csv"
    write_pattern_csv(env, csv_path, rounding="up")
    phi_rad = vertical_beamwidth(env)
    metrics = {
        "peak_gain_dbi": round(linear_to_db(env.peak_gain()), 4),
        "boundary_angle_deg": round(math.degrees(boundary_angle(geom)), 4),
        "phi_max_deg": round(min(math.degrees(phi_rad), 360.0), 4),
        "dimensions": _dims_dict(dims),
    }
    _write_json(args.out / "envelope_metrics.json", metrics)
    if not args.no_plot:
        fig = plots.pattern_polar_figure([("required envelope", env)], "Required gain envelope")
        plots.save_figure(fig, args.out / "envelope.png")
    print(
        f"envelope peak {metrics['peak_gain_dbi']:.2f} dBi, "
        f"boundary angle {metrics['boundary_angle_deg']:.2f} deg -> {csv_path}"
    )
    return 0


def cmd_size(args) -> int:
    rows = []
    for lead in args.lead_s:
        for n in args.n:
            _, params, geom = _setup(args, lead=lead, n=n)
            dims = size_antenna(geom, params, _resolution(args))
            rows.append([lead, n, dims.max_gain_dbi, dims.phi_max_deg,
                         dims.length_m, dims.width_m, dims.horizontal_3db_beamwidth_deg])
    args.out.mkdir(parents=True, exist_ok=True)
    path = _write_table(
        args.out / "sizes", args.format,
        ["lead_s", "n", "max_gain_dbi", "phi_max_deg", "length_m", "width_m",
         "horizontal_3db_beamwidth_deg"],
        rows,
    )
    if not args.no_plot and rows:
        fig = plots.sizing_figure([(r[0], r[1], r[2], r[4]) for r in rows])
        plots.save_figure(fig, args.out / "sizing.png")
    print(f"wrote {len(rows)} rows to {path}")
    return 0


def cmd_verify(args) -> int:
    pat = read_pattern_csv(args.pattern)
    _, params, geom = _setup(args, lead=args.lead_s, n=args.n)
    report = verify_coverage(pat, geom, params, args.train_samples, args.vehicle_samples)
    args.out.mkdir(parents=True, exist_ok=True)
    _write_json(args.out / "coverage.json", report.to_json_dict())
    if not args.no_plot:
        trace = worst_angle_trace(pat, geom, params)
        fig = plots.margin_trace_figure(trace)
        plots.save_figure(fig, args.out / "verify_margin.png")
    verdict = "PASS" if report.passed else "FAIL"
    print(
        f"{verdict}: min margin {report.min_margin_db:.4f} dB at train "
        f"{report.worst_train_pos_m:.1f} m, vehicle {report.worst_vehicle_pos_m:.1f} m"
    )
    return 0 if report.passed else 1


def cmd_array(args) -> int:
    _, params, geom = _setup(args, lead=args.lead_s, n=args.n)
    if args.pattern is not None:
        pat = read_pattern_csv(args.pattern)
        env = synthesize_envelope(geom, params, pat.resolution)
    else:
        res = _resolution(args)
        spec = UniformLinearArraySpec(
            n_elements=args.elements,
            spacing_m=args.spacing_m,
            element_gain_dbi=args.element_gain_dbi,
            phase_taper_rad=math.radians(args.phase_taper_deg),
        )
        pat = array_pattern(spec, params.wavelength_m, res)
        env = synthesize_envelope(geom, params, res)
    report = compliance_report(pat, env)
    required_peak_dbi = linear_to_db(env.peak_gain())
    n_est = estimate_element_count(required_peak_dbi, args.element_gain_dbi)
    args.out.mkdir(parents=True, exist_ok=True)
    write_pattern_csv(pat, args.out / "array_pattern.csv", rounding="down")
    _write_json(args.out / "compliance.json", report.to_json_dict())
    _write_json(
        args.out / "array_metrics.json",
        {
            "required_peak_dbi": round(required_peak_dbi, 4),
            "element_count_estimate": n_est,
            "estimated_array_length_m": round(array_length(n_est, args.spacing_m), 3),
            "array_length_m": round(array_length(args.elements, args.spacing_m), 3),
            "peak_gain_dbi": round(linear_to_db(pat.peak_gain()), 4),
        },
    )
    if not args.no_plot:
        label = "candidate pattern" if args.pattern else f"{args.elements}-element array"
        fig = plots.pattern_polar_figure(
            [("required envelope", env), (label, pat)],
            "Array pattern vs required envelope",
        )
        plots.save_figure(fig, args.out / "array.png")
    verdict = "PASS" if report.passed else "FAIL"
    print(
        f"{verdict}: margin {report.margin_db:.2f} dB, {len(report.violations)} "
        f"violation interval(s); {n_est} elements needed for "
        f"{required_peak_dbi:.1f} dBi at {args.element_gain_dbi:.1f} dBi each"
    )
    return 0 if report.passed else 1


_COMMANDS = {
    "requirements": cmd_requirements,
    "synthesize": cmd_synthesize,
    "size": cmd_size,
    "verify": cmd_verify,
    "array": cmd_array,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
