"""Command-line front end.

Subcommands: ``run`` one scenario, ``compare`` the three built-in
controllers on one scenario, ``validate`` a rule-definition file, and
``export-rules`` a built-in rule base to that format.  Outputs are
plot-ready CSV and JSON files; nothing depends on wall-clock time or
randomness, so identical invocations produce byte-identical artifacts.

Exit codes: 0 success (goal reached where applicable), 1 usage or
configuration error, 2 goal not reached, 3 rule-validation failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace

from .rulebase import builtin, BUILTIN_SIZES
from .ruleformat import RuleDefinitionError, parse_rulebase, render_rulebase
from .simulation import (
    Metrics,
    TrajectorySample,
    compare,
    load_scenario,
    ordering_report,
    run,
    scenario_to_dict,
)

__all__ = ["main", "entry", "cmd_run", "cmd_compare", "cmd_validate", "cmd_export_rules"]

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_NOT_REACHED = 2
EXIT_INVALID_RULES = 3

CSV_HEADER = "t,x,y,theta,e_d,e_theta,v_l,v_r"


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; the contract here is 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _fmt(value: float) -> str:
    return f"{value:.9g}"


def _write_trajectory_csv(path: str, trajectory: tuple[TrajectorySample, ...]):
    lines = [CSV_HEADER]
    for s in trajectory:
        lines.append(
            ",".join(
                _fmt(v)
                for v in (
                    s.t, s.pose.x, s.pose.y, s.pose.theta,
                    s.errors.e_d, s.errors.e_theta, s.wheels.v_l, s.wheels.v_r,
                )
            )
        )
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _metrics_dict(m: Metrics) -> dict:
    return {
        "reached": m.reached,
        "time_to_target": m.time_to_target,
        "time_angle_aligned": m.time_angle_aligned,
        "path_length": m.path_length,
        "rule_count": m.rule_count,
    }


def _write_json(path: str, data: dict):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")


def cmd_run(scenario_path: str, controller: str | None, out_dir: str, quiet: bool = False) -> tuple[int, dict]:
    """Run one scenario; returns (exit code, run report)."""
    try:
        sc = load_scenario(scenario_path)
        if controller is not None:
            sc = replace(sc, controller=controller)
        trajectory, metrics = run(sc)
    except (ValueError, RuleDefinitionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG, {}

    os.makedirs(out_dir, exist_ok=True)
    csv_path = os.path.join(out_dir, "trajectory.csv")
    json_path = os.path.join(out_dir, "metrics.json")
    _write_trajectory_csv(csv_path, tuple(trajectory))
    _write_json(json_path, _metrics_dict(metrics))
    report = {
        "scenario": scenario_to_dict(sc),
        "metrics": _metrics_dict(metrics),
        "artifacts": {"trajectory_csv": csv_path, "metrics_json": json_path},
    }
    if not quiet:
        state = "reached" if metrics.reached else "NOT reached"
        when = f" at t={_fmt(metrics.time_to_target)} s" if metrics.reached else ""
        print(f"goal {state}{when}; path length {_fmt(metrics.path_length)} m")
        print(f"trajectory: {csv_path}")
        print(f"metrics:    {json_path}")
    return (EXIT_OK if metrics.reached else EXIT_NOT_REACHED), report


def _comparison_csv_row(entry) -> str:
    m = entry.metrics
    if m is None:
        return f"{entry.controller},,,,,"
    cells = (
        entry.controller,
        str(m.rule_count),
        _fmt(m.time_to_target) if m.time_to_target is not None else "",
        _fmt(m.time_angle_aligned) if m.time_angle_aligned is not None else "",
        _fmt(m.path_length),
        "true" if m.reached else "false",
    )
    return ",".join(cells)


def cmd_compare(scenario_path: str, out_dir: str, quiet: bool = False) -> tuple[int, dict]:
    """Run the three built-in controllers on one scenario; returns (exit code, table)."""
    try:
        sc = load_scenario(scenario_path)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG, {}

    entries = compare(sc)
    os.makedirs(out_dir, exist_ok=True)
    rows = []
    for entry in entries:
        if entry.trajectory is not None:
            _write_trajectory_csv(
                os.path.join(out_dir, f"trajectory_{entry.controller}.csv"), entry.trajectory
            )
            _write_json(
                os.path.join(out_dir, f"metrics_{entry.controller}.json"),
                _metrics_dict(entry.metrics),
            )
        rows.append(
            {
                "controller": entry.controller,
                "metrics": _metrics_dict(entry.metrics) if entry.metrics else None,
                "error": entry.error,
            }
        )
    ordering = ordering_report(entries)
    table = {"scenario": scenario_to_dict(sc), "rows": rows, "ordering": ordering}
    csv_lines = ["controller,rule_count,time_to_target,time_angle_aligned,path_length,reached"]
    csv_lines += [_comparison_csv_row(e) for e in entries]
    with open(os.path.join(out_dir, "comparison.csv"), "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(csv_lines) + "\n")
    _write_json(os.path.join(out_dir, "comparison.json"), table)

    if not quiet:
        print(f"{'ctrl':>4}  {'rules':>5}  {'t_target':>9}  {'t_aligned':>9}  {'path':>8}  reached")
        for entry in entries:
            m = entry.metrics
            if m is None:
                print(f"{entry.controller:>4}  run failed: {entry.error}")
                continue
            t_target = _fmt(m.time_to_target) if m.time_to_target is not None else "-"
            t_align = _fmt(m.time_angle_aligned) if m.time_angle_aligned is not None else "-"
            print(
                f"{entry.controller:>4}  {m.rule_count:>5}  {t_target:>9}  {t_align:>9}  "
                f"{_fmt(m.path_length):>8}  {'yes' if m.reached else 'no'}"
            )
        if ordering["three_mf_fastest"] is None:
            print("fastest controller: undetermined (not all runs reached the goal)")
        else:
            held = "holds" if ordering["three_mf_fastest"] else "does not hold"
            print(f"fastest controller: {ordering['fastest']} (3-MF-fastest ranking {held})")

    failed = any(e.metrics is None for e in entries)
    all_reached = all(e.metrics is not None and e.metrics.reached for e in entries)
    if failed:
        return EXIT_CONFIG, table
    return (EXIT_OK if all_reached else EXIT_NOT_REACHED), table


def cmd_validate(rules_path: str, quiet: bool = False) -> int:
    """Parse and validate a rule-definition file; 0 iff it is clean."""
    try:
        with open(rules_path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        rb = parse_rulebase(text)
    except RuleDefinitionError as exc:
        for issue in exc.issues:
            print(issue)
        return EXIT_INVALID_RULES
    if not quiet:
        print(f"OK: {len(rb.rules)} rules over {len(rb.angle_var.terms)}x{len(rb.distance_var.terms)} grid")
    return EXIT_OK


def cmd_export_rules(size: str, out_path: str, quiet: bool = False) -> int:
    """Write a built-in rule base in canonical rule-definition form."""
    text = render_rulebase(builtin(int(size)))
    try:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if not quiet:
        print(f"wrote {out_path}")
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="fuzzynav", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_run = sub.add_parser("run", help="simulate one scenario")
    p_run.add_argument("--scenario", required=True, help="scenario JSON file")
    p_run.add_argument("--controller", help="3, 5, 7 or a rules file (overrides the scenario)")
    p_run.add_argument("--out", required=True, help="output directory")
    p_run.add_argument("--quiet", action="store_true")

    p_cmp = sub.add_parser("compare", help="run the built-in controllers on one scenario")
    p_cmp.add_argument("--scenario", required=True, help="scenario JSON file")
    p_cmp.add_argument("--out", required=True, help="output directory")
    p_cmp.add_argument("--quiet", action="store_true")

    p_val = sub.add_parser("validate", help="check a rule-definition file")
    p_val.add_argument("rules", help="rule-definition file")
    p_val.add_argument("--quiet", action="store_true")

    p_exp = sub.add_parser("export-rules", help="write a built-in rule base as text")
    p_exp.add_argument("--controller", required=True, choices=[str(s) for s in BUILTIN_SIZES])
    p_exp.add_argument("--out", required=True, help="output file")
    p_exp.add_argument("--quiet", action="store_true")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "run":
        code, _ = cmd_run(args.scenario, args.controller, args.out, args.quiet)
        return code
    if args.command == "compare":
        code, _ = cmd_compare(args.scenario, args.out, args.quiet)
        return code
    if args.command == "validate":
        return cmd_validate(args.rules, args.quiet)
    return cmd_export_rules(args.controller, args.out, args.quiet)


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
