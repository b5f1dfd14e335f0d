"""Command-line entry points.

Subcommands::

    wignerflow simulate --config scenario.cfg
    wignerflow figures --out figures/
    wignerflow compare-oracle --config scenario.cfg
    wignerflow magnus-check --config scenario.cfg

Exit codes: 0 when every enabled check passes, 1 on a check failure,
2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import ConfigError, parse_config
from .drives import ResonanceError
from .fock import CutoffError
from .scenario import compare_oracle, emit_figures, magnus_check, run_scenario, write_json

__all__ = ["main"]


def _load_config(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from exc
    return parse_config(text)


def _cmd_simulate(args) -> int:
    cfg = _load_config(args.config)
    summary = run_scenario(cfg)
    for name in sorted(summary.checks):
        entry = summary.checks[name]
        status = "PASS" if entry["pass"] else "FAIL"
        print(f"{status} {name}: {entry['value']:.3e} (threshold {entry['threshold']:.1e})")
    print(f"timings: trajectory {summary.timings['trajectory_s']:.3f}s, "
          f"checks {summary.timings['checks_s']:.3f}s, "
          f"total {summary.timings['total_s']:.3f}s")
    print("result: " + ("PASS" if summary.passed else "FAIL"))
    return 0 if summary.passed else 1


def _cmd_figures(args) -> int:
    summaries = emit_figures(args.out)
    ok = True
    for name in sorted(summaries):
        passed = summaries[name].passed
        ok = ok and passed
        print(f"{'PASS' if passed else 'FAIL'} {name}")
    return 0 if ok else 1


def _cmd_compare_oracle(args) -> int:
    cfg = _load_config(args.config)
    report = compare_oracle(cfg)
    print(f"steps: {report.steps}")
    print(f"mean delta max: {report.mean_delta_max:.3e} (tol {report.moment_tol:.1e})")
    print(f"cov delta max:  {report.cov_delta_max:.3e} (tol {report.moment_tol:.1e})")
    for t, d in zip(report.wigner_times, report.wigner_deltas):
        print(f"wigner sup delta at t={t:.4f}: {d:.3e} (tol {report.wigner_tol:.1e})")
    print(f"tail population max: {report.tail_max:.3e}")
    print("result: " + ("PASS" if report.passed else "FAIL"))
    if cfg.summary_path:
        write_json(Path(cfg.summary_path), report.as_dict())
    return 0 if report.passed else 1


def _cmd_magnus_check(args) -> int:
    cfg = _load_config(args.config)
    report = magnus_check(cfg)
    print(report.table())
    if cfg.summary_path:
        write_json(Path(cfg.summary_path), report.as_dict())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wignerflow",
        description="Phase-space evolution of a driven quantum harmonic oscillator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run one scenario and emit its files")
    p.add_argument("--config", required=True, help="scenario configuration file")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("figures", help="emit and run all reference-figure scenarios")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=_cmd_figures)

    p = sub.add_parser("compare-oracle", help="check closed forms against the number-basis oracle")
    p.add_argument("--config", required=True)
    p.set_defaults(func=_cmd_compare_oracle)

    p = sub.add_parser("magnus-check", help="tabulate analytic vs quadrature series terms")
    p.add_argument("--config", required=True)
    p.set_defaults(func=_cmd_magnus_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ValueError, ResonanceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CutoffError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
