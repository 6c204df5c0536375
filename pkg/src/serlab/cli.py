"""Command-line front end: analytic verification (`verify`) and Monte Carlo sampling (`sample`).

Exit codes: 0 when every check passes, 1 when a check fails (the first failing
check is named on stderr), 2 for usage or parameter errors.

JSON reports are byte-identical for identical configuration (including seed):
numbers are serialized with 17 significant digits and field order is fixed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .inference import SCENARIOS, ScenarioReport, run_scenario, sample_scenario
from .states import PsiParams

__all__ = ["RunConfig", "cmd_verify", "cmd_sample", "main"]

_PARAM_SCENARIOS = {"epr-psi", "bell-hardy"}


@dataclass
class RunConfig:
    scenario: str = "all"
    a_re: float = 0.5
    a_im: float = 0.0
    b_re: float = 0.5
    b_im: float = 0.0
    trials: int = 100_000
    seed: int = 0
    tolerance: float = 1e-10
    format: str = "text"
    flip_claim: int | None = None

    def selected(self) -> list[str]:
        return list(SCENARIOS) if self.scenario == "all" else [self.scenario]

    def psi_params(self) -> PsiParams:
        return PsiParams(complex(self.a_re, self.a_im), complex(self.b_re, self.b_im))


# --- deterministic JSON ----------------------------------------------------


def _format_float(x: float) -> str:
    if x != x or x in (float("inf"), float("-inf")):
        raise ValueError(f"cannot serialize non-finite float {x}")
    return format(float(x), ".17g")


def _emit(value, out: list) -> None:
    if value is None:
        out.append("null")
    elif value is True or value is False:
        out.append("true" if value else "false")
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        out.append(_format_float(value))
    elif isinstance(value, str):
        out.append(json.dumps(value))
    elif isinstance(value, dict):
        out.append("{")
        for i, (key, item) in enumerate(value.items()):
            if i:
                out.append(",")
            out.append(json.dumps(str(key)))
            out.append(":")
            _emit(item, out)
        out.append("}")
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, item in enumerate(value):
            if i:
                out.append(",")
            _emit(item, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps(value) -> str:
    out: list = []
    _emit(value, out)
    return "".join(out)


# --- report payloads --------------------------------------------------------


def _check_payload(check) -> dict:
    return {
        "description": check.description,
        "anchor": check.anchor,
        "expected": check.expected,
        "computed": check.computed,
        "pass": check.passed,
    }


def report_payload(report: ScenarioReport, config: RunConfig) -> dict:
    params = report.parameters
    sampling = None
    if report.sampling is not None:
        stats = report.sampling
        sampling = {
            "trials": stats.trials,
            "seed": stats.seed,
            "algorithm": stats.algorithm,
            "observables": list(stats.observable_labels),
            "frequencies": [
                {
                    "outcomes": list(entry.outcomes),
                    "expected": entry.expected,
                    "count": entry.count,
                    "frequency": entry.frequency,
                    "z": entry.z,
                }
                for entry in stats.entries
            ],
            "z_scores": [entry.z for entry in stats.entries if entry.z is not None],
            "unobserved_admissible": [list(t) for t in stats.unobserved_admissible],
        }
    return {
        "scenario": report.scenario,
        "parameters": None
        if params is None
        else {
            "a_re": params.a.real,
            "a_im": params.a.imag,
            "b_re": params.b.real,
            "b_im": params.b.imag,
        },
        "seed": config.seed,
        "checks": [_check_payload(c) for c in report.checks],
        "sampling": sampling,
        "verdicts": {
            "incompleteness": report.incompleteness_verdict,
            "contradiction": report.contradiction_verdict,
        },
    }


def _render_text(report: ScenarioReport, out) -> None:
    print(f"scenario: {report.scenario}", file=out)
    if report.parameters is not None:
        p = report.parameters
        print(f"parameters: a = {p.a:g}, b = {p.b:g}", file=out)
    if report.post_selection_probability is not None:
        print(
            f"post-selection {report.post_selection.describe()}: "
            f"probability {report.post_selection_probability:.12g}",
            file=out,
        )
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        expected = _value_text(check.expected)
        computed = _value_text(check.computed)
        print(f"[{status}] {check.description} (expected {expected}, computed {computed})", file=out)
    if report.sampling is not None:
        stats = report.sampling
        print(
            f"sampling: {stats.trials} trials, seed {stats.seed}, {stats.algorithm}, "
            f"observables {', '.join(stats.observable_labels)}",
            file=out,
        )
        for entry in stats.entries:
            tup = "(" + ",".join(f"{v:+g}" for v in entry.outcomes) + ")"
            z_text = "n/a" if entry.z is None else f"{entry.z:+.3f}"
            print(
                f"  {tup}: expected {entry.expected:.6g}, observed {entry.frequency:.6g} "
                f"({entry.count} counts), z = {z_text}",
                file=out,
            )
        if stats.unobserved_admissible:
            missing = ", ".join(
                "(" + ",".join(f"{v:+g}" for v in tup) + ")" for tup in stats.unobserved_admissible
            )
            print(f"  note: admissible but unobserved outcomes: {missing}", file=out)
    verdicts = []
    if report.incompleteness_verdict is not None:
        verdicts.append(f"incompleteness={'true' if report.incompleteness_verdict else 'false'}")
    if report.contradiction_verdict is not None:
        verdicts.append(f"contradiction={'true' if report.contradiction_verdict else 'false'}")
    if verdicts:
        print("verdicts: " + " ".join(verdicts), file=out)
    print(f"result: {'all checks passed' if report.passed() else 'CHECK FAILURE'}", file=out)


def _value_text(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


# --- commands ----------------------------------------------------------------


def _run_reports(config: RunConfig, sample: bool) -> list[ScenarioReport]:
    reports = []
    for name in config.selected():
        params = config.psi_params() if name in _PARAM_SCENARIOS else None
        if sample:
            reports.append(sample_scenario(name, params, seed=config.seed, trials=config.trials))
        else:
            reports.append(
                run_scenario(name, params, tolerance=config.tolerance, flip_claim=config.flip_claim)
            )
    return reports


def _emit_reports(reports: list[ScenarioReport], config: RunConfig, out) -> int:
    if config.format == "json":
        payloads = [report_payload(r, config) for r in reports]
        print(dumps(payloads[0] if len(payloads) == 1 else payloads), file=out)
    else:
        for i, report in enumerate(reports):
            if i:
                print("", file=out)
            _render_text(report, out)
    for report in reports:
        failure = report.first_failure()
        if failure is not None:
            print(f"FAIL: {failure.description}", file=sys.stderr)
            return 1
    return 0


def cmd_verify(config: RunConfig, out=None) -> int:
    """Run the selected scenario(s) analytically and report every check."""
    try:
        reports = _run_reports(config, sample=False)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return _emit_reports(reports, config, out or sys.stdout)


def cmd_sample(config: RunConfig, out=None) -> int:
    """Run the scenario's Monte Carlo measurement set and check calibration."""
    try:
        reports = _run_reports(config, sample=True)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return _emit_reports(reports, config, out or sys.stdout)


def _add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--scenario",
        choices=list(SCENARIOS) + ["all"],
        default="all",
        help="which scenario to run (default: all)",
    )
    parser.add_argument("--a-re", type=float, default=0.5, help="Re(a) for the psi family (default 0.5)")
    parser.add_argument("--a-im", type=float, default=0.0, help="Im(a) (default 0)")
    parser.add_argument("--b-re", type=float, default=0.5, help="Re(b) (default 0.5)")
    parser.add_argument("--b-im", type=float, default=0.0, help="Im(b) (default 0)")
    parser.add_argument("--trials", type=int, default=100_000, help="Monte Carlo trials (default 100000)")
    parser.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    parser.add_argument("--tolerance", type=float, default=1e-10, help="certainty tolerance (default 1e-10)")
    parser.add_argument("--format", choices=["text", "json"], default="text", help="report format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="serlab",
        description="Verify certain-value inference arguments on three-qubit entangled states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the analytic checks of a scenario")
    _add_common_options(verify)
    verify.add_argument(
        "--flip-claim",
        type=int,
        default=None,
        metavar="N",
        help="negate the Nth inferred value before certification (fault-injection self-test)",
    )

    sample = sub.add_parser("sample", help="run the scenario's seeded Monte Carlo measurements")
    _add_common_options(sample)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(
        scenario=args.scenario,
        a_re=args.a_re,
        a_im=args.a_im,
        b_re=args.b_re,
        b_im=args.b_im,
        trials=args.trials,
        seed=args.seed,
        tolerance=args.tolerance,
        format=args.format,
        flip_claim=getattr(args, "flip_claim", None),
    )
    if config.flip_claim is not None and config.scenario == "all":
        print("error: --flip-claim requires a single --scenario", file=sys.stderr)
        return 2
    if any(name in _PARAM_SCENARIOS for name in config.selected()):
        try:
            config.psi_params()
        except ValueError:
            print("error: 3|a|^2+|b|^2 must equal 1", file=sys.stderr)
            return 2
    if config.trials < 1:
        print("error: --trials must be positive", file=sys.stderr)
        return 2
    if args.command == "verify":
        return cmd_verify(config)
    return cmd_sample(config)


if __name__ == "__main__":
    raise SystemExit(main())
