"""Command-line front end: ``qpb verify | solve | replicate | print-calibration``.

Exit codes: 0 pass, 1 verification failure, 2 usage or configuration error.
Reports go to stdout (or ``--out``); logs go to stderr.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from qpb.config import get_settings
from qpb.errors import QPBError
from qpb.models.potential import Potential
from qpb.models.reports import SUITES, RunConfig, parse_complex

logger = logging.getLogger("qpb.cli")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# flags that override --config values when given explicitly
OVERRIDABLE = (
    "suite",
    "seeds",
    "seed",
    "workers",
    "corep",
    "potential",
    "freeze_omega",
    "freeze_sections",
    "flip_calibration",
    "format",
    "out",
)


def _scalars(text: str) -> list[str]:
    return [v.strip() for v in text.split(",") if v.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, default=None, help="JSON run configuration.")
    common.add_argument("--format", choices=["json", "table"], default=None, help="Report format (default: table).")
    common.add_argument("--out", default=None, help="Write the report to this file instead of stdout.")
    common.add_argument("--log-level", default=None, help="Logging level (default: settings, INFO).")

    parser = argparse.ArgumentParser(
        prog="qpb",
        description="Exact calculus, gauge theory and field equations on the two-point-space quantum principal bundle.",
    )
    commands = parser.add_subparsers(dest="command")

    verify = commands.add_parser("verify", parents=[common], help="Run a law suite.")
    verify.add_argument("--suite", choices=SUITES, default=None)

    solve = commands.add_parser("solve", parents=[common], help="Search for critical points.")
    solve.add_argument("mode", choices=["ym", "ymsm"])
    solve.add_argument("--seeds", type=int, default=None, help="Number of random seeds (ym).")
    solve.add_argument("--seed", type=int, default=None, help="RNG seed (default 0).")
    solve.add_argument("--workers", type=int, default=None, help="Worker processes (ym).")
    solve.add_argument("--corep", choices=["trivial", "alternating"], default=None)
    solve.add_argument("--potential", default=None, help="zero | identity | poly:c0,c1,... | paper:x,y (alias tuned:x,y)")
    solve.add_argument("--omega", type=_scalars, default=None, help="Seed connection 'l0,l1'.")
    solve.add_argument("--sections", type=_scalars, default=None, help="Seed sections 'p~0,p~1,p^0,p^1'.")
    solve.add_argument("--freeze-omega", action="store_true", default=None)
    solve.add_argument("--freeze-sections", action="store_true", default=None)

    replicate = commands.add_parser("replicate", parents=[common], help="Print the claim ledger.")
    replicate.add_argument("--flip-calibration", choices=["phase", "hodge", "connection"], default=None)

    commands.add_parser("print-calibration", parents=[common], help="Print the calibration ledger.")
    return parser


def load_run_config(args: argparse.Namespace) -> RunConfig:
    """Merge ``--config`` with explicitly given flags and validate."""
    data: dict = {}
    if args.config is not None:
        try:
            data = json.loads(args.config.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise QPBError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(data, dict):
            raise QPBError("config must be a JSON object")
    if args.command is not None:
        data["command"] = args.command
    if getattr(args, "mode", None) is not None:
        data["mode"] = args.mode
    for name in OVERRIDABLE:
        value = getattr(args, name, None)
        if value is not None:
            data[name] = value
    for name in ("omega", "sections"):
        value = getattr(args, name, None)
        if value is not None:
            data[name] = value
    settings = get_settings()
    data.setdefault("workers", settings.workers)
    data.setdefault("seed", settings.seed)
    data["options"] = {**settings.solver_options().model_dump(), **data.get("options", {})}
    return RunConfig.model_validate(data)


def _schema_error(exc: ValidationError) -> str:
    lines = []
    for error in exc.errors():
        path = ".".join(str(p) for p in error["loc"]) or "<root>"
        lines.append(f"{path}: {error['msg']}")
    return "invalid configuration:\n  " + "\n  ".join(lines)


# table rendering


def _mark(passed: bool) -> str:
    return "PASS" if passed else "FAIL"


def _verify_table(report: dict) -> str:
    lines = [f"suite {report['suite']}  calibration {report['calibration']}"]
    for check in report["checks"]:
        detail = f"  ({check['detail']})" if check.get("detail") else ""
        lines.append(f"{_mark(check['passed'])}  {check['suite']:<9} {check['name']}{detail}")
    lines.append(_mark(report["passed"]))
    return "\n".join(lines)


def _replicate_table(report: dict) -> str:
    lines = [f"calibration {report['calibration']}  flip {report['flip']}"]
    for claim in report["claims"]:
        lines.append(f"{_mark(claim['passed'])}  {claim['name']}")
        lines.append(f"      expected: {claim['expected']}")
        lines.append(f"      computed: {claim['computed']}")
    lines.append(_mark(report["passed"]))
    return "\n".join(lines)


def _solve_table(run: dict) -> str:
    lines = [f"run {run['id']}  mode {run['mode']}"]
    for point in run["points"]:
        omega = point["omega"]
        info = point["classification"]
        lines.append(
            f"{point['kind']:<11} ({omega['lambda0']}, {omega['lambda1']})  "
            f"exact={point['exactified']}  S={info['action']}  flat={info['flat']}  orbit_fixed={info['orbit_fixed']}"
        )
        for t in point.get("sections", []):
            lines.append(f"            {t['corep']}: {t['p']}")
    for failure in run["failures"]:
        lines.append(f"unconverged: {failure['error']}")
    lines.append(f"{len(run['points'])} points, {len(run['failures'])} failures")
    return "\n".join(lines)


def _calibration_table(ledger: dict) -> str:
    lines = [f"chosen {ledger['chosen']}  unique={ledger['unique']}"]
    for conv in ledger["conventions"]:
        lines.append(f"  {conv['name']:<16} = {conv['value']:<4} pinned by: {conv['pinned_by']}")
    for candidate in ledger["candidates"]:
        c = candidate["calibration"]
        summary = "" if candidate["passed"] else f"  {len(candidate['failures'])} failing laws"
        lines.append(
            f"{_mark(candidate['passed'])}  phase={c['product_phase']:<3} hodge={c['hodge_even_sign']:+d} "
            f"connection={c['connection_sign']:+d}{summary}"
        )
    return "\n".join(lines)


TABLES = {
    "verify": _verify_table,
    "replicate": _replicate_table,
    "solve": _solve_table,
    "print-calibration": _calibration_table,
}


def _emit(config: RunConfig, payload: dict):
    if config.format == "json":
        text = json.dumps(payload, indent=2, sort_keys=True, default=str)
    else:
        text = TABLES[config.command](payload)
    if config.out:
        Path(config.out).write_text(text + "\n")
        logger.info("report written to %s", config.out)
    else:
        print(text)


# commands


def cmd_verify(config: RunConfig) -> int:
    from qpb.services import get_verification_engine

    report = get_verification_engine().run(config.suite)
    _emit(config, report.model_dump(mode="json"))
    failure = report.first_failure
    if failure is not None:
        print(f"first failure: {failure.suite}: {failure.name}: {failure.detail}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def cmd_solve(config: RunConfig) -> int:
    from qpb.services import get_solver_engine

    engine = get_solver_engine()
    if config.mode is None:
        raise QPBError("solve needs a mode: ym or ymsm")
    if config.mode == "ym":
        run = engine.run_ym(config.seeds, config.seed, config.options, config.workers)
    else:
        omega = [parse_complex(v) for v in config.omega] if config.omega else (0, 0)
        sections = [parse_complex(v) for v in config.sections] if config.sections else None
        run = engine.run_ymsm(
            config.corep,
            Potential.parse(config.potential),
            omega,
            sections,
            config.options,
            config.freeze_omega,
            config.freeze_sections,
        )
    payload = run.model_dump(mode="json")
    _emit(config, payload)
    certified = run.points and all(p["exactified"] for p in run.points)
    return EXIT_OK if certified and not run.failures else EXIT_FAILURE


def cmd_replicate(config: RunConfig) -> int:
    from qpb.services import get_replication_engine

    report = get_replication_engine().run(config.flip_calibration)
    _emit(config, report.model_dump(mode="json"))
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_print_calibration(config: RunConfig) -> int:
    from qpb.services import get_verification_engine

    ledger = get_verification_engine().calibration_ledger()
    _emit(config, ledger.model_dump(mode="json"))
    return EXIT_OK if ledger.unique else EXIT_FAILURE


COMMANDS = {
    "verify": cmd_verify,
    "solve": cmd_solve,
    "replicate": cmd_replicate,
    "print-calibration": cmd_print_calibration,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        level = args.log_level or get_settings().log_level
        logging.basicConfig(
            level=level.upper(),
            format="%(asctime)s %(name)s %(levelname)s %(message)s",
            stream=sys.stderr,
        )
        config = load_run_config(args)
    except ValidationError as exc:
        print(_schema_error(exc), file=sys.stderr)
        return EXIT_USAGE
    except (QPBError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[config.command](config)
    except QPBError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
