"""Entry point of the harness.

    pvi-heat verify --all --theta symbolic --json report.json
    pvi-heat verify --check heat --theta 1,1,1,1
    pvi-heat numeric pvi --theta 0,0,0,1 --u0 2 --du0 0 --x0 3 --x-end 4 --csv traj.csv
    pvi-heat numeric heat-check --theta 1/2,1/3,1/5,1/7
    pvi-heat numeric legendre

Exit codes: 0 when every check passes, 1 when one fails, 2 on usage errors.
PVI_HEAT_SEED overrides --seed; other settings are read from PVI_HEAT_*
variables or a .env file (see util/config.py).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from dotenv import load_dotenv

from exact_kernel.errors import ExactKernelError
from numerics.errors import NumericsError
from painleve_forms.theta import Theta
from pvi_heat.numeric import HEAT_NODES, run_heat_check, run_legendre, run_pvi, tolerances
from pvi_heat.schemas import CheckStatus
from pvi_heat.verify import run_checks
from util.check_registry import check_names
from util.config import get_settings
from util.log_service import LogService

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# loggers of the library packages, which log through logging.getLogger(__name__)
LIBRARY_LOGGERS = ("exact_kernel", "painleve_forms", "elimination", "numerics", "pvi_heat")


def theta_spec(text: str) -> Theta:
    try:
        return Theta.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def rational_theta_spec(text: str) -> Theta:
    theta = theta_spec(text)
    if not theta.is_rational:
        raise argparse.ArgumentTypeError("numeric checks need four rational exponents")
    return theta


def tolerance_value(text: str) -> float:
    try:
        value = float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from exc
    if not 0 < value < 1:
        raise argparse.ArgumentTypeError(f"tolerances must lie in (0, 1), got {text}")
    return value


def positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from exc
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def float_list(text: str) -> list[float]:
    try:
        return [float(piece) for piece in text.split(",") if piece.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pvi-heat", description="Exact and numeric checks of the PVI heat equation")
    parser.add_argument("-v", "--verbose", action="store_true")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="run the exact certification checks")
    selection = verify.add_mutually_exclusive_group(required=True)
    selection.add_argument("--all", action="store_true", help="run every check")
    selection.add_argument("--check", nargs="+", choices=check_names(), metavar="NAME",
                           help=f"one or more of: {', '.join(check_names())}")
    verify.add_argument("--theta", type=theta_spec, default=Theta.symbolic(),
                        help="'symbolic' or four rationals th_inf,th_0,th_1,th_x")
    verify.add_argument("--json", type=Path, help="write the report as a JSON array")
    verify.add_argument("--seed", type=int, default=0)
    verify.set_defaults(handler=cmd_verify)

    numeric = commands.add_parser("numeric", help="run a floating-point check")
    checks = numeric.add_subparsers(dest="numeric_command", required=True)

    pvi = checks.add_parser("pvi", help="integrate PVI")
    pvi.add_argument("--theta", type=rational_theta_spec, default=Theta.of(0, 0, 0, 1))
    pvi.add_argument("--x0", type=float, default=3.0)
    pvi.add_argument("--u0", type=float, default=2.0)
    pvi.add_argument("--du0", type=float, default=0.0)
    pvi.add_argument("--x-end", type=float, default=4.0)
    pvi.add_argument("--rtol", type=tolerance_value)
    pvi.add_argument("--atol", type=tolerance_value)
    pvi.add_argument("--fixed-step", type=positive_float)
    pvi.add_argument("--csv", help="write x,u,u_prime")
    pvi.set_defaults(handler=cmd_pvi)

    heat = checks.add_parser("heat-check", help="residual of the heat equation on a transported wave function")
    heat.add_argument("--theta", type=rational_theta_spec, default=Theta.parse("1/2,1/3,1/5,1/7"))
    heat.add_argument("--x0", type=float, default=2.0)
    heat.add_argument("--u0", type=float, default=0.5)
    heat.add_argument("--du0", type=float, default=0.0)
    heat.add_argument("--x", type=float, default=2.2)
    heat.add_argument("--h", type=positive_float, default=0.1)
    heat.add_argument("--nodes", type=float_list, default=list(HEAT_NODES))
    heat.add_argument("--rtol", type=tolerance_value, default=1e-12)
    heat.add_argument("--atol", type=tolerance_value, default=1e-14)
    heat.add_argument("--seed", type=int, default=0)
    heat.add_argument("--psi-shift", type=float, default=0.0, help="perturb the Psi coefficient")
    heat.add_argument("--csv", help="write t,x,residual_h,residual_h2,order")
    heat.set_defaults(handler=cmd_heat_check)

    legendre = checks.add_parser("legendre", help="Legendre check of the Picard reduction")
    legendre.add_argument("--points", type=float_list, default=[0.25, 0.5, 0.75])
    legendre.add_argument("--threshold", type=float, default=1e-10)
    legendre.set_defaults(handler=cmd_legendre)
    return parser


def resolve_seed(cli_seed: int) -> int:
    env_seed = get_settings().SEED
    return cli_seed if env_seed is None else env_seed


def cmd_verify(args: argparse.Namespace, log: LogService) -> int:
    names = check_names() if args.all else args.check
    seed = resolve_seed(args.seed)
    log.info("verify: %s with theta=%s, seed %d", ", ".join(names), args.theta.label, seed)
    reports = run_checks(names, args.theta, seed)
    for report in reports:
        print(f"{report.status.value:5}  {report.check_name:12} {report.elapsed_ms:7d} ms  {report.detail}")
    if args.json:
        args.json.parent.mkdir(parents=True, exist_ok=True)
        payload = [report.model_dump(mode="json") for report in reports]
        args.json.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    passed = all(report.status == CheckStatus.PASS for report in reports)
    log.notice("verify: %d/%d checks passed", sum(r.status == CheckStatus.PASS for r in reports), len(reports))
    return EXIT_PASS if passed else EXIT_FAIL


def cmd_pvi(args: argparse.Namespace, log: LogService) -> int:
    tol = tolerances(args.rtol, args.atol)
    _, outcome = run_pvi(args.theta, args.x0, args.u0, args.du0, args.x_end, tol, args.fixed_step, args.csv)
    print(outcome.summary)
    return EXIT_PASS if outcome.passed else EXIT_FAIL


def cmd_heat_check(args: argparse.Namespace, log: LogService) -> int:
    tol = tolerances(args.rtol, args.atol)
    if args.x - args.h < args.x0:
        log.error("heat-check: x - h = %s lies before x0 = %s", args.x - args.h, args.x0)
        return EXIT_USAGE
    results, outcome = run_heat_check(args.theta, args.x0, args.u0, args.du0, args.x, args.h, args.nodes, tol,
                                      get_settings().MIN_CONVERGENCE_ORDER, resolve_seed(args.seed),
                                      args.psi_shift, args.csv)
    for result in results:
        print(f"t = {result.t:8.4f}  residuals {', '.join(f'{r:.3e}' for r in result.residuals)}  "
              f"order {result.order:.3f}")
    print(outcome.summary)
    return EXIT_PASS if outcome.passed else EXIT_FAIL


def cmd_legendre(args: argparse.Namespace, log: LogService) -> int:
    outcome = run_legendre(args.points, args.threshold)
    print(outcome.summary)
    return EXIT_PASS if outcome.passed else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    load_dotenv()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS

    level = logging.DEBUG if args.verbose else None
    log = LogService(level=level)
    for package in LIBRARY_LOGGERS:
        LogService(package, level=level)

    try:
        return args.handler(args, log)
    except (NumericsError, ExactKernelError, ValueError) as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
