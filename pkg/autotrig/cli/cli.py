"""
The `autotrig` command line.

    autotrig pi --p 3 --q 3
    autotrig eval --fn sin --p 3 --q 3 --x 1
    autotrig scan --p 3 --q 3 --from 0.01 --to 2.418 --n 500 --out figure.csv
    autotrig verify --suite redheffer --p 3 --q 3 --n 500
    autotrig counterexample --p 3 --q 3

Exit codes: 0 PASS, 1 FAIL (or no counterexample found), 2 usage, domain or regime error, 3 singular point,
4 output error, 5 a kernel failed to converge.
"""
import argparse
import logging
import sys

from autotrig import exc
from autotrig.cli import scan
from autotrig.inequality import redheffer
from autotrig.inequality.report import GridSpec
from autotrig.ode import ode_oracle
from autotrig.settings import Accuracy, general_setting
from autotrig.trig import gtrig, series
from autotrig.trig.gtrig import Params

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_SINGULAR = 3
EXIT_IO = 4
EXIT_CONVERGENCE = 5

FUNCTIONS = ("sin", "cos", "sin-dd", "series3")
SUITES = ("redheffer", "upper", "cos", "conditions", "multiple-angle", "ode", "series")

SERIES_ABSCISSAE = (0.05, 0.025)
SERIES_TOLERANCE = 1.0e-8
ODE_TOLERANCE = 1.0e-6


def _digits():
    return int(general_setting("output", "significant_digits"))


def _number(value) -> str:
    return format(value, f".{_digits()}g")


def _status(passed) -> str:
    return "PASS" if passed else "FAIL"


def _add_params(parser):
    parser.add_argument("--p", type=float, required=True, help="Exponent p > 1.")
    parser.add_argument("--q", type=float, required=True, help="Exponent q > 1.")
    parser.add_argument(
        "--tol", type=float, default=None, help="Absolute tolerance of the kernels (default: config)."
    )


def _add_grid(parser, n_default=None):
    parser.add_argument("--from", dest="lo", type=float, default=None, help="First abscissa.")
    parser.add_argument("--to", dest="hi", type=float, default=None, help="Last abscissa.")
    parser.add_argument(
        "--n", type=int, default=n_default, help="Number of grid points (default: config)."
    )


def make_parser() -> argparse.ArgumentParser:

    parser = argparse.ArgumentParser(
        prog="autotrig",
        description="Generalized trigonometric functions and Redheffer-type inequalities.",
    )

    commands = parser.add_subparsers(dest="command", required=True)

    pi_parser = commands.add_parser("pi", help="Print pi_pq.")
    _add_params(pi_parser)

    eval_parser = commands.add_parser("eval", help="Evaluate sin_pq, cos_pq, S'' or series3.")
    _add_params(eval_parser)
    eval_parser.add_argument("--fn", choices=FUNCTIONS, required=True)
    eval_parser.add_argument("--x", type=float, required=True)

    scan_parser = commands.add_parser("scan", help="Write sin_pq(x) / x and its bounds as CSV.")
    _add_params(scan_parser)
    _add_grid(scan_parser)
    scan_parser.add_argument("--out", default=None, help="Output CSV path (default: stdout).")

    verify_parser = commands.add_parser("verify", help="Run a verification suite.")
    _add_params(verify_parser)
    _add_grid(verify_parser)
    verify_parser.add_argument("--suite", choices=SUITES, required=True)

    counterexample_parser = commands.add_parser(
        "counterexample", help="Locate a violation of the q-power bound."
    )
    _add_params(counterexample_parser)

    return parser


def _accuracy(args) -> Accuracy:
    if args.tol is None:
        return Accuracy()
    return Accuracy(abs_tol=args.tol)


def _grid(args, lo, hi) -> GridSpec:
    return GridSpec(
        lo=lo if args.lo is None else args.lo,
        hi=hi if args.hi is None else args.hi,
        n=args.n,
    )


def cmd_pi(args, out) -> int:
    params = Params(p=args.p, q=args.q)
    print(_number(params.pi), file=out)
    return EXIT_PASS


def cmd_eval(args, out) -> int:
    params = Params(p=args.p, q=args.q)
    acc = _accuracy(args)

    if args.fn == "sin":
        value = gtrig.sin_pq(x=args.x, params=params, acc=acc)
    elif args.fn == "cos":
        value = gtrig.cos_pq(x=args.x, params=params, acc=acc)
    elif args.fn == "sin-dd":
        value = gtrig.sin_pq_dd(x=args.x, params=params, acc=acc)
    else:
        value = series.series3(x=args.x, params=params)

    print(_number(value), file=out)
    return EXIT_PASS


def cmd_scan(args, out) -> int:
    params = Params(p=args.p, q=args.q)

    records = scan.scan_records(
        params=params, grid=_grid(args, lo=0.01, hi=params.pi), acc=_accuracy(args)
    )

    if args.out is None:
        out.write(scan.render_csv(records=records))
    else:
        scan.write_csv(records=records, path=args.out)
        logger.info(f"Wrote {len(records)} scan records to {args.out}")

    return EXIT_PASS


def _verify_report(report, out) -> int:
    print(report.summary, file=out)
    return EXIT_PASS if report.holds else EXIT_FAIL


def _verify_ode(params, acc, out) -> int:
    path = ode_oracle.solve_ivp(params=params, x_end=params.pi, step=params.pi / 2000.0)

    max_error = path.max_error_against(lambda x: gtrig.sin_pq(x=x, params=params, acc=acc))
    energy_tolerance = float(general_setting("ode", "energy_tolerance"))

    passed = max_error <= ODE_TOLERANCE and path.max_energy_defect <= energy_tolerance

    print(
        f"ode {params}: max error {max_error:.6e}, max energy defect {path.max_energy_defect:.6e}, "
        f"step drift before projection max {path.max_step_drift:.6e} summed {path.total_step_drift:.6e} "
        f"(projection {'on' if path.projected else 'off'}): {_status(passed)}",
        file=out,
    )
    return EXIT_PASS if passed else EXIT_FAIL


def _verify_series(params, acc, out) -> int:
    max_defect = max(
        abs(series.series3(x=x, params=params) - gtrig.sin_pq(x=x, params=params, acc=acc))
        for x in SERIES_ABSCISSAE
    )

    passed = max_defect <= SERIES_TOLERANCE

    print(f"series {params}: max defect {max_defect:.6e}: {_status(passed)}", file=out)
    return EXIT_PASS if passed else EXIT_FAIL


def cmd_verify(args, out) -> int:
    params = Params(p=args.p, q=args.q)
    acc = _accuracy(args)

    if args.suite == "redheffer":
        report = redheffer.check_theorem_gri2(
            params=params, grid=_grid(args, lo=0.01, hi=4.0 * params.pi), acc=acc
        )
        return _verify_report(report=report, out=out)

    if args.suite == "upper":
        if params.q != 2.0:
            raise exc.RegimeException(
                f"The two-sided bound is stated for sin_(p,2) only, so q must be 2 (q={params.q})"
            )
        report = redheffer.check_upper_p2(
            p=params.p, grid=_grid(args, lo=0.01, hi=params.pi - 0.01), acc=acc
        )
        return _verify_report(report=report, out=out)

    if args.suite == "cos":
        if params.q < 2.0:
            raise exc.RegimeException(
                f"The cosine inequality is proven for 2 <= q < inf only (q={params.q})"
            )
        conjugate = params.conjugate()
        report = redheffer.check_cos_corollary(
            q=params.q, grid=_grid(args, lo=0.01, hi=conjugate.pi - 0.01), acc=acc
        )
        return _verify_report(report=report, out=out)

    if args.suite == "conditions":
        report = redheffer.check_conditions(
            params=params, grid=_grid(args, lo=0.0, hi=params.pi), acc=acc
        )
        passed = report.consistent()
        print(f"{report.summary}: {_status(passed)}", file=out)
        return EXIT_PASS if passed else EXIT_FAIL

    if args.suite == "multiple-angle":
        conjugate = params.conjugate()
        report = redheffer.check_multiple_angle(
            q=params.q, grid=_grid(args, lo=0.0, hi=conjugate.half_pi), acc=acc
        )
        return _verify_report(report=report, out=out)

    if args.suite == "ode":
        return _verify_ode(params=params, acc=acc, out=out)

    return _verify_series(params=params, acc=acc, out=out)


def cmd_counterexample(args, out) -> int:
    params = Params(p=args.p, q=args.q)

    counterexample = redheffer.find_qpower_counterexample(params=params, acc=_accuracy(args))

    if counterexample is None:
        print(f"{params}: none found", file=out)
        return EXIT_FAIL

    print(
        f"x={_number(counterexample.x)} lhs={_number(counterexample.lhs)} "
        f"rhs={_number(counterexample.rhs)} margin={_number(counterexample.margin)} "
        f"crossing={_number(counterexample.crossing)}",
        file=out,
    )
    return EXIT_PASS


COMMANDS = {
    "pi": cmd_pi,
    "eval": cmd_eval,
    "scan": cmd_scan,
    "verify": cmd_verify,
    "counterexample": cmd_counterexample,
}


def run(argv=None, out=None) -> int:
    """
    Parses `argv` and runs the command, mapping every failure onto the exit-code contract.
    """
    out = out or sys.stdout

    try:
        args = make_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_PASS

    try:
        return COMMANDS[args.command](args, out)
    except (exc.DomainException, exc.RegimeException) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except exc.SingularPointException as e:
        print(f"singular point: {e}", file=sys.stderr)
        return EXIT_SINGULAR
    except exc.ConvergenceException as e:
        print(f"no convergence: {e}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except OSError as e:
        print(f"output error: {e}", file=sys.stderr)
        return EXIT_IO


def main(argv=None):
    logging.basicConfig(
        level=str(general_setting("output", "log_level")).upper(),
        format="%(levelname)s %(name)s: %(message)s",
    )
    sys.exit(run(argv=argv))
