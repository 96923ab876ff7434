"""
Taut Workbench
Command-line entry point: theta series, covariant expressions, valuations, nu images and verification suites.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import pandas as pd

from src.cache import atomic_write, safe_name
from src.config import configure_logging, load_settings
from src.errors import ExpressionError, WorkbenchError
from src.nu_bridge import FourierIndex
from src.parser import read_expression_file
from src.reports import (
    FORMATS,
    coefficient_table,
    decomposition_table,
    render,
    series_frame,
    suite_frame,
    valuation_frame,
)
from src.workbench import THETA_KINDS, Workbench

logger = logging.getLogger("taut")

DEFAULT_GRADINGS = ((1, 0), (2, 0), (3, 0), (1, 2), (1, 4), (1, 6), (2, 4), (2, 6), (2, 8))

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def parse_grading(text: str) -> Tuple[int, int]:
    """'2,6' -> (2, 6)."""
    try:
        d, b = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"Grading must look like 'd,b', got '{text}'")
    return d, b


def parse_index(text: str) -> FourierIndex:
    try:
        return FourierIndex.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def parse_reduce(text: str):
    if text in ("auto", "none"):
        return None if text == "none" else text
    try:
        steps = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--reduce takes 'auto', 'none' or a number, got '{text}'")
    if steps < 0:
        raise argparse.ArgumentTypeError("--reduce must be non-negative")
    return steps


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="taut",
        description="Siegel modular forms from covariants of six binary linear forms",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log at INFO (-v) or DEBUG (-vv)")
    parser.add_argument("--format", choices=FORMATS, default="json", help="table output format")
    parser.add_argument("--cache-dir", help="series cache directory (overrides TAUT_CACHE_DIR)")
    parser.add_argument("--no-cache", action="store_true", help="neither read nor write the series cache")
    sub = parser.add_subparsers(dest="command", required=True)

    theta = sub.add_parser("theta", help="compute a theta constant, gradient, chi5 or wedge")
    theta.add_argument("--kind", choices=THETA_KINDS, default="even")
    theta.add_argument("--index", type=int, default=1)
    theta.add_argument("--second", type=int, help="second index of a wedge")
    theta.add_argument("-N", type=int, dest="box")
    theta.add_argument("-o", "--output", help="directory for cache-format files")

    for name, help_text in (("eval", "expand a covariant expression"),
                            ("valuate", "valuation vectors along all ten H_pi")):
        command = sub.add_parser(name, help=help_text)
        _add_expression_arguments(command)

    dims = sub.add_parser("dims", help="dimensions of the graded pieces C'_{d,b}")
    dims.add_argument("--grading", type=parse_grading, action="append",
                      help="d,b (repeatable); the standard table when omitted")
    dims.add_argument("--no-basis", action="store_true", help="skip the explicit basis count")

    decompose = sub.add_parser("decompose", help="S6 isotypic decomposition")
    decompose.add_argument("--grading", type=parse_grading)
    _add_expression_arguments(decompose, required=False)

    nu = sub.add_parser("nu", help="evaluate nu, reduce by chi5 and read Fourier coefficients")
    _add_expression_arguments(nu)
    nu.add_argument("-N", type=int, dest="box")
    nu.add_argument("--reduce", type=parse_reduce, default="auto", help="'auto', 'none' or a number of chi5 steps")
    nu.add_argument("--coeff", type=parse_index, action="append", default=[], help="n,r,m (repeatable)")
    nu.add_argument("--store", help="cache the resulting form under this name")

    divisor = sub.add_parser("divisor", help="weight of the form cutting out sum c H + sum d W")
    divisor.add_argument("--c", help="ten comma-separated H coefficients")
    divisor.add_argument("--d", help="six comma-separated W coefficients")
    divisor.add_argument("--json", dest="json_file", help="JSON file with 'c' and 'd'")

    verify = sub.add_parser("verify", help="run verification suites")
    verify.add_argument("--suite", default="all")
    verify.add_argument("-N", type=int, dest="box")
    verify.add_argument("--seed", type=int)
    verify.add_argument("--trials", type=int)
    verify.add_argument("--stretch", action="store_true", help="include the large-box coefficient targets")
    return parser


def _add_expression_arguments(command: argparse.ArgumentParser, required: bool = True) -> None:
    group = command.add_mutually_exclusive_group(required=required)
    group.add_argument("--expr", help="covariant expression")
    group.add_argument("--expr-file", help="file holding a covariant expression")


def expression_of(args: argparse.Namespace) -> Optional[str]:
    if getattr(args, "expr_file", None):
        return read_expression_file(args.expr_file)
    return getattr(args, "expr", None)


def _numbers(text: Optional[str]) -> Optional[List[str]]:
    if text is None:
        return None
    return [part.strip() for part in text.split(",") if part.strip()]


def run_theta(bench: Workbench, args: argparse.Namespace) -> int:
    series = bench.theta(args.kind, args.index, args.box, args.second)
    if args.output:
        out = Path(args.output)
        for name, value in series.items():
            path = out / f"{safe_name(name)}.N{value.box}.series"
            atomic_write(path, value.to_cache_text(name))
            print(path)
        return EXIT_OK
    frames = [series_frame(value).assign(name=name) for name, value in series.items()]
    print(render(pd.concat(frames, ignore_index=True), args.format))
    return EXIT_OK


def run_eval(bench: Workbench, args: argparse.Namespace) -> int:
    info = bench.describe(expression_of(args))
    if args.format == "json":
        print(json.dumps(info, indent=2))
    else:
        print(render(pd.DataFrame([info]), args.format))
    return EXIT_OK


def run_valuate(bench: Workbench, args: argparse.Namespace) -> int:
    reports, needed = bench.valuate(expression_of(args))
    if args.format == "json":
        print(json.dumps({'reports': [r.to_dict() for r in reports], 'needed_chi5_power': needed}, indent=2))
    else:
        print(render(valuation_frame(reports), args.format))
    return EXIT_OK


def run_dims(bench: Workbench, args: argparse.Namespace) -> int:
    gradings = args.grading or list(DEFAULT_GRADINGS)
    print(render(bench.dims(gradings, with_basis=not args.no_basis), args.format))
    return EXIT_OK


def run_decompose(bench: Workbench, args: argparse.Namespace) -> int:
    expression = expression_of(args)
    d, b = args.grading if args.grading else (None, None)
    entries = bench.decompose(d, b, expression)
    print(render(decomposition_table(entries), args.format))
    return EXIT_OK


def run_nu(bench: Workbench, args: argparse.Namespace) -> int:
    result = bench.nu(expression_of(args), args.box, args.reduce, args.coeff, args.store)
    if args.format == "json":
        print(result.to_json())
        return EXIT_OK
    frames = [coefficient_table(vector, label) for label, vector in result.coefficients.items()]
    print(render(pd.concat(frames, ignore_index=True) if frames else pd.DataFrame(), args.format))
    return EXIT_OK


def run_divisor(bench: Workbench, args: argparse.Namespace) -> int:
    if args.json_file:
        path = Path(args.json_file)
        if not path.exists():
            raise FileNotFoundError(f"File not found: {path}")
        payload = json.loads(path.read_text(encoding="utf-8"))
    else:
        payload = {}
        if args.c is not None:
            payload['c'] = _numbers(args.c)
        if args.d is not None:
            payload['d'] = _numbers(args.d)
    weight = bench.divisor(payload)
    if args.format == "json":
        print(weight.to_json())
    else:
        row = {'j': str(weight.j), 'k': str(weight.k), 'admissible': weight.admissible}
        row.update({f"r{key}": value for key, value in weight.to_dict()['r'].items()})
        print(render(pd.DataFrame([row]), args.format))
    return EXIT_OK


def run_verify(bench: Workbench, args: argparse.Namespace) -> int:
    options = {}
    if args.seed is not None:
        options['seed'] = args.seed
    if args.trials is not None:
        options['trials'] = args.trials
    if args.stretch:
        options['stretch'] = True
    results = bench.verify(args.suite, args.box, options)
    if args.format == "json":
        print(json.dumps(results, indent=2, default=str))
    else:
        print(render(suite_frame(results['agent_messages']), args.format))
    if not results['passed']:
        logger.error("Failed checks: %s", results['failed_checks'])
        return EXIT_FAILED
    return EXIT_OK


COMMANDS = {
    'theta': run_theta,
    'eval': run_eval,
    'valuate': run_valuate,
    'dims': run_dims,
    'decompose': run_decompose,
    'nu': run_nu,
    'divisor': run_divisor,
    'verify': run_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    try:
        settings = load_settings().with_overrides(cache_dir=args.cache_dir)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    level = {0: settings.log_level, 1: "INFO"}.get(args.verbose, "DEBUG")
    configure_logging(level)

    bench = Workbench(settings, use_cache=not args.no_cache)
    try:
        return COMMANDS[args.command](bench, args)
    except ExpressionError as exc:
        source = expression_of(args) or ""
        print(f"error: {exc}\n{exc.highlight(source)}", file=sys.stderr)
        return EXIT_USAGE
    except (WorkbenchError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
