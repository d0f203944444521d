"""
Command-line front end: ``jsdmix <subcommand> [options]``.

Data goes to ``--out`` or standard output, diagnostics to standard error.
Exit status is 0 on success, 1 when a verification fails and 2 on bad input.
"""

import argparse
import logging
import sys
from typing import List, Optional

import pydantic

from ..bounds import bounds_report, urn_problem
from ..exceptions import AlphabetMismatchError, BoundsBracketingError, ScenarioFormatError, ValidationError
from ..extras import get_information
from ..models import EpsilonFamily, MixtureScenario, UrnGameConfig
from .figures import emit_figure_data
from .io import emit_csv, emit_json, load_scenario
from .settings import ExperimentSettings
from .sweeps import LINE_PARAMETERS, delta_scan, epsilon_scan, find_grid_minimizer, line_eval, sweep_grid
from .verify import verify_observations

__all__ = ["main", "build_parser"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2

_INPUT_ERRORS = (ValidationError, AlphabetMismatchError, ScenarioFormatError, pydantic.ValidationError)


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--scenario", help="Scenario JSON file; defaults to the built-in epsilon family.")
    shared.add_argument("--epsilon", type=float, help="Epsilon of the built-in family (default 0.3).")
    shared.add_argument("--resolution", type=int, help="Grid intervals per swept axis (default 200).")
    shared.add_argument("--seed", type=int, help="Seed of randomized runs (default 0).")
    shared.add_argument("--out", help="Output file (or directory for `figures`); '-' or omitted for stdout.")
    shared.add_argument("--workers", type=int, help="Worker threads (default 1).")
    shared.add_argument("-v", "--verbose", action="count", default=0, help="More log output; repeat for debug.")

    parser = argparse.ArgumentParser(prog="jsdmix",
                                     description="Jensen-Shannon divergence of two-component mixtures.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {get_information('version')}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("sweep", parents=[shared], help="sjsd on the (lambda_1, lambda_2) grid.")

    line = sub.add_parser("line", parents=[shared], help="sjsd along one line of the grid.")
    line.add_argument("--fixed", choices=LINE_PARAMETERS, required=True)
    line.add_argument("--value", type=float, help="Value of the fixed proportion.")

    eps = sub.add_parser("eps-scan", parents=[shared], help="sjsd of the epsilon family over epsilon.")
    eps.add_argument("--lambda-1", type=float, default=0.3)
    eps.add_argument("--lambda-2", type=float, default=0.7)
    eps.add_argument("--disjoint", action="store_true", help="Use q uniform on {3, 4, 5, 6}.")

    delta = sub.add_parser("delta-scan", parents=[shared], help="sjsd for lambda_1 over [0, lambda_2].")
    delta.add_argument("--lambda-2", type=float, default=0.7)
    delta.add_argument("--same-components", action="store_true", help="Set p_tilde_2 to p_tilde_1.")

    for name, text in (("bounds", "Bayes error and its JS bounds for urn A = p1, urn B = p2."),
                       ("urn-sim", "Bounds plus a Monte Carlo urn game.")):
        cmd = sub.add_parser(name, parents=[shared], help=text)
        cmd.add_argument("--lambda-1", type=float, help="Override lambda_1 (built-in family default 0.3).")
        cmd.add_argument("--lambda-2", type=float, help="Override lambda_2 (built-in family default 0.7).")
        cmd.add_argument("--pi", type=float, default=0.5, help="Prior of urn A.")
        cmd.add_argument("--trials", type=int, help="Rounds of the urn game (default 1000000).")
        cmd.add_argument("--units", choices=("bit", "nat"), default="bit", help="Unit the bounds are formed in.")

    ver = sub.add_parser("verify", parents=[shared], help="Run all observation and bounds checks.")
    ver.add_argument("--n-random", type=int, help="Random cases per suite (default 1000).")

    sub.add_parser("figures", parents=[shared], help="Write all plot-data files into the --out directory.")
    return parser


def _configure_logging(verbose: int, settings: ExperimentSettings) -> None:
    level = {0: settings.log_level, 1: "INFO"}.get(verbose, "DEBUG")
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root = logging.getLogger("jsdmix")
    root.handlers[:] = [handler]
    root.setLevel(level)


def _source(args, settings: ExperimentSettings):
    if args.scenario:
        return load_scenario(args.scenario)
    return EpsilonFamily(epsilon=args.epsilon if args.epsilon is not None else settings.epsilon)


def _scenario_with_proportions(args, source) -> MixtureScenario:
    if isinstance(source, EpsilonFamily):
        return source.scenario(0.3 if args.lambda_1 is None else args.lambda_1,
                               0.7 if args.lambda_2 is None else args.lambda_2)
    return source.with_proportions(source.lambda_1 if args.lambda_1 is None else args.lambda_1,
                                   source.lambda_2 if args.lambda_2 is None else args.lambda_2)


def _run(args, settings: ExperimentSettings) -> int:
    resolution = settings.resolution if args.resolution is None else args.resolution
    workers = settings.n_workers if args.workers is None else args.workers
    seed = settings.seed if args.seed is None else args.seed

    if args.command == "verify":
        n_random = settings.n_random if args.n_random is None else args.n_random
        report = verify_observations(seed=seed, n_random=n_random, resolution=resolution)
        emit_json(report, args.out)
        return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED

    if args.command == "figures":
        if not args.out or args.out == "-":
            raise ValidationError("`figures` needs --out DIR.")
        emit_figure_data(args.out,
                         epsilon=args.epsilon if args.epsilon is not None else settings.epsilon,
                         resolution=resolution,
                         n_workers=workers)
        return EXIT_OK

    if args.command == "eps-scan":
        emit_csv(epsilon_scan(args.lambda_1, args.lambda_2, resolution, disjoint=args.disjoint), args.out)
        return EXIT_OK

    source = _source(args, settings)

    if args.command == "sweep":
        result = sweep_grid(source, resolution, n_workers=workers)
    elif args.command == "line":
        result = line_eval(source, args.fixed, args.value, resolution)
    elif args.command == "delta-scan":
        result = delta_scan(args.lambda_2, resolution, source, same_components=args.same_components)
    else:
        scenario = _scenario_with_proportions(args, source)
        n_trials = settings.n_trials if args.trials is None else args.trials
        cfg = UrnGameConfig(scenario=scenario, pi=args.pi, n_trials=n_trials, seed=seed)
        sim = cfg if args.command == "urn-sim" else None
        report = bounds_report(urn_problem(cfg), sim, units=args.units, n_workers=workers)
        emit_json(report, args.out)
        return EXIT_OK if report.within(3.0) else EXIT_VERIFICATION_FAILED

    if result.free_axis is not None:
        m = find_grid_minimizer(result)
        logger.info(f"grid minimum at {m.free_param}={m.grid_min_location} (sjsd {m.grid_min_value})")
    emit_csv(result, args.out)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = ExperimentSettings()
    except pydantic.ValidationError as e:
        print(f"jsdmix: invalid JSDMIX_* environment setting:\n{e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    _configure_logging(args.verbose, settings)

    try:
        return _run(args, settings)
    except BoundsBracketingError as e:
        logger.error(e.message)
        return EXIT_VERIFICATION_FAILED
    except _INPUT_ERRORS as e:
        logger.error(getattr(e, "message", str(e)))
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
