"""
Command-line front end.

    qvaluation valuate --state ket.json --projector p.json [--semantics ql]
    qvaluation demo-spin32
    qvaluation sample --n 2 3 4 8 --rank 1 --trials 10000 --seed 7 [--csv sweep.csv]
    qvaluation logic "Q & (P | !P)" --state ket.json [--atoms atoms.json]
    qvaluation fixtures export [--out fixtures/spin32]

Reports go to stdout. Errors go to stderr as a problem document, with exit
code 2 for bad input and 1 for a failed self-check.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, List, Optional, Sequence

from . import __version__
from .commands import demo_spin32, fixtures, logic, sample, valuate
from .errors import QValuationError
from .models.problem import Problem
from .models.run_config import RunConfig
from .render import dump_json
from .types import CommandResult, MembershipMethod, OutputFormat, Semantics

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, RunConfig], CommandResult[Any]]


def _unit_interval(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(f"must lie in (0, 1), got {text}")
    return value


def _count(minimum: int) -> Callable[[str], int]:
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}, got {value}")
        return value

    return parse


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    group = common.add_argument_group("run settings")
    group.add_argument("--tol-rank", type=_unit_interval, help="relative singular-value cutoff (default 1e-10)")
    group.add_argument("--tol-residual", type=_unit_interval, help="relative membership residual cutoff (default 1e-9)")
    group.add_argument("--seed", type=_count(0), help="master seed for random draws (default 0)")
    group.add_argument("--format", choices=[f.value for f in OutputFormat], help="output format (default json)")
    group.add_argument(
        "--method",
        choices=[m.value for m in MembershipMethod],
        help="membership test: projection residuals or linear systems (default residual)",
    )
    group.add_argument(
        "--semantics",
        choices=[s.value for s in Semantics],
        help="sv: gaps allowed; ql: gaps read as false (default sv)",
    )
    group.add_argument("-v", "--verbose", action="count", default=0, help="log to stderr; repeat for debug")
    return common


def _valuate(args: argparse.Namespace, config: RunConfig) -> CommandResult[Any]:
    return valuate.run_detailed(config=config, state_path=args.state, projector_path=args.projector)


def _demo_spin32(args: argparse.Namespace, config: RunConfig) -> CommandResult[Any]:
    return demo_spin32.run_detailed(config=config)


def _sample(args: argparse.Namespace, config: RunConfig) -> CommandResult[Any]:
    return sample.run_detailed(
        config=config,
        dimensions=args.n,
        rank=args.rank,
        trials=args.trials,
        csv_path=args.csv,
    )


def _logic(args: argparse.Namespace, config: RunConfig) -> CommandResult[Any]:
    return logic.run_detailed(config=config, formula=args.formula, state_path=args.state, atoms_path=args.atoms)


def _fixtures_export(args: argparse.Namespace, config: RunConfig) -> CommandResult[Any]:
    return fixtures.run_detailed(config=config, out_dir=args.out)


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="qvaluation",
        description="Truth values, gaps and probabilities of quantum propositions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    p = commands.add_parser("valuate", parents=[common], help="valuate one proposition at one state")
    p.add_argument("--state", type=Path, required=True, help="state JSON")
    p.add_argument("--projector", type=Path, required=True, help="projector JSON")
    p.set_defaults(handler=_valuate)

    p = commands.add_parser("demo-spin32", parents=[common], help="replay and check the spin-3/2 example")
    p.set_defaults(handler=_demo_spin32)

    p = commands.add_parser("sample", parents=[common], help="gap frequency for random states")
    p.add_argument("--n", type=_count(2), nargs="+", required=True, metavar="N", help="ambient dimension(s)")
    p.add_argument("--rank", type=int, default=1, help="projector rank, 1 <= rank <= n-1 (default 1)")
    p.add_argument("--trials", type=_count(0), default=1000, help="states per dimension (default 1000)")
    p.add_argument("--workers", type=_count(1), help="threads for trials (default 1)")
    p.add_argument("--csv", type=Path, help="also write the sweep as CSV")
    p.set_defaults(handler=_sample)

    p = commands.add_parser("logic", parents=[common], help="evaluate a formula over atomic propositions")
    p.add_argument("formula", help="e.g. 'Q & (P | !P)'")
    p.add_argument("--state", type=Path, required=True, help="state JSON")
    p.add_argument("--atoms", type=Path, help="atom manifest JSON (default: P = Y+3/2, Q = X+3/2)")
    p.set_defaults(handler=_logic)

    p = commands.add_parser("fixtures", help="spin-3/2 fixture files")
    actions = p.add_subparsers(dest="action", metavar="ACTION", required=True)
    export = actions.add_parser("export", parents=[common], help="write the fixtures as JSON")
    export.add_argument("--out", type=Path, default=fixtures.DEFAULT_FIXTURES_DIR, help="target directory")
    export.set_defaults(handler=_fixtures_export)

    return parser


def _configure_logging(verbosity: int) -> None:
    if verbosity <= 0:
        return
    logging.basicConfig(
        level=logging.DEBUG if verbosity > 1 else logging.INFO,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    _configure_logging(args.verbose)
    config = RunConfig.from_namespace(args)
    logger.debug("running %s with %s", args.command, config.to_dict())

    handler: Handler = args.handler
    try:
        result = handler(args, config)
    except QValuationError as exc:
        logger.debug("command failed", exc_info=True)
        sys.stderr.write(dump_json(Problem.from_error(exc).to_dict()))
        return exc.exit_code

    sys.stdout.write(result.content)
    return result.exit_code


__all__: List[str] = ["build_parser", "main"]
