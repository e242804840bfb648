"""Command-line subcommand registration."""

import argparse
import sys
from pathlib import Path

from lib.core.constants.app_constants import EXIT_OK, OUTPUT_FORMATS
from lib.core.utils.result import Result
from lib.features.experiment.data.datasources.preset_datasource import (
    DOLPHIN_PRESET,
    PAPER_MIXTURE_PRESET,
)
from lib.features.experiment.presentation.viewmodels.experiment_viewmodel import (
    ExperimentViewModel,
)


def register_routes(parser: argparse.ArgumentParser, viewmodel: ExperimentViewModel) -> None:
    """Register subcommands; each sets ``handler`` returning an exit code."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="Override every seed in the config")
    common.add_argument("--threads", type=int, default=None, help="Worker threads")
    common.add_argument(
        "--format",
        dest="output_format",
        choices=OUTPUT_FORMATS,
        default=None,
        help="Which optional outputs to write",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", parents=[common], help="Run a scenario")
    run.add_argument("config", type=Path)
    run.set_defaults(
        handler=lambda args: _emit(
            viewmodel.run(args.config, args.seed, args.threads, args.output_format)
        )
    )

    replay = commands.add_parser(
        "replay", parents=[common], help="Rerun one trained expert from an initial state"
    )
    replay.add_argument("config", type=Path)
    replay.add_argument("--expert", required=True)
    replay.add_argument("--initial", required=True, help="Comma-separated bits, e.g. 1,0,0,1")
    replay.set_defaults(
        handler=lambda args: _emit(
            viewmodel.replay(args.config, args.expert, args.initial, args.seed)
        )
    )

    demo = commands.add_parser("demo", help="Mixing demonstrations")
    demo.add_argument("which", choices=["markov", "closure"])
    demo.set_defaults(
        handler=lambda args: _emit(
            viewmodel.demo_markov() if args.which == "markov" else viewmodel.demo_closure()
        )
    )

    preset = commands.add_parser("preset", help="Write a built-in scenario file")
    preset.add_argument("name", choices=[DOLPHIN_PRESET, PAPER_MIXTURE_PRESET])
    preset.add_argument("--out", type=Path, required=True)
    preset.set_defaults(handler=lambda args: _emit(viewmodel.write_preset(args.name, args.out)))


def _emit(result: Result) -> int:
    if result.is_success:
        sys.stdout.write(result.message)
        return EXIT_OK
    if result.data is not None:
        sys.stdout.write(result.message)
    else:
        sys.stderr.write(f"error: {result.message}\n")
    return result.exit_code
