"""Entry point for the phantom-FCM experiment CLI."""

import argparse
import logging
import sys
from typing import Optional, Sequence

from lib.core.constants.app_constants import EXIT_UNEXPECTED
from lib.core.logging.logger import configure_logger
from lib.features.experiment.data.repositories.artifact_repository_impl import (
    ArtifactRepositoryImpl,
)
from lib.features.experiment.data.repositories.scenario_repository_impl import (
    ScenarioRepositoryImpl,
)
from lib.features.experiment.domain.usecases.demo_usecase import DemoUsecase
from lib.features.experiment.domain.usecases.load_scenario_usecase import LoadScenarioUsecase
from lib.features.experiment.domain.usecases.replay_component_usecase import (
    ReplayComponentUsecase,
)
from lib.features.experiment.domain.usecases.run_scenario_usecase import RunScenarioUsecase
from lib.features.experiment.domain.usecases.write_preset_usecase import WritePresetUsecase
from lib.features.experiment.presentation.routes.cli_routes import register_routes
from lib.features.experiment.presentation.viewmodels.experiment_viewmodel import (
    ExperimentViewModel,
)


def build_viewmodel() -> ExperimentViewModel:
    """Wire up datasources, repositories, and use cases."""
    artifact_repository = ArtifactRepositoryImpl()
    scenario_repository = ScenarioRepositoryImpl()

    return ExperimentViewModel(
        load_scenario_usecase=LoadScenarioUsecase(scenario_repository),
        run_scenario_usecase=RunScenarioUsecase(artifact_repository, scenario_repository),
        replay_component_usecase=ReplayComponentUsecase(artifact_repository),
        demo_usecase=DemoUsecase(scenario_repository),
        write_preset_usecase=WritePresetUsecase(scenario_repository),
    )


def build_parser(viewmodel: ExperimentViewModel) -> argparse.ArgumentParser:
    """Build the argument parser with every subcommand registered."""
    parser = argparse.ArgumentParser(
        prog="phantom-fcm",
        description="Fuzzy cognitive map mixtures with learned phantom nodes",
    )
    register_routes(parser, viewmodel)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one CLI command and return its exit status."""
    configure_logger()
    parser = build_parser(build_viewmodel())
    args = parser.parse_args(argv)
    logging.getLogger(__name__).debug("Running %s", args.command)
    try:
        return args.handler(args)
    except Exception as error:
        logging.getLogger(__name__).exception("Command failed: %s", error)
        return EXIT_UNEXPECTED


if __name__ == "__main__":
    sys.exit(main())
