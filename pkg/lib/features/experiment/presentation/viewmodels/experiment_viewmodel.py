"""ViewModel bridging CLI handlers with experiment use cases."""

import logging
from pathlib import Path
from typing import Optional

from lib.core.constants.app_constants import EXIT_UNEXPECTED
from lib.core.errors.app_errors import FcmError, exit_code_for
from lib.core.utils.result import Result
from lib.features.experiment.data.datasources.report_format_datasource import (
    ReportFormatDatasource,
)
from lib.features.experiment.domain.entities.evaluation_report import EvaluationReport
from lib.features.experiment.domain.entities.replay_result import ReplayResult
from lib.features.experiment.domain.usecases.demo_usecase import DemoUsecase
from lib.features.experiment.domain.usecases.load_scenario_usecase import LoadScenarioUsecase
from lib.features.experiment.domain.usecases.replay_component_usecase import (
    ReplayComponentUsecase,
)
from lib.features.experiment.domain.usecases.run_scenario_usecase import RunScenarioUsecase
from lib.features.experiment.domain.usecases.write_preset_usecase import WritePresetUsecase
from lib.features.fcm_core.data.datasources.matrix_text_datasource import MatrixTextDatasource
from lib.features.fcm_core.domain.entities.state_vector import StateVector
from lib.features.mixing.data.datasources.mixture_export_datasource import (
    MixtureExportDatasource,
)

logger = logging.getLogger(__name__)


class ExperimentViewModel:
    """Turns use-case outcomes and library errors into printable results."""

    def __init__(
        self,
        load_scenario_usecase: LoadScenarioUsecase,
        run_scenario_usecase: RunScenarioUsecase,
        replay_component_usecase: ReplayComponentUsecase,
        demo_usecase: DemoUsecase,
        write_preset_usecase: WritePresetUsecase,
        report_format_datasource: Optional[ReportFormatDatasource] = None,
        mixture_export_datasource: Optional[MixtureExportDatasource] = None,
        matrix_text_datasource: Optional[MatrixTextDatasource] = None,
    ) -> None:
        self._load_scenario_usecase = load_scenario_usecase
        self._run_scenario_usecase = run_scenario_usecase
        self._replay_component_usecase = replay_component_usecase
        self._demo_usecase = demo_usecase
        self._write_preset_usecase = write_preset_usecase
        self._reports = report_format_datasource or ReportFormatDatasource()
        self._mixtures = mixture_export_datasource or MixtureExportDatasource()
        self._matrices = matrix_text_datasource or MatrixTextDatasource()

    def run(
        self,
        config_path: Path,
        seed: Optional[int] = None,
        threads: Optional[int] = None,
        output_format: Optional[str] = None,
    ) -> Result[EvaluationReport]:
        try:
            config = self._load_scenario_usecase.execute(config_path, seed)
            report = self._run_scenario_usecase.execute(
                config,
                base_dir=Path(config_path).parent,
                threads=threads,
                output_format=output_format,
            )
        except FcmError as error:
            return self._failure(error)
        return Result.success(data=report, message=self._reports.format_text(report))

    def replay(
        self,
        config_path: Path,
        expert: str,
        initial: str,
        seed: Optional[int] = None,
    ) -> Result[ReplayResult]:
        try:
            config = self._load_scenario_usecase.execute(config_path, seed)
            result = self._replay_component_usecase.execute(
                config,
                expert,
                StateVector.from_bits_text(initial),
                base_dir=Path(config_path).parent,
            )
        except FcmError as error:
            return self._failure(error)
        distance = "n/a" if result.distance is None else f"{result.distance:.4f}"
        message = (
            f"expert {result.expert}: {result.attractor.describe()}\n"
            f"target: {result.target_attractor.describe()}\n"
            f"cycle distance on observable nodes: {distance}\n"
            f"raster: {result.raster_path}\n"
        )
        return Result.success(data=result, message=message)

    def demo_markov(self) -> Result:
        try:
            mixture = self._demo_usecase.markov_nonclosure()
        except FcmError as error:
            return self._failure(error)
        verdict = "stochastic" if mixture.is_stochastic else "not stochastic"
        message = self._mixtures.format_csv(mixture) + f"verdict: {verdict}\n"
        if mixture.is_stochastic:
            return Result(
                is_success=False, message=message, data=mixture, exit_code=EXIT_UNEXPECTED
            )
        return Result.success(data=mixture, message=message)

    def demo_closure(self) -> Result:
        try:
            mixture, bipolar = self._demo_usecase.closure()
        except FcmError as error:
            return self._failure(error)
        verdict = "bipolar" if bipolar else "not bipolar"
        message = self._matrices.format(mixture) + f"verdict: {verdict}\n"
        if not bipolar:
            return Result(
                is_success=False, message=message, data=mixture, exit_code=EXIT_UNEXPECTED
            )
        return Result.success(data=mixture, message=message)

    def write_preset(self, name: str, out_dir: Path) -> Result[Path]:
        try:
            path = self._write_preset_usecase.execute(name, out_dir)
        except FcmError as error:
            return self._failure(error)
        return Result.success(data=path, message=f"Wrote {path}\n")

    @staticmethod
    def _failure(error: FcmError) -> Result:
        logger.debug("Operation failed", exc_info=error)
        return Result.failure(str(error), exit_code=exit_code_for(error))
