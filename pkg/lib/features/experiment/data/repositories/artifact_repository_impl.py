"""Repository implementation writing experiment artifacts to disk."""

from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from lib.core.errors.app_errors import ArtifactIOError
from lib.features.attractors.data.datasources.attractor_export_datasource import (
    AttractorExportDatasource,
)
from lib.features.attractors.domain.entities.basin_census import BasinCensus
from lib.features.experiment.data.datasources.artifact_file_datasource import (
    ArtifactFileDatasource,
)
from lib.features.experiment.data.datasources.report_format_datasource import (
    ReportFormatDatasource,
)
from lib.features.experiment.domain.entities.evaluation_report import EvaluationReport
from lib.features.experiment.domain.repositories.artifact_repository import ArtifactRepository
from lib.features.fcm_core.data.datasources.matrix_text_datasource import MatrixTextDatasource
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix
from lib.features.fcm_core.domain.entities.state_vector import StateVector
from lib.features.phantom_learning.data.datasources.loss_history_datasource import (
    LossHistoryDatasource,
)

MATRICES_DIR = "matrices"
LOSS_DIR = "loss"
RASTERS_DIR = "rasters"
ATTRACTORS_DIR = "attractors"
REPORT_TEXT = "report.txt"
REPORT_CSV = "report.csv"


class ArtifactRepositoryImpl(ArtifactRepository):
    """Lays artifacts out as ``matrices/``, ``loss/``, ``rasters/``, ``attractors/``
    and the two report files."""

    def __init__(
        self,
        file_datasource: Optional[ArtifactFileDatasource] = None,
        matrix_datasource: Optional[MatrixTextDatasource] = None,
        loss_datasource: Optional[LossHistoryDatasource] = None,
        attractor_datasource: Optional[AttractorExportDatasource] = None,
        report_datasource: Optional[ReportFormatDatasource] = None,
    ) -> None:
        self._files = file_datasource or ArtifactFileDatasource()
        self._matrices = matrix_datasource or MatrixTextDatasource()
        self._loss = loss_datasource or LossHistoryDatasource()
        self._attractors = attractor_datasource or AttractorExportDatasource()
        self._reports = report_datasource or ReportFormatDatasource()

    def prepare(self, outputs: Path) -> None:
        self._files.ensure_writable(outputs)

    def save_matrix(
        self,
        outputs: Path,
        name: str,
        matrix: EdgeMatrix,
        mask: Optional[np.ndarray] = None,
    ) -> List[Path]:
        directory = Path(outputs) / MATRICES_DIR
        written = [
            self._files.write_text(directory / f"{name}.txt", self._matrices.format(matrix))
        ]
        if mask is not None:
            written.append(
                self._files.write_text(
                    directory / f"{name}.mask.txt",
                    self._matrices.format_mask(matrix.labels, mask),
                )
            )
        return written

    def load_matrix(self, outputs: Path, name: str) -> EdgeMatrix:
        path = self.matrix_path(outputs, name)
        if not path.exists():
            raise ArtifactIOError(f"missing artifact: expected {path}; run the scenario first")
        return self._matrices.load(path)

    def save_loss_history(self, outputs: Path, name: str, history: Sequence[float]) -> Path:
        return self._files.write_text(
            Path(outputs) / LOSS_DIR / f"{name}.csv", self._loss.format_csv(history)
        )

    def save_raster(
        self,
        outputs: Path,
        name: str,
        states: Sequence[StateVector],
        labels: Sequence[str],
    ) -> Path:
        return self._files.write_text(
            Path(outputs) / RASTERS_DIR / f"{name}.pgm",
            self._attractors.format_trajectory_pgm(states, labels),
        )

    def save_census(
        self, outputs: Path, name: str, census: BasinCensus, include_csv: bool
    ) -> List[Path]:
        directory = Path(outputs) / ATTRACTORS_DIR
        written = [
            self._files.write_text(
                directory / f"{name}.txt", self._attractors.format_census_text(census)
            )
        ]
        if include_csv:
            written.append(
                self._files.write_text(
                    directory / f"{name}.csv", self._attractors.format_census_csv(census)
                )
            )
        return written

    def save_report(
        self, outputs: Path, report: EvaluationReport, include_csv: bool
    ) -> List[Path]:
        written = [
            self._files.write_text(Path(outputs) / REPORT_TEXT, self._reports.format_text(report))
        ]
        if include_csv:
            written.append(
                self._files.write_text(
                    Path(outputs) / REPORT_CSV, self._reports.format_csv(report)
                )
            )
        return written

    @staticmethod
    def matrix_path(outputs: Path, name: str) -> Path:
        return Path(outputs) / MATRICES_DIR / f"{name}.txt"
