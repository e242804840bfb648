"""Repository contract for experiment artifacts."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from lib.features.attractors.domain.entities.basin_census import BasinCensus
from lib.features.experiment.domain.entities.evaluation_report import EvaluationReport
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix
from lib.features.fcm_core.domain.entities.state_vector import StateVector


class ArtifactRepository(ABC):
    """Abstract output directory for matrices, curves, rasters and reports."""

    @abstractmethod
    def prepare(self, outputs: Path) -> None:
        """Create ``outputs`` and confirm it is writable."""

    @abstractmethod
    def save_matrix(
        self,
        outputs: Path,
        name: str,
        matrix: EdgeMatrix,
        mask: Optional[np.ndarray] = None,
    ) -> List[Path]:
        """Write a matrix and, when given, its trainable-edge mask sidecar."""

    @abstractmethod
    def load_matrix(self, outputs: Path, name: str) -> EdgeMatrix:
        """Read a matrix previously written with :meth:`save_matrix`."""

    @abstractmethod
    def save_loss_history(self, outputs: Path, name: str, history: Sequence[float]) -> Path:
        """Write an (epoch, loss) curve."""

    @abstractmethod
    def save_raster(
        self,
        outputs: Path,
        name: str,
        states: Sequence[StateVector],
        labels: Sequence[str],
    ) -> Path:
        """Write a trajectory raster."""

    @abstractmethod
    def save_census(
        self, outputs: Path, name: str, census: BasinCensus, include_csv: bool
    ) -> List[Path]:
        """Write a basin census as structured text and optionally CSV."""

    @abstractmethod
    def save_report(
        self, outputs: Path, report: EvaluationReport, include_csv: bool
    ) -> List[Path]:
        """Write the human report and optionally the machine-readable one."""
