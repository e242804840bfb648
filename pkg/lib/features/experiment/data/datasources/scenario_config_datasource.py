"""Reads and writes scenario YAML files."""

import logging
from pathlib import Path
from typing import Optional

import yaml

from lib.core.errors.app_errors import ArtifactIOError, ConfigError
from lib.features.experiment.data.models.scenario_config_model import ScenarioConfigModel
from lib.features.experiment.domain.entities.scenario_config import ScenarioConfig
from lib.features.fcm_core.data.datasources.matrix_text_datasource import MatrixTextDatasource

logger = logging.getLogger(__name__)


class ScenarioConfigDatasource:
    """YAML front end for :class:`ScenarioConfig`.

    ``target: {file: path}`` references are read with the matrix text format,
    relative to the directory of the scenario file.
    """

    def __init__(self, matrix_datasource: Optional[MatrixTextDatasource] = None) -> None:
        self._matrices = matrix_datasource or MatrixTextDatasource()

    def parse(self, text: str, base_dir: Optional[Path] = None) -> ScenarioConfig:
        try:
            payload = yaml.safe_load(text)
        except yaml.YAMLError as error:
            raise ConfigError(f"scenario is not valid YAML: {error}") from error
        if payload is None:
            raise ConfigError("scenario file is empty")
        model = ScenarioConfigModel.from_dict(payload)
        return model.to_entity(lambda reference: self._load_target(reference, base_dir))

    def serialize(self, config: ScenarioConfig) -> str:
        payload = ScenarioConfigModel.from_entity(config).to_dict()
        return yaml.safe_dump(payload, sort_keys=False, default_flow_style=None)

    def load(self, path: Path) -> ScenarioConfig:
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as error:
            raise ArtifactIOError(f"cannot read scenario file {path}: {error}") from error
        logger.debug("Loaded scenario %s", path)
        return self.parse(text, base_dir=path.parent)

    def save(self, path: Path, config: ScenarioConfig) -> Path:
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(self.serialize(config), encoding="utf-8")
        except OSError as error:
            raise ArtifactIOError(f"cannot write scenario file {path}: {error}") from error
        return path

    def _load_target(self, reference: str, base_dir: Optional[Path]):
        path = Path(reference)
        if not path.is_absolute() and base_dir is not None:
            path = Path(base_dir) / path
        return self._matrices.load(path)
