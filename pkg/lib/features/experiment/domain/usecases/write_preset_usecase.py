"""Use case for writing a built-in scenario to disk."""

from pathlib import Path

from lib.core.constants.app_constants import SCENARIO_FILE_NAME
from lib.features.experiment.domain.repositories.scenario_repository import ScenarioRepository


class WritePresetUsecase:
    """Writes ``<out>/scenario.yaml`` for a named preset; outputs resolve next to it."""

    def __init__(self, repository: ScenarioRepository) -> None:
        self._repository = repository

    def execute(self, name: str, out_dir: Path) -> Path:
        config = self._repository.preset(name)
        return self._repository.save(Path(out_dir) / SCENARIO_FILE_NAME, config)
