"""Use case for loading a scenario file."""

from pathlib import Path
from typing import Optional

from lib.features.experiment.domain.entities.scenario_config import ScenarioConfig
from lib.features.experiment.domain.repositories.scenario_repository import ScenarioRepository


class LoadScenarioUsecase:
    """Loads a scenario, optionally overriding every seed in it."""

    def __init__(self, repository: ScenarioRepository) -> None:
        self._repository = repository

    def execute(self, path: Path, seed: Optional[int] = None) -> ScenarioConfig:
        config = self._repository.load(path)
        return config.with_seed(seed) if seed is not None else config
