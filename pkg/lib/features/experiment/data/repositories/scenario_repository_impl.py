"""Repository implementation for scenario files and presets."""

import hashlib
from pathlib import Path
from typing import Optional, Sequence, Tuple

from lib.features.experiment.data.datasources.preset_datasource import PresetDatasource
from lib.features.experiment.data.datasources.scenario_config_datasource import (
    ScenarioConfigDatasource,
)
from lib.features.experiment.domain.entities.scenario_config import ScenarioConfig
from lib.features.experiment.domain.repositories.scenario_repository import ScenarioRepository
from lib.features.mixing.domain.entities.stochastic_matrix import StochasticMatrix
from lib.features.mixing.domain.entities.weighted_expert import WeightedExpert


class ScenarioRepositoryImpl(ScenarioRepository):
    def __init__(
        self,
        config_datasource: Optional[ScenarioConfigDatasource] = None,
        preset_datasource: Optional[PresetDatasource] = None,
    ) -> None:
        self._configs = config_datasource or ScenarioConfigDatasource()
        self._presets = preset_datasource or PresetDatasource()

    def load(self, path: Path) -> ScenarioConfig:
        return self._configs.load(path)

    def save(self, path: Path, config: ScenarioConfig) -> Path:
        return self._configs.save(path, config)

    def fingerprint(self, config: ScenarioConfig) -> str:
        return hashlib.sha256(self._configs.serialize(config).encode("utf-8")).hexdigest()

    def preset(self, name: str) -> ScenarioConfig:
        return self._presets.scenario(name)

    def markov_chains(self) -> Tuple[Sequence[Tuple[StochasticMatrix, float]], Sequence[str]]:
        return self._presets.markov_chains()

    def closure_experts(self) -> Tuple[Sequence[WeightedExpert], Sequence[str]]:
        return self._presets.closure_experts()
