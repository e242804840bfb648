"""Repository contract for scenario configurations and built-in inputs."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Sequence, Tuple

from lib.features.experiment.domain.entities.scenario_config import ScenarioConfig
from lib.features.mixing.domain.entities.stochastic_matrix import StochasticMatrix
from lib.features.mixing.domain.entities.weighted_expert import WeightedExpert


class ScenarioRepository(ABC):
    """Abstract access to scenario files and named presets."""

    @abstractmethod
    def load(self, path: Path) -> ScenarioConfig:
        """Parse a scenario file."""

    @abstractmethod
    def save(self, path: Path, config: ScenarioConfig) -> Path:
        """Serialize a scenario file."""

    @abstractmethod
    def fingerprint(self, config: ScenarioConfig) -> str:
        """Stable hash of the canonical serialization."""

    @abstractmethod
    def preset(self, name: str) -> ScenarioConfig:
        """Built-in scenario by name."""

    @abstractmethod
    def markov_chains(self) -> Tuple[Sequence[Tuple[StochasticMatrix, float]], Sequence[str]]:
        """Chains and weights of the Markov non-closure example, with their universe."""

    @abstractmethod
    def closure_experts(self) -> Tuple[Sequence[WeightedExpert], Sequence[str]]:
        """Weighted experts of the FCM closure example, with their universe."""
