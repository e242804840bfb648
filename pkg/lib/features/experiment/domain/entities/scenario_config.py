"""Declarative description of a phantom-mixture experiment."""

import math
import re
from dataclasses import dataclass, field, replace
from typing import Optional, Tuple

from lib.core.constants.app_constants import (
    CONVEXITY_TOLERANCE,
    DEFAULT_EVALUATION_INITIALS,
    DEFAULT_HARD_THRESHOLD,
    DEFAULT_MAX_STEPS,
    DEFAULT_OUTPUTS_DIR,
    DEFAULT_SAMPLE_INITIALS,
    DEFAULT_SEED,
    DEFAULT_UNROLL_STEPS,
)
from lib.core.errors.app_errors import ConfigError
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix
from lib.features.phantom_learning.domain.entities.train_config import TrainConfig
from lib.features.phantom_learning.domain.entities.training_sample import SampleAnchor

_NAME_PATTERN = re.compile(r"^[A-Za-z0-9_.-]+$")


@dataclass(frozen=True)
class ExpertSpec:
    """One expert: a view of the target with nodes dropped, or an explicit matrix."""

    name: str
    weight: float
    dropped_nodes: Tuple[str, ...] = ()
    matrix: Optional[EdgeMatrix] = None
    phantom_labels: Tuple[str, ...] = ()


@dataclass(frozen=True)
class SamplingSpec:
    n_initials: int = DEFAULT_SAMPLE_INITIALS
    k: int = DEFAULT_UNROLL_STEPS
    anchor: SampleAnchor = SampleAnchor.CANONICAL
    skip_hidden_active: bool = False
    seed: int = DEFAULT_SEED


@dataclass(frozen=True)
class EvaluationSpec:
    """Evaluation draws.

    Models are evaluated under HardBinary with ``threshold`` (x > 0 when unset). A
    positive cut such as 0.5 is an opt-in variant; the target always uses x > 0.
    """

    n_initials: int = DEFAULT_EVALUATION_INITIALS
    max_steps: int = DEFAULT_MAX_STEPS
    seed: int = DEFAULT_SEED
    exhaustive: bool = False
    threshold: Optional[float] = None


@dataclass(frozen=True)
class MixingSpec:
    """Plain convex mixing unless the opt-in ``coverage_normalized`` variant is set."""

    coverage_normalized: bool = False


@dataclass(frozen=True)
class ScenarioConfig:
    """Target system, expert views, training, mixing and evaluation settings."""

    name: str
    target: EdgeMatrix
    experts: Tuple[ExpertSpec, ...]
    train: TrainConfig = field(default_factory=TrainConfig)
    sampling: SamplingSpec = field(default_factory=SamplingSpec)
    evaluation: EvaluationSpec = field(default_factory=EvaluationSpec)
    mixing: MixingSpec = field(default_factory=MixingSpec)
    phantoms_per_expert: int = 1
    outputs: str = DEFAULT_OUTPUTS_DIR
    skip_training: bool = False
    target_file: Optional[str] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "experts", tuple(self.experts))
        self._validate()

    def _validate(self) -> None:
        if not self.experts:
            raise ConfigError("scenario needs at least one expert")
        names = [expert.name for expert in self.experts]
        if len(set(names)) != len(names):
            raise ConfigError(f"expert names must be unique: {names}")
        for name in names:
            if not _NAME_PATTERN.match(name):
                raise ConfigError(f"expert name {name!r} may only use letters, digits, '_', '.', '-'")
        weights = [expert.weight for expert in self.experts]
        if any(not math.isfinite(weight) or weight < 0 for weight in weights):
            raise ConfigError(f"expert weights must be nonnegative, got {weights}")
        total = math.fsum(weights)
        if abs(total - 1.0) > CONVEXITY_TOLERANCE:
            raise ConfigError(f"expert weights must sum to 1, got {total!r}")
        if self.phantoms_per_expert < 1:
            raise ConfigError("phantoms_per_expert must be at least 1")
        if self.sampling.k < self.train.unroll_steps:
            raise ConfigError(
                f"sampling.k ({self.sampling.k}) must be at least train.unroll_steps "
                f"({self.train.unroll_steps})"
            )
        if self.sampling.n_initials < 1 or self.evaluation.n_initials < 1:
            raise ConfigError("n_initials must be positive")
        if self.evaluation.max_steps < 1:
            raise ConfigError("evaluation.max_steps must be positive")
        if not self.outputs:
            raise ConfigError("outputs directory must be set")

        seen_phantoms = set()
        for expert in self.experts:
            self._validate_expert(expert, seen_phantoms)

    def _validate_expert(self, expert: ExpertSpec, seen_phantoms: set) -> None:
        target_labels = set(self.target.labels)
        if expert.matrix is not None and expert.dropped_nodes:
            raise ConfigError(f"expert {expert.name}: give either dropped_nodes or matrix")
        unknown = sorted(set(expert.dropped_nodes) - target_labels)
        if unknown:
            raise ConfigError(f"expert {expert.name}: dropped nodes not in target: {unknown}")
        if len(expert.dropped_nodes) == len(self.target.labels):
            raise ConfigError(f"expert {expert.name} drops every node")

        phantoms = self.phantom_labels(expert)
        clashes = sorted(set(phantoms) & (target_labels | seen_phantoms))
        if clashes or len(set(phantoms)) != len(phantoms):
            raise ConfigError(f"expert {expert.name}: phantom labels clash: {clashes or phantoms}")
        seen_phantoms.update(phantoms)

        if expert.matrix is not None:
            observable = [label for label in expert.matrix.labels if label not in phantoms]
            stray = sorted(set(observable) - target_labels)
            if stray:
                raise ConfigError(f"expert {expert.name}: matrix nodes not in target: {stray}")
            if not observable:
                raise ConfigError(f"expert {expert.name}: matrix has no observable nodes")

    def phantom_labels(self, expert: ExpertSpec) -> Tuple[str, ...]:
        """Explicit phantom labels, or A, B, C... by expert position."""
        if expert.phantom_labels:
            return tuple(expert.phantom_labels)
        index = self.experts.index(expert)
        stem = chr(ord("A") + index) if index < 26 else f"P{index + 1}"
        if self.phantoms_per_expert == 1:
            return (stem,)
        return tuple(f"{stem}{number}" for number in range(1, self.phantoms_per_expert + 1))

    def expert(self, name: str) -> ExpertSpec:
        for expert in self.experts:
            if expert.name == name:
                return expert
        raise ConfigError(f"unknown expert {name!r}; known: {[e.name for e in self.experts]}")

    @property
    def evaluation_threshold(self) -> float:
        if self.evaluation.threshold is not None:
            return self.evaluation.threshold
        return DEFAULT_HARD_THRESHOLD

    def with_seed(self, seed: int) -> "ScenarioConfig":
        """Copy with every seed replaced by ``seed``."""
        return replace(
            self,
            train=replace(self.train, seed=seed),
            sampling=replace(self.sampling, seed=seed),
            evaluation=replace(self.evaluation, seed=seed),
        )
