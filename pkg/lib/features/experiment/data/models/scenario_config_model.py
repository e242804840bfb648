"""Data models for scenario files."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Optional, Type, TypeVar

from lib.core.errors.app_errors import ArtifactIOError, ConfigError, FcmError
from lib.features.experiment.domain.entities.scenario_config import (
    EvaluationSpec,
    ExpertSpec,
    MixingSpec,
    SamplingSpec,
    ScenarioConfig,
)
from lib.features.fcm_core.data.models.edge_matrix_model import EdgeMatrixModel
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix
from lib.features.phantom_learning.domain.entities.train_config import (
    LossKind,
    PhantomInit,
    PhantomInitKind,
    TrainConfig,
    Weighting,
)
from lib.features.phantom_learning.domain.entities.training_sample import SampleAnchor

E = TypeVar("E", bound=Enum)

TOP_LEVEL_KEYS = {
    "name",
    "target",
    "experts",
    "train",
    "sampling",
    "evaluation",
    "mixing",
    "phantoms_per_expert",
    "outputs",
    "skip_training",
}
EXPERT_KEYS = {"name", "weight", "dropped_nodes", "matrix", "phantom_labels"}
TRAIN_KEYS = {
    "loss",
    "learning_rate",
    "epochs",
    "unroll_steps",
    "sigmoid_steepness",
    "sigmoid_offset",
    "anneal_to",
    "phantom_init",
    "seed",
    "clip_to_bipolar",
    "weighting",
    "l1_shrinkage",
    "log_every",
}
PHANTOM_INIT_KEYS = {"kind", "half_width"}
SAMPLING_KEYS = {"n_initials", "k", "anchor", "skip_hidden_active", "seed"}
EVALUATION_KEYS = {"n_initials", "max_steps", "seed", "exhaustive", "threshold"}
MIXING_KEYS = {"coverage_normalized"}


@dataclass(frozen=True)
class ExpertModel:
    """DTO for one ``experts`` entry."""

    name: str
    weight: float
    dropped_nodes: List[str] = field(default_factory=list)
    matrix: Optional[EdgeMatrixModel] = None
    phantom_labels: List[str] = field(default_factory=list)

    @staticmethod
    def from_dict(payload: dict) -> "ExpertModel":
        section = _section(payload, "experts[]", EXPERT_KEYS)
        if "name" not in section or "weight" not in section:
            raise ConfigError("every expert needs 'name' and 'weight'")
        matrix = section.get("matrix")
        return ExpertModel(
            name=str(section["name"]),
            weight=_number(section["weight"], "expert weight"),
            dropped_nodes=_labels(section.get("dropped_nodes", []), "dropped_nodes"),
            matrix=_matrix_model(matrix) if matrix is not None else None,
            phantom_labels=_labels(section.get("phantom_labels", []), "phantom_labels"),
        )

    @staticmethod
    def from_entity(expert: ExpertSpec) -> "ExpertModel":
        return ExpertModel(
            name=expert.name,
            weight=expert.weight,
            dropped_nodes=list(expert.dropped_nodes),
            matrix=EdgeMatrixModel.from_entity(expert.matrix) if expert.matrix is not None else None,
            phantom_labels=list(expert.phantom_labels),
        )

    def to_entity(self) -> ExpertSpec:
        return ExpertSpec(
            name=self.name,
            weight=self.weight,
            dropped_nodes=tuple(self.dropped_nodes),
            matrix=self.matrix.to_entity() if self.matrix is not None else None,
            phantom_labels=tuple(self.phantom_labels),
        )

    def to_dict(self) -> dict:
        payload: dict = {"name": self.name, "weight": self.weight}
        if self.dropped_nodes:
            payload["dropped_nodes"] = list(self.dropped_nodes)
        if self.matrix is not None:
            payload["matrix"] = self.matrix.to_dict()
        if self.phantom_labels:
            payload["phantom_labels"] = list(self.phantom_labels)
        return payload


@dataclass(frozen=True)
class ScenarioConfigModel:
    """DTO mirroring the YAML layout; sections stay as checked plain dicts."""

    name: str
    experts: List[ExpertModel]
    target: Optional[EdgeMatrixModel] = None
    target_file: Optional[str] = None
    train: Dict = field(default_factory=dict)
    sampling: Dict = field(default_factory=dict)
    evaluation: Dict = field(default_factory=dict)
    mixing: Dict = field(default_factory=dict)
    phantoms_per_expert: int = 1
    outputs: Optional[str] = None
    skip_training: bool = False

    @staticmethod
    def from_dict(payload: dict) -> "ScenarioConfigModel":
        root = _section(payload, "scenario", TOP_LEVEL_KEYS)
        for key in ("name", "target", "experts"):
            if key not in root:
                raise ConfigError(f"scenario is missing '{key}'")
        experts = root["experts"]
        if not isinstance(experts, list):
            raise ConfigError("'experts' must be a list")

        target = root["target"]
        target_model = None
        target_file = None
        if isinstance(target, dict) and set(target) == {"file"}:
            target_file = str(target["file"])
        else:
            target_model = _matrix_model(target)

        train = _section(root.get("train", {}), "train", TRAIN_KEYS)
        if "phantom_init" in train:
            _section(train["phantom_init"], "train.phantom_init", PHANTOM_INIT_KEYS)
        return ScenarioConfigModel(
            name=str(root["name"]),
            experts=[ExpertModel.from_dict(expert) for expert in experts],
            target=target_model,
            target_file=target_file,
            train=train,
            sampling=_section(root.get("sampling", {}), "sampling", SAMPLING_KEYS),
            evaluation=_section(root.get("evaluation", {}), "evaluation", EVALUATION_KEYS),
            mixing=_section(root.get("mixing", {}), "mixing", MIXING_KEYS),
            phantoms_per_expert=_integer(root.get("phantoms_per_expert", 1), "phantoms_per_expert"),
            outputs=str(root["outputs"]) if root.get("outputs") is not None else None,
            skip_training=_flag(root.get("skip_training", False), "skip_training"),
        )

    @staticmethod
    def from_entity(config: ScenarioConfig) -> "ScenarioConfigModel":
        """Canonical form: the target is always inlined."""
        train = config.train.to_dict()
        if train["anneal_to"] is None:
            del train["anneal_to"]
        evaluation = {
            "n_initials": config.evaluation.n_initials,
            "max_steps": config.evaluation.max_steps,
            "seed": config.evaluation.seed,
            "exhaustive": config.evaluation.exhaustive,
        }
        if config.evaluation.threshold is not None:
            evaluation["threshold"] = config.evaluation.threshold
        return ScenarioConfigModel(
            name=config.name,
            experts=[ExpertModel.from_entity(expert) for expert in config.experts],
            target=EdgeMatrixModel.from_entity(config.target),
            train=train,
            sampling={
                "n_initials": config.sampling.n_initials,
                "k": config.sampling.k,
                "anchor": config.sampling.anchor.value,
                "skip_hidden_active": config.sampling.skip_hidden_active,
                "seed": config.sampling.seed,
            },
            evaluation=evaluation,
            mixing={"coverage_normalized": config.mixing.coverage_normalized},
            phantoms_per_expert=config.phantoms_per_expert,
            outputs=config.outputs,
            skip_training=config.skip_training,
        )

    def to_entity(self, load_matrix: Callable[[str], EdgeMatrix]) -> ScenarioConfig:
        """Convert to domain entity.

        Args:
            load_matrix: Resolves ``target: {file: ...}`` references

        Raises:
            ConfigError: for any invalid value, including ones the entities reject
        """
        try:
            if self.target is not None:
                target = self.target.to_entity()
            else:
                target = load_matrix(self.target_file)
            extras = {"outputs": self.outputs} if self.outputs is not None else {}
            return ScenarioConfig(
                name=self.name,
                target=target,
                experts=tuple(expert.to_entity() for expert in self.experts),
                train=self._train_entity(),
                sampling=self._sampling_entity(),
                evaluation=self._evaluation_entity(),
                mixing=MixingSpec(
                    coverage_normalized=_flag(
                        self.mixing.get("coverage_normalized", False), "coverage_normalized"
                    )
                ),
                phantoms_per_expert=self.phantoms_per_expert,
                skip_training=self.skip_training,
                target_file=self.target_file,
                **extras,
            )
        except (ConfigError, ArtifactIOError):
            raise
        except FcmError as error:
            raise ConfigError(f"invalid scenario {self.name!r}: {error}") from error

    def to_dict(self) -> dict:
        payload: dict = {"name": self.name}
        if self.target is not None:
            payload["target"] = self.target.to_dict()
        else:
            payload["target"] = {"file": self.target_file}
        payload["experts"] = [expert.to_dict() for expert in self.experts]
        payload["phantoms_per_expert"] = self.phantoms_per_expert
        payload["skip_training"] = self.skip_training
        if self.outputs is not None:
            payload["outputs"] = self.outputs
        for key in ("train", "sampling", "mixing", "evaluation"):
            section = getattr(self, key)
            if section:
                payload[key] = dict(section)
        return payload

    def _train_entity(self) -> TrainConfig:
        section = self.train
        kwargs: dict = {}
        if "loss" in section:
            kwargs["loss"] = _enum(LossKind, section["loss"], "train.loss")
        if "weighting" in section:
            kwargs["weighting"] = _enum(Weighting, section["weighting"], "train.weighting")
        for key in ("learning_rate", "sigmoid_steepness", "sigmoid_offset", "l1_shrinkage"):
            if key in section:
                kwargs[key] = _number(section[key], f"train.{key}")
        for key in ("epochs", "unroll_steps", "seed", "log_every"):
            if key in section:
                kwargs[key] = _integer(section[key], f"train.{key}")
        if section.get("anneal_to") is not None:
            kwargs["anneal_to"] = _number(section["anneal_to"], "train.anneal_to")
        if "clip_to_bipolar" in section:
            kwargs["clip_to_bipolar"] = _flag(section["clip_to_bipolar"], "train.clip_to_bipolar")
        if "phantom_init" in section:
            init = section["phantom_init"]
            kind = _enum(PhantomInitKind, init.get("kind", PhantomInitKind.ZEROS.value), "kind")
            kwargs["phantom_init"] = PhantomInit(
                kind=kind,
                half_width=_number(init.get("half_width", 0.0), "train.phantom_init.half_width"),
            )
        return TrainConfig(**kwargs)

    def _sampling_entity(self) -> SamplingSpec:
        section = self.sampling
        kwargs: dict = {}
        for key in ("n_initials", "k", "seed"):
            if key in section:
                kwargs[key] = _integer(section[key], f"sampling.{key}")
        if "anchor" in section:
            kwargs["anchor"] = _enum(SampleAnchor, section["anchor"], "sampling.anchor")
        if "skip_hidden_active" in section:
            kwargs["skip_hidden_active"] = _flag(
                section["skip_hidden_active"], "sampling.skip_hidden_active"
            )
        return SamplingSpec(**kwargs)

    def _evaluation_entity(self) -> EvaluationSpec:
        section = self.evaluation
        kwargs: dict = {}
        for key in ("n_initials", "max_steps", "seed"):
            if key in section:
                kwargs[key] = _integer(section[key], f"evaluation.{key}")
        if "exhaustive" in section:
            kwargs["exhaustive"] = _flag(section["exhaustive"], "evaluation.exhaustive")
        if section.get("threshold") is not None:
            kwargs["threshold"] = _number(section["threshold"], "evaluation.threshold")
        return EvaluationSpec(**kwargs)


def _section(payload, name: str, allowed: set) -> dict:
    if not isinstance(payload, dict):
        raise ConfigError(f"'{name}' must be a mapping")
    unknown = sorted(set(payload) - allowed)
    if unknown:
        raise ConfigError(f"unknown keys in '{name}': {', '.join(map(str, unknown))}")
    return dict(payload)


def _matrix_model(payload) -> EdgeMatrixModel:
    try:
        return EdgeMatrixModel.from_dict(payload)
    except (FcmError, TypeError) as error:
        raise ConfigError(f"invalid inline matrix: {error}") from error


def _labels(value, name: str) -> List[str]:
    if isinstance(value, str):
        value = [part.strip() for part in value.split(",") if part.strip()]
    if not isinstance(value, list):
        raise ConfigError(f"'{name}' must be a list of node names")
    return [str(item) for item in value]


def _number(value, name: str) -> float:
    if isinstance(value, bool):
        raise ConfigError(f"'{name}' must be a number, got {value!r}")
    try:
        return float(value)
    except (TypeError, ValueError) as error:
        raise ConfigError(f"'{name}' must be a number, got {value!r}") from error


def _integer(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"'{name}' must be an integer, got {value!r}")
    return value


def _flag(value, name: str) -> bool:
    if not isinstance(value, bool):
        raise ConfigError(f"'{name}' must be true or false, got {value!r}")
    return value


def _enum(kind: Type[E], value, name: str) -> E:
    try:
        return kind(value)
    except ValueError as error:
        choices = ", ".join(member.value for member in kind)
        raise ConfigError(f"'{name}' must be one of {choices}, got {value!r}") from error
