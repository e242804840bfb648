"""Use case for replaying one trained component from a chosen initial state."""

import logging
from pathlib import Path
from typing import Optional

from lib.core.constants.app_constants import DEFAULT_RASTER_STEPS
from lib.core.errors.app_errors import StructuralError
from lib.features.attractors.domain.usecases.cycle_distance_usecase import (
    CycleDistanceUsecase,
)
from lib.features.attractors.domain.usecases.find_attractor_usecase import FindAttractorUsecase
from lib.features.experiment.domain.entities.replay_result import ReplayResult
from lib.features.experiment.domain.entities.scenario_config import ScenarioConfig
from lib.features.experiment.domain.repositories.artifact_repository import ArtifactRepository
from lib.features.experiment.domain.usecases.evaluate_model_usecase import (
    EvaluateModelUsecase,
)
from lib.features.experiment.domain.usecases.run_scenario_usecase import RunScenarioUsecase
from lib.features.fcm_core.domain.entities.state_vector import StateVector
from lib.features.fcm_core.domain.entities.threshold_function import HardBinary
from lib.features.fcm_core.domain.usecases.trajectory_usecase import TrajectoryUsecase

logger = logging.getLogger(__name__)

REPLAY_PREFIX = "replay-"


class ReplayComponentUsecase:
    """Loads a trained expert from the outputs directory and reruns it."""

    def __init__(
        self,
        artifact_repository: ArtifactRepository,
        find_attractor_usecase: Optional[FindAttractorUsecase] = None,
        trajectory_usecase: Optional[TrajectoryUsecase] = None,
        cycle_distance_usecase: Optional[CycleDistanceUsecase] = None,
    ) -> None:
        self._artifacts = artifact_repository
        self._find_attractor = find_attractor_usecase or FindAttractorUsecase()
        self._trajectory = trajectory_usecase or TrajectoryUsecase()
        self._cycle_distance = cycle_distance_usecase or CycleDistanceUsecase()

    def execute(
        self,
        config: ScenarioConfig,
        expert_name: str,
        initial: StateVector,
        base_dir: Optional[Path] = None,
    ) -> ReplayResult:
        """Replay ``expert_name`` from ``initial``.

        ``initial`` covers either every target node or just the expert's observable
        nodes (in the expert's label order); nodes it does not cover start inactive.

        Raises:
            ArtifactIOError: when the expert's matrix was never written
            StructuralError: when ``initial`` fits neither node set
        """
        spec = config.expert(expert_name)
        outputs = RunScenarioUsecase.resolve_outputs(config, base_dir)
        model = self._artifacts.load_matrix(outputs, spec.name)
        phantom = set(config.phantom_labels(spec))
        observable = [label for label in model.labels if label not in phantom]

        if initial.dimension == config.target.dimension:
            source_labels = list(config.target.labels)
        elif initial.dimension == len(observable):
            source_labels = observable
        else:
            raise StructuralError(
                f"initial state has {initial.dimension} nodes; expected "
                f"{config.target.dimension} (target) or {len(observable)} (expert {spec.name})"
            )

        max_steps = config.evaluation.max_steps
        model_start = EvaluateModelUsecase.embed(initial, source_labels, model.labels)
        target_start = EvaluateModelUsecase.embed(initial, source_labels, config.target.labels)
        phi = HardBinary(threshold=config.evaluation_threshold)

        attractor = self._find_attractor.execute(model_start, model, phi, max_steps)
        target_attractor = self._find_attractor.execute(
            target_start, config.target, HardBinary(), max_steps
        )
        distance = None
        if attractor.is_resolved and target_attractor.is_resolved:
            distance = self._cycle_distance.execute(attractor, target_attractor, observable)

        steps = DEFAULT_RASTER_STEPS
        if attractor.is_resolved:
            steps = min(max_steps, max(steps, attractor.transient + 2 * attractor.period))
        trajectory = self._trajectory.execute(model_start, model, phi, steps)
        raster = self._artifacts.save_raster(
            outputs, f"{REPLAY_PREFIX}{spec.name}", trajectory, model.labels
        )
        logger.info(
            "Replayed %s from %s: %s (target %s)",
            spec.name,
            initial.bits_text(),
            attractor.describe(),
            target_attractor.describe(),
        )
        return ReplayResult(
            expert=spec.name,
            attractor=attractor,
            trajectory=tuple(trajectory),
            raster_path=raster,
            target_attractor=target_attractor,
            distance=distance,
        )
