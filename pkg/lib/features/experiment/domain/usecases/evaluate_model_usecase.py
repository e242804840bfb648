"""Use case for scoring a model's attractors against a target system."""

import logging
from typing import Dict, List, Optional, Sequence

import numpy as np

from lib.features.attractors.domain.entities.attractor import Attractor
from lib.features.attractors.domain.usecases.cycle_distance_usecase import (
    CycleDistanceUsecase,
)
from lib.features.attractors.domain.usecases.find_attractor_usecase import FindAttractorUsecase
from lib.features.experiment.domain.entities.evaluation_report import DistanceStats
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix
from lib.features.fcm_core.domain.entities.state_vector import StateVector
from lib.features.fcm_core.domain.entities.threshold_function import ThresholdFunction

logger = logging.getLogger(__name__)


class EvaluateModelUsecase:
    """Runs model and target from matching initial states and compares their cycles.

    Initial states are given over the target's nodes. The model starts from their
    projection onto the nodes it shares with the target, with every other node
    (phantoms included) inactive; comparison happens on the shared nodes.
    """

    def __init__(
        self,
        find_attractor_usecase: Optional[FindAttractorUsecase] = None,
        cycle_distance_usecase: Optional[CycleDistanceUsecase] = None,
    ) -> None:
        self._find_attractor = find_attractor_usecase or FindAttractorUsecase()
        self._cycle_distance = cycle_distance_usecase or CycleDistanceUsecase()
        self._target_cache: Dict[tuple, Attractor] = {}

    def execute(
        self,
        model: EdgeMatrix,
        model_phi: ThresholdFunction,
        target: EdgeMatrix,
        target_phi: ThresholdFunction,
        initials: Sequence[StateVector],
        max_steps: int,
    ) -> DistanceStats:
        observable = [label for label in target.labels if label in model.labels]
        distances: List[float] = []
        model_cache: Dict[StateVector, Attractor] = {}
        for initial in initials:
            target_attractor = self.target_attractor(target, target_phi, initial, max_steps)
            model_attractor = model_cache.get(initial)
            if model_attractor is None:
                model_attractor = self._find_attractor.execute(
                    self.embed(initial, target.labels, model.labels), model, model_phi, max_steps
                )
                model_cache[initial] = model_attractor
            if not (target_attractor.is_resolved and model_attractor.is_resolved):
                continue
            distances.append(
                self._cycle_distance.execute(model_attractor, target_attractor, observable)
            )
        stats = DistanceStats.from_distances(distances, len(initials))
        if stats.unresolved:
            logger.info("%d of %d evaluation runs were unresolved", stats.unresolved, len(initials))
        return stats

    def target_attractor(
        self,
        target: EdgeMatrix,
        phi: ThresholdFunction,
        initial: StateVector,
        max_steps: int,
    ) -> Attractor:
        """Target attractor from ``initial``, memoized across models."""
        key = (target, phi, max_steps, initial)
        attractor = self._target_cache.get(key)
        if attractor is None:
            attractor = self._find_attractor.execute(initial, target, phi, max_steps)
            self._target_cache[key] = attractor
        return attractor

    @staticmethod
    def embed(
        initial: StateVector, source_labels: Sequence[str], model_labels: Sequence[str]
    ) -> StateVector:
        """Map a state by label onto ``model_labels``; unknown nodes start at 0."""
        values = np.zeros(len(model_labels))
        for index, label in enumerate(model_labels):
            if label in source_labels:
                values[index] = initial.values[list(source_labels).index(label)]
        return StateVector(values=values)
