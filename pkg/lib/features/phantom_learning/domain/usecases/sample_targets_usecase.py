"""Use case for drawing target limit-cycle samples from a system FCM."""

import logging
from typing import Dict, List, Optional, Sequence

import numpy as np

from lib.core.constants.app_constants import DEFAULT_MAX_STEPS, SAMPLING_STREAM
from lib.core.errors.app_errors import DomainError, StructuralError
from lib.core.utils.rng import stream
from lib.features.attractors.domain.entities.attractor import Attractor
from lib.features.attractors.domain.usecases.find_attractor_usecase import FindAttractorUsecase
from lib.features.attractors.domain.usecases.initial_states_usecase import (
    InitialStatesUsecase,
)
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix
from lib.features.fcm_core.domain.entities.state_vector import StateVector
from lib.features.fcm_core.domain.entities.threshold_function import ThresholdFunction
from lib.features.phantom_learning.domain.entities.training_sample import (
    SampleAnchor,
    TrainingSample,
)

logger = logging.getLogger(__name__)


class SampleTargetsUsecase:
    """Runs random initial states to their attractors and samples k cycle steps."""

    def __init__(
        self,
        find_attractor_usecase: Optional[FindAttractorUsecase] = None,
        initial_states_usecase: Optional[InitialStatesUsecase] = None,
    ) -> None:
        self._find_attractor = find_attractor_usecase or FindAttractorUsecase()
        self._initial_states = initial_states_usecase or InitialStatesUsecase()

    def execute(
        self,
        system: EdgeMatrix,
        phi: ThresholdFunction,
        n_initials: int,
        k: int,
        seed: int,
        observable: Sequence[str],
        anchor: SampleAnchor = SampleAnchor.CANONICAL,
        skip_hidden_active: bool = False,
        max_steps: int = DEFAULT_MAX_STEPS,
    ) -> List[TrainingSample]:
        """Draw ``n_initials`` binary states and sample each one's attractor.

        Args:
            system: Target FCM
            phi: Threshold of the target dynamics
            n_initials: Number of random binary initial states
            k: Target states per sample
            seed: Seed of the sampling stream
            observable: Nodes kept in the samples
            anchor: Start at the canonical first cycle state or where the run entered
            skip_hidden_active: Advance the start to the first cycle state whose
                non-observable nodes are all inactive; cycles without one are skipped
            max_steps: Step budget per run

        Returns:
            One sample per resolved run (duplicates included)

        Raises:
            DomainError: when no run produced a usable sample
        """
        self._check_observable(system, observable)
        rng = stream(seed, SAMPLING_STREAM)
        initials = self._initial_states.random(system.dimension, n_initials, rng)

        attractors: Dict[StateVector, Attractor] = {}
        samples: List[TrainingSample] = []
        unresolved = 0
        skipped = 0
        for initial in initials:
            attractor = attractors.get(initial)
            if attractor is None:
                attractor = self._find_attractor.execute(initial, system, phi, max_steps)
                attractors[initial] = attractor
            if not attractor.is_resolved:
                unresolved += 1
                continue
            sample = self.from_attractor(attractor, k, observable, anchor, skip_hidden_active)
            if sample is None:
                skipped += 1
                continue
            samples.append(sample)

        if unresolved:
            logger.info("Skipped %d of %d unresolved runs", unresolved, n_initials)
        if skipped:
            logger.info("Skipped %d runs whose cycles never rest the hidden nodes", skipped)
        if not samples:
            raise DomainError(
                f"no usable samples: {unresolved} of {n_initials} runs unresolved, "
                f"{skipped} skipped"
            )
        return samples

    def from_attractor(
        self,
        attractor: Attractor,
        k: int,
        observable: Sequence[str],
        anchor: SampleAnchor = SampleAnchor.CANONICAL,
        skip_hidden_active: bool = False,
    ) -> Optional[TrainingSample]:
        """Sample pairing an anchor cycle state with the k states that follow it."""
        if k < 1:
            raise DomainError(f"k must be at least 1, got {k}")
        if not attractor.is_resolved:
            raise DomainError("cannot sample an unresolved attractor")
        observable = tuple(observable)
        indices = [attractor.labels.index(label) for label in observable]
        period = attractor.period
        start = 0 if anchor is SampleAnchor.CANONICAL else attractor.entry

        if skip_hidden_active:
            hidden = [i for i, label in enumerate(attractor.labels) if label not in observable]
            resting = [
                offset
                for offset in range(period)
                if not np.any(attractor.states[(start + offset) % period].values[hidden])
            ]
            if not resting:
                return None
            start = (start + resting[0]) % period

        def observed(position: int) -> StateVector:
            return attractor.states[position % period].project(indices)

        return TrainingSample(
            initial=observed(start),
            target_states=tuple(observed(start + step) for step in range(1, k + 1)),
            labels=observable,
        )

    @staticmethod
    def _check_observable(system: EdgeMatrix, observable: Sequence[str]) -> None:
        unknown = [label for label in observable if label not in system.labels]
        if unknown:
            raise StructuralError(f"unknown observable labels: {', '.join(unknown)}")
        if not observable:
            raise StructuralError("at least one observable node is required")
