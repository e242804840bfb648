"""Use case for detecting the attractor reached from an initial state."""

import logging
from typing import Dict, List, Optional

from lib.core.constants.app_constants import DEFAULT_MAX_STEPS
from lib.core.errors.app_errors import DomainError, StructuralError
from lib.features.attractors.domain.entities.attractor import Attractor
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix
from lib.features.fcm_core.domain.entities.state_vector import StateVector
from lib.features.fcm_core.domain.entities.threshold_function import ThresholdFunction
from lib.features.fcm_core.domain.usecases.step_usecase import StepUsecase

logger = logging.getLogger(__name__)


class FindAttractorUsecase:
    """Iterates until a state repeats, tracking first visits in a hash map."""

    def __init__(self, step_usecase: Optional[StepUsecase] = None) -> None:
        self._step = step_usecase or StepUsecase()

    def execute(
        self,
        initial: StateVector,
        fcm: EdgeMatrix,
        phi: ThresholdFunction,
        max_steps: int = DEFAULT_MAX_STEPS,
        tol: Optional[float] = None,
    ) -> Attractor:
        """Classify the long-run behaviour from ``initial``.

        Args:
            initial: Starting state
            fcm: Edge matrix to iterate
            phi: Threshold function
            max_steps: Number of updates before giving up
            tol: State equality tolerance; defaults to 0 for HardBinary, 1e-6 for Sigmoid

        Returns:
            FixedPoint or minimal-period LimitCycle in canonical form, or Unresolved
            with ``transient = max_steps`` when nothing repeated in time
        """
        if max_steps < 1:
            raise DomainError(f"max_steps must be at least 1, got {max_steps}")
        if initial.dimension != fcm.dimension:
            raise StructuralError(
                f"state dimension {initial.dimension} does not match fcm dimension {fcm.dimension}"
            )
        tol = phi.default_tolerance if tol is None else tol
        if tol < 0:
            raise DomainError(f"tolerance must be nonnegative, got {tol}")

        first_seen: Dict[bytes, int] = {}
        states: List[StateVector] = []
        state = initial
        for time_index in range(max_steps + 1):
            key = state.key(tol)
            if key in first_seen:
                start = first_seen[key]
                return Attractor.from_cycle(
                    states[start:], transient=start, labels=fcm.labels, tol=tol
                )
            first_seen[key] = time_index
            states.append(state)
            if time_index < max_steps:
                state = self._step.execute(state, fcm, phi)

        logger.debug("No repeat within %d steps from %s", max_steps, initial.bits_text())
        return Attractor.unresolved(transient=max_steps, labels=fcm.labels)
