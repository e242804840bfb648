"""Use case for iterating an FCM from an initial state."""

from typing import List, Optional

from lib.core.errors.app_errors import DomainError
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix
from lib.features.fcm_core.domain.entities.state_vector import StateVector
from lib.features.fcm_core.domain.entities.threshold_function import ThresholdFunction
from lib.features.fcm_core.domain.usecases.step_usecase import StepUsecase


class TrajectoryUsecase:
    """Runs the time evolution C(0), C(1), ..., C(max_steps)."""

    def __init__(self, step_usecase: Optional[StepUsecase] = None) -> None:
        self._step = step_usecase or StepUsecase()

    def execute(
        self,
        initial: StateVector,
        fcm: EdgeMatrix,
        phi: ThresholdFunction,
        max_steps: int,
    ) -> List[StateVector]:
        """Return ``max_steps + 1`` states starting with ``initial``."""
        if max_steps < 0:
            raise DomainError(f"max_steps must be nonnegative, got {max_steps}")
        states = [initial]
        for _ in range(max_steps):
            states.append(self._step.execute(states[-1], fcm, phi))
        return states
