"""Use case for advancing an FCM state by one update."""

from lib.core.errors.app_errors import StructuralError
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix
from lib.features.fcm_core.domain.entities.state_vector import StateVector
from lib.features.fcm_core.domain.entities.threshold_function import ThresholdFunction


class StepUsecase:
    """Computes C(t+1) = Φ(C(t)·E) with clamped nodes held constant."""

    def execute(self, state: StateVector, fcm: EdgeMatrix, phi: ThresholdFunction) -> StateVector:
        """Advance ``state`` by one step.

        Args:
            state: Current activation; its clamp mask carries over to the result
            fcm: Edge matrix whose rows are sources and columns are targets
            phi: Threshold applied to each node's summed input

        Returns:
            The next state

        Raises:
            StructuralError: when the state and matrix dimensions differ
        """
        if state.dimension != fcm.dimension:
            raise StructuralError(
                f"state dimension {state.dimension} does not match fcm dimension {fcm.dimension}"
            )
        activation = phi.apply(state.values @ fcm.weights)
        return StateVector(values=state.apply_clamp(activation), clamp=state.clamp)
