"""Use case for running augmented dynamics from an observable start state."""

from typing import List, Optional

import numpy as np

from lib.core.constants.app_constants import DEFAULT_SIGMOID_OFFSET
from lib.core.errors.app_errors import DomainError, StructuralError
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix
from lib.features.fcm_core.domain.entities.state_vector import StateVector
from lib.features.fcm_core.domain.entities.threshold_function import (
    Sigmoid,
    ThresholdFunction,
)
from lib.features.phantom_learning.domain.entities.phantom_layout import PhantomLayout


class ForwardUnrollUsecase:
    """Unrolls k update steps with phantom nodes starting inactive."""

    def execute(
        self,
        aug: EdgeMatrix,
        layout: PhantomLayout,
        initial_observable: StateVector,
        steps: int,
        steepness: float,
        offset: float = DEFAULT_SIGMOID_OFFSET,
        phi: Optional[ThresholdFunction] = None,
    ) -> List[StateVector]:
        """Return the observable projection of C̃(1) ... C̃(steps).

        Args:
            aug: Augmented edge matrix
            layout: Node roles of ``aug``
            initial_observable: Start state over ``layout.observable``
            steps: Number of updates
            steepness: Sigmoid steepness
            offset: Sigmoid offset
            phi: Overrides the sigmoid, e.g. HardBinary for evaluation
        """
        if aug.labels != layout.labels:
            raise StructuralError("augmented matrix labels do not match the layout")
        if initial_observable.dimension != len(layout.observable):
            raise StructuralError(
                f"initial state has dimension {initial_observable.dimension}, "
                f"layout has {len(layout.observable)} observable nodes"
            )
        if steps < 1:
            raise DomainError(f"steps must be at least 1, got {steps}")
        phi = phi or Sigmoid(steepness=steepness, offset=offset)
        initial = self.embed(layout, initial_observable.values[np.newaxis, :])
        states = self.run(aug.weights, initial, steps, phi)
        observable = layout.observable_indices
        return [StateVector(values=state[0, observable]) for state in states[1:]]

    def embed(self, layout: PhantomLayout, observable_rows: np.ndarray) -> np.ndarray:
        """Full-width states with observable columns filled and phantoms at 0."""
        full = np.zeros((observable_rows.shape[0], len(layout.labels)))
        full[:, layout.observable_indices] = observable_rows
        return full

    def run(
        self,
        weights: np.ndarray,
        initial: np.ndarray,
        steps: int,
        phi: ThresholdFunction,
    ) -> List[np.ndarray]:
        """Batch recurrence X(t+1) = Φ(X(t)·E); returns [X(0), ..., X(steps)]."""
        states = [initial]
        for _ in range(steps):
            states.append(phi.apply(states[-1] @ weights))
        return states
