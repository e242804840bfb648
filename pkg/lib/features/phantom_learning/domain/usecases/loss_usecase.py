"""Use case for the discrepancy between predicted and target trajectories."""

from typing import Sequence

import numpy as np

from lib.core.constants.app_constants import ENTROPIC_CLAMP
from lib.core.errors.app_errors import StructuralError
from lib.features.fcm_core.domain.entities.state_vector import StateVector
from lib.features.phantom_learning.domain.entities.train_config import LossKind


class LossUsecase:
    """Squared-error and cross-entropy losses with their derivatives."""

    def execute(
        self,
        predicted: Sequence[StateVector],
        target: Sequence[StateVector],
        kind: LossKind = LossKind.SQUARED_ERROR,
    ) -> float:
        """Summed loss over steps and nodes.

        SquaredError is Σₜ ‖C(t) − C̃(t)‖². Entropic is the cross-entropy
        −Σₜ Σᵢ [Cᵢ ln C̃ᵢ + (1 − Cᵢ) ln(1 − C̃ᵢ)] with predictions clamped away from 0 and 1.
        """
        if len(predicted) != len(target):
            raise StructuralError(
                f"predicted has {len(predicted)} steps but target has {len(target)}"
            )
        if not predicted:
            return 0.0
        for guess, truth in zip(predicted, target):
            if guess.dimension != truth.dimension:
                raise StructuralError(
                    f"predicted dimension {guess.dimension} does not match target {truth.dimension}"
                )
        guesses = np.vstack([state.values for state in predicted])
        truths = np.vstack([state.values for state in target])
        return float(np.sum(self.value(guesses, truths, kind)))

    def value(self, predicted: np.ndarray, target: np.ndarray, kind: LossKind) -> np.ndarray:
        """Elementwise loss terms."""
        if kind is LossKind.SQUARED_ERROR:
            return (predicted - target) ** 2
        clamped = np.clip(predicted, ENTROPIC_CLAMP, 1.0 - ENTROPIC_CLAMP)
        return -(target * np.log(clamped) + (1.0 - target) * np.log(1.0 - clamped))

    def derivative(self, predicted: np.ndarray, target: np.ndarray, kind: LossKind) -> np.ndarray:
        """Elementwise derivative of :meth:`value` with respect to ``predicted``."""
        if kind is LossKind.SQUARED_ERROR:
            return 2.0 * (predicted - target)
        inside = (predicted > ENTROPIC_CLAMP) & (predicted < 1.0 - ENTROPIC_CLAMP)
        clamped = np.clip(predicted, ENTROPIC_CLAMP, 1.0 - ENTROPIC_CLAMP)
        slope = -target / clamped + (1.0 - target) / (1.0 - clamped)
        return np.where(inside, slope, 0.0)
