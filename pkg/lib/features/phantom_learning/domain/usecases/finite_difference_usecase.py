"""Central finite differences for checking analytic gradients."""

from typing import Callable

import numpy as np

from lib.core.constants.app_constants import FINITE_DIFFERENCE_STEP


class FiniteDifferenceUsecase:
    """Numerical gradient of a scalar function of a weight matrix."""

    def execute(
        self,
        fn: Callable[[np.ndarray], float],
        weights: np.ndarray,
        mask: np.ndarray,
        step: float = FINITE_DIFFERENCE_STEP,
    ) -> np.ndarray:
        """Perturb each masked entry by ±step; unmasked entries get 0."""
        base = np.array(weights, dtype=float)
        gradient = np.zeros_like(base)
        for row, col in zip(*np.nonzero(mask)):
            plus = base.copy()
            plus[row, col] += step
            minus = base.copy()
            minus[row, col] -= step
            gradient[row, col] = (fn(plus) - fn(minus)) / (2.0 * step)
        return gradient
