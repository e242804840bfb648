"""Threshold functions mapping summed causal input into [0, 1]."""

from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from lib.core.constants.app_constants import (
    DEFAULT_HARD_THRESHOLD,
    DEFAULT_SIGMOID_OFFSET,
    DEFAULT_SIGMOID_STEEPNESS,
    SIGMOID_CYCLE_TOLERANCE,
)
from lib.core.errors.app_errors import DomainError


class ThresholdFunction(ABC):
    """Monotone nondecreasing map from reals into [0, 1]."""

    @abstractmethod
    def apply(self, x: np.ndarray) -> np.ndarray:
        """Apply the threshold componentwise."""

    @property
    @abstractmethod
    def default_tolerance(self) -> float:
        """Equality tolerance used when detecting repeated states."""

    @abstractmethod
    def to_dict(self) -> dict:
        """Convert to a plain dict."""


@dataclass(frozen=True)
class HardBinary(ThresholdFunction):
    """Step function: 1 when the input exceeds ``threshold``, else 0."""

    threshold: float = DEFAULT_HARD_THRESHOLD

    def apply(self, x: np.ndarray) -> np.ndarray:
        return (np.asarray(x, dtype=float) > self.threshold).astype(float)

    @property
    def default_tolerance(self) -> float:
        return 0.0

    def to_dict(self) -> dict:
        return {"variant": "hard_binary", "threshold": self.threshold}


@dataclass(frozen=True)
class Sigmoid(ThresholdFunction):
    """Logistic curve ``1 / (1 + exp(-steepness * (x - offset)))``."""

    steepness: float = DEFAULT_SIGMOID_STEEPNESS
    offset: float = DEFAULT_SIGMOID_OFFSET

    def __post_init__(self) -> None:
        if not np.isfinite(self.steepness) or self.steepness <= 0:
            raise DomainError(f"sigmoid steepness must be positive, got {self.steepness!r}")
        if not np.isfinite(self.offset):
            raise DomainError(f"sigmoid offset must be finite, got {self.offset!r}")

    def apply(self, x: np.ndarray) -> np.ndarray:
        # tanh form of the logistic never overflows
        z = self.steepness * (np.asarray(x, dtype=float) - self.offset)
        return 0.5 * (1.0 + np.tanh(0.5 * z))

    def derivative_from_output(self, y: np.ndarray) -> np.ndarray:
        """Slope expressed through the output value ``y = apply(x)``."""
        return self.steepness * y * (1.0 - y)

    @property
    def default_tolerance(self) -> float:
        return SIGMOID_CYCLE_TOLERANCE

    def to_dict(self) -> dict:
        return {"variant": "sigmoid", "steepness": self.steepness, "offset": self.offset}
