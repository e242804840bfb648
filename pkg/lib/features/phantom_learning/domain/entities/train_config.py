"""Hyperparameters for phantom-edge learning."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from lib.core.constants.app_constants import (
    DEFAULT_EPOCHS,
    DEFAULT_L1_SHRINKAGE,
    DEFAULT_LEARNING_RATE,
    DEFAULT_LOG_EVERY,
    DEFAULT_SEED,
    DEFAULT_SIGMOID_OFFSET,
    DEFAULT_SIGMOID_STEEPNESS,
    DEFAULT_UNROLL_STEPS,
)
from lib.core.errors.app_errors import DomainError


class LossKind(str, Enum):
    SQUARED_ERROR = "squared_error"
    ENTROPIC = "entropic"


class Weighting(str, Enum):
    MULTIPLICITY = "multiplicity"
    UNIFORM = "uniform"


class PhantomInitKind(str, Enum):
    ZEROS = "zeros"
    UNIFORM_SYMMETRIC = "uniform_symmetric"


@dataclass(frozen=True)
class PhantomInit:
    """Initial values of the trainable edges."""

    kind: PhantomInitKind = PhantomInitKind.ZEROS
    half_width: float = 0.0

    def __post_init__(self) -> None:
        if self.kind is PhantomInitKind.UNIFORM_SYMMETRIC and not 0.0 < self.half_width <= 1.0:
            raise DomainError(f"half_width must lie in (0, 1], got {self.half_width!r}")

    @classmethod
    def zeros(cls) -> "PhantomInit":
        return cls()

    @classmethod
    def uniform_symmetric(cls, half_width: float) -> "PhantomInit":
        return cls(kind=PhantomInitKind.UNIFORM_SYMMETRIC, half_width=half_width)

    def to_dict(self) -> dict:
        if self.kind is PhantomInitKind.ZEROS:
            return {"kind": self.kind.value}
        return {"kind": self.kind.value, "half_width": self.half_width}


@dataclass(frozen=True)
class TrainConfig:
    """Gradient-descent settings.

    ``sigmoid_offset`` shifts the soft threshold away from 0; a positive offset lets zero
    input map near 0 so the loss can approach 0. ``anneal_to`` moves the steepness
    geometrically towards a final value over the epochs. ``l1_shrinkage`` soft-thresholds
    every trainable edge by ``learning_rate * l1_shrinkage`` after each step, so edges
    that no sample constrains settle at exactly 0.
    """

    loss: LossKind = LossKind.SQUARED_ERROR
    learning_rate: float = DEFAULT_LEARNING_RATE
    epochs: int = DEFAULT_EPOCHS
    unroll_steps: int = DEFAULT_UNROLL_STEPS
    sigmoid_steepness: float = DEFAULT_SIGMOID_STEEPNESS
    phantom_init: PhantomInit = field(default_factory=PhantomInit)
    seed: int = DEFAULT_SEED
    clip_to_bipolar: bool = True
    sigmoid_offset: float = DEFAULT_SIGMOID_OFFSET
    anneal_to: Optional[float] = None
    weighting: Weighting = Weighting.MULTIPLICITY
    l1_shrinkage: float = DEFAULT_L1_SHRINKAGE
    log_every: int = DEFAULT_LOG_EVERY

    def __post_init__(self) -> None:
        # a zero rate is allowed and leaves the initialized matrix untouched
        if not np.isfinite(self.learning_rate) or self.learning_rate < 0:
            raise DomainError(f"learning_rate must be nonnegative, got {self.learning_rate!r}")
        if self.epochs < 1:
            raise DomainError(f"epochs must be at least 1, got {self.epochs}")
        if self.unroll_steps < 1:
            raise DomainError(f"unroll_steps must be at least 1, got {self.unroll_steps}")
        if self.sigmoid_steepness <= 0:
            raise DomainError(f"sigmoid_steepness must be positive, got {self.sigmoid_steepness!r}")
        if self.anneal_to is not None and self.anneal_to <= 0:
            raise DomainError(f"anneal_to must be positive, got {self.anneal_to!r}")
        if not np.isfinite(self.l1_shrinkage) or self.l1_shrinkage < 0:
            raise DomainError(f"l1_shrinkage must be nonnegative, got {self.l1_shrinkage!r}")
        if self.log_every < 1:
            raise DomainError(f"log_every must be at least 1, got {self.log_every}")

    def steepness_at(self, epoch: int) -> float:
        """Steepness used during ``epoch`` (0-based)."""
        if self.anneal_to is None or self.epochs == 1:
            return self.sigmoid_steepness
        fraction = epoch / (self.epochs - 1)
        return float(self.sigmoid_steepness * (self.anneal_to / self.sigmoid_steepness) ** fraction)

    def to_dict(self) -> dict:
        return {
            "loss": self.loss.value,
            "learning_rate": self.learning_rate,
            "epochs": self.epochs,
            "unroll_steps": self.unroll_steps,
            "sigmoid_steepness": self.sigmoid_steepness,
            "sigmoid_offset": self.sigmoid_offset,
            "anneal_to": self.anneal_to,
            "phantom_init": self.phantom_init.to_dict(),
            "seed": self.seed,
            "clip_to_bipolar": self.clip_to_bipolar,
            "weighting": self.weighting.value,
            "l1_shrinkage": self.l1_shrinkage,
            "log_every": self.log_every,
        }
