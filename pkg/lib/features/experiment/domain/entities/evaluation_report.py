"""Results of evaluating experts and their mixture against a target system."""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from lib.core.errors.app_errors import DomainError


@dataclass(frozen=True)
class DistanceStats:
    """Summary of cycle distances over evaluation initial states."""

    n_initials: int
    unresolved: int
    match_rate: float
    mean: float
    median: float
    maximum: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.match_rate <= 1.0:
            raise DomainError(f"match rate {self.match_rate!r} outside [0, 1]")
        if min(self.mean, self.median, self.maximum) < 0.0:
            raise DomainError("distances must be nonnegative")

    @classmethod
    def from_distances(cls, distances: Sequence[float], n_initials: int) -> "DistanceStats":
        """Matches are distances of exactly 0; unresolved runs carry no distance."""
        values = np.array(distances, dtype=float)
        if values.size == 0:
            return cls(n_initials, n_initials, 0.0, 0.0, 0.0, 0.0)
        return cls(
            n_initials=n_initials,
            unresolved=n_initials - int(values.size),
            match_rate=float(np.count_nonzero(values == 0.0) / values.size),
            mean=float(np.mean(values)),
            median=float(np.median(values)),
            maximum=float(np.max(values)),
        )

    def to_dict(self) -> dict:
        return {
            "n_initials": self.n_initials,
            "unresolved": self.unresolved,
            "match_rate": self.match_rate,
            "mean_distance": self.mean,
            "median_distance": self.median,
            "max_distance": self.maximum,
        }


@dataclass(frozen=True)
class ExpertEvaluation:
    name: str
    pre_phantom: DistanceStats
    post_phantom: DistanceStats
    initial_loss: Optional[float] = None
    final_loss: Optional[float] = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "pre_phantom": self.pre_phantom.to_dict(),
            "post_phantom": self.post_phantom.to_dict(),
            "initial_loss": self.initial_loss,
            "final_loss": self.final_loss,
        }


@dataclass(frozen=True)
class CensusComparison:
    """How many target attractors the mixture reproduces on observable nodes."""

    target_attractors: int
    reproduced: int
    mixture_attractors: int

    def to_dict(self) -> dict:
        return {
            "target_attractors": self.target_attractors,
            "reproduced": self.reproduced,
            "mixture_attractors": self.mixture_attractors,
        }


@dataclass(frozen=True)
class MixtureEvaluation:
    stats: DistanceStats
    census: CensusComparison

    def to_dict(self) -> dict:
        return {"stats": self.stats.to_dict(), "census": self.census.to_dict()}


@dataclass(frozen=True)
class Provenance:
    config_sha256: str
    seed: int
    version: str

    def to_dict(self) -> dict:
        return {"config_sha256": self.config_sha256, "seed": self.seed, "version": self.version}


@dataclass(frozen=True)
class EvaluationReport:
    scenario: str
    experts: Tuple[ExpertEvaluation, ...]
    mixture: MixtureEvaluation
    provenance: Provenance

    def expert(self, name: str) -> ExpertEvaluation:
        for evaluation in self.experts:
            if evaluation.name == name:
                return evaluation
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "experts": [evaluation.to_dict() for evaluation in self.experts],
            "mixture": self.mixture.to_dict(),
            "provenance": self.provenance.to_dict(),
        }
