"""Domain entities for Markov transition matrices and their mixtures."""

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np

from lib.core.constants.app_constants import STOCHASTIC_ROW_TOLERANCE
from lib.core.errors.app_errors import DomainError, StructuralError


@dataclass(frozen=True, eq=False)
class StochasticMatrix:
    """Row-stochastic transition matrix over labelled states."""

    labels: Tuple[str, ...]
    probs: np.ndarray

    def __post_init__(self) -> None:
        labels = tuple(str(label) for label in self.labels)
        probs = np.array(self.probs, dtype=float)
        if probs.ndim != 2 or probs.shape != (len(labels), len(labels)):
            raise StructuralError(
                f"transition matrix shape {probs.shape} does not match {len(labels)} labels"
            )
        if len(set(labels)) != len(labels):
            raise StructuralError("transition matrix labels must be distinct")
        if np.any(probs < 0.0) or np.any(probs > 1.0):
            raise DomainError("transition probabilities must lie in [0, 1]")
        sums = probs.sum(axis=1)
        if np.any(np.abs(sums - 1.0) > STOCHASTIC_ROW_TOLERANCE):
            raise DomainError(f"transition rows must sum to 1, got {sums.tolist()}")
        probs.setflags(write=False)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "probs", probs)

    @classmethod
    def from_rows(cls, labels: Iterable[str], rows: Sequence[Sequence[float]]) -> "StochasticMatrix":
        return cls(labels=tuple(labels), probs=np.array(rows, dtype=float))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StochasticMatrix):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.probs, other.probs)

    def __hash__(self) -> int:
        return hash((self.labels, self.probs.tobytes()))


@dataclass(frozen=True, eq=False)
class StochasticMixture:
    """Convex mixture of padded chains; deliberately not a StochasticMatrix."""

    labels: Tuple[str, ...]
    matrix: np.ndarray
    row_sums: np.ndarray
    is_stochastic: bool

    def to_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "matrix": self.matrix.tolist(),
            "row_sums": self.row_sums.tolist(),
            "is_stochastic": self.is_stochastic,
        }
