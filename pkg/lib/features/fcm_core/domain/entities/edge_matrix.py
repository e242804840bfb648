"""Domain entity for a fuzzy cognitive map's causal edge matrix."""

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np

from lib.core.constants.app_constants import BIPOLAR_SNAP_TOLERANCE
from lib.core.errors.app_errors import DomainError, StructuralError


@dataclass(frozen=True, eq=False)
class EdgeMatrix:
    """Square bipolar matrix; entry (i, j) is the causal degree of node i on node j.

    Weights within a rounding distance of the bipolar bounds are snapped onto them;
    anything further out is rejected.
    """

    labels: Tuple[str, ...]
    weights: np.ndarray

    def __post_init__(self) -> None:
        labels = tuple(str(label) for label in self.labels)
        try:
            weights = np.array(self.weights, dtype=float)
        except (TypeError, ValueError) as error:
            raise StructuralError(f"edge weights are not numeric: {error}") from error

        if weights.ndim != 2 or weights.shape[0] != weights.shape[1]:
            raise StructuralError(f"edge matrix must be square, got shape {weights.shape}")
        if weights.shape[0] != len(labels):
            raise StructuralError(
                f"edge matrix has dimension {weights.shape[0]} but {len(labels)} labels"
            )
        duplicates = sorted({label for label in labels if labels.count(label) > 1})
        if duplicates:
            raise StructuralError(f"duplicate node labels: {', '.join(duplicates)}")
        if not np.all(np.isfinite(weights)):
            raise DomainError("edge weights must be finite")
        worst = float(np.max(np.abs(weights))) if weights.size else 0.0
        if worst > 1.0 + BIPOLAR_SNAP_TOLERANCE:
            row, col = np.unravel_index(int(np.argmax(np.abs(weights))), weights.shape)
            raise DomainError(
                f"edge weight {weights[row, col]!r} on {labels[row]}->{labels[col]} "
                "is outside [-1, 1]"
            )
        weights = np.clip(weights, -1.0, 1.0) + 0.0
        weights.setflags(write=False)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def from_rows(cls, labels: Iterable[str], rows: Sequence[Sequence[float]]) -> "EdgeMatrix":
        """Build a matrix from nested row lists."""
        return cls(labels=tuple(labels), weights=np.array(rows, dtype=float))

    @classmethod
    def zeros(cls, labels: Iterable[str]) -> "EdgeMatrix":
        labels = tuple(labels)
        return cls(labels=labels, weights=np.zeros((len(labels), len(labels))))

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        """Return the index of ``label``, raising a structural error if unknown."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise StructuralError(f"unknown node label: {label}") from None

    def weight(self, source: str, target: str) -> float:
        """Return the causal degree of ``source`` on ``target``."""
        return float(self.weights[self.index_of(source), self.index_of(target)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeMatrix):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.weights, other.weights)

    def __hash__(self) -> int:
        return hash((self.labels, self.weights.tobytes()))

    def to_dict(self) -> dict:
        """Convert to a plain dict."""
        return {
            "labels": list(self.labels),
            "weights": [[float(value) for value in row] for row in self.weights],
        }
