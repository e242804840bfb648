"""Partition of an augmented FCM into observable and phantom nodes."""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from lib.core.errors.app_errors import StructuralError


@dataclass(frozen=True, eq=False)
class PhantomLayout:
    """Node roles plus the mask of trainable (phantom-adjacent, off-diagonal) edges."""

    labels: Tuple[str, ...]
    observable: Tuple[str, ...]
    phantom: Tuple[str, ...]
    trainable_mask: np.ndarray

    def __post_init__(self) -> None:
        mask = np.array(self.trainable_mask, dtype=bool)
        if mask.shape != (len(self.labels), len(self.labels)):
            raise StructuralError(f"mask shape {mask.shape} does not match {len(self.labels)} labels")
        if set(self.observable) & set(self.phantom):
            raise StructuralError("observable and phantom nodes must be disjoint")
        if set(self.observable) | set(self.phantom) != set(self.labels):
            raise StructuralError("layout roles must cover every label exactly")
        obs = self.observable_indices
        if mask[np.ix_(obs, obs)].any() or np.diag(mask).any():
            raise StructuralError("observable block and diagonal must not be trainable")
        mask.setflags(write=False)
        object.__setattr__(self, "trainable_mask", mask)

    @classmethod
    def build(cls, labels: Sequence[str], phantom: Sequence[str]) -> "PhantomLayout":
        """Layout whose mask covers every phantom row and column except the diagonal."""
        labels = tuple(labels)
        phantom = tuple(phantom)
        phantom_rows = np.array([label in phantom for label in labels])
        mask = phantom_rows[:, np.newaxis] | phantom_rows[np.newaxis, :]
        np.fill_diagonal(mask, False)
        observable = tuple(label for label in labels if label not in phantom)
        return cls(labels=labels, observable=observable, phantom=phantom, trainable_mask=mask)

    @property
    def observable_indices(self) -> list:
        return [self.labels.index(label) for label in self.observable]

    @property
    def trainable_count(self) -> int:
        return int(self.trainable_mask.sum())

    def to_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "observable": list(self.observable),
            "phantom": list(self.phantom),
            "trainable_count": self.trainable_count,
        }
