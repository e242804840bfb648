"""Array form of deduplicated training samples."""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class TrainingBatch:
    """Full-width initial states, observable targets and per-sample weights.

    ``initial`` is (B, N) over every node of the augmented matrix with phantoms at 0,
    ``targets`` is (k, B, m) over the observable nodes and ``weights`` (B,) sums to 1.
    """

    initial: np.ndarray
    targets: np.ndarray
    weights: np.ndarray
    observable_indices: np.ndarray

    @property
    def size(self) -> int:
        return int(self.initial.shape[0])

    @property
    def steps(self) -> int:
        return int(self.targets.shape[0])
