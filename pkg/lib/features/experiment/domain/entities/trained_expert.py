"""An expert after phantom augmentation (and training, when enabled)."""

from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix


@dataclass(frozen=True)
class TrainedExpert:
    name: str
    weight: float
    base: EdgeMatrix
    model: EdgeMatrix
    phantom: Tuple[str, ...]
    trainable_mask: np.ndarray = field(compare=False)
    loss_history: Tuple[float, ...] = ()
