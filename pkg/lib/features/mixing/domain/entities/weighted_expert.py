"""Domain entity pairing an expert FCM with its mixing weight."""

import math
from dataclasses import dataclass

from lib.core.errors.app_errors import DomainError
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix


@dataclass(frozen=True)
class WeightedExpert:
    """Expert edge matrix with a nonnegative credibility weight."""

    fcm: EdgeMatrix
    weight: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.weight) or self.weight < 0:
            raise DomainError(f"expert weight must be nonnegative, got {self.weight!r}")
