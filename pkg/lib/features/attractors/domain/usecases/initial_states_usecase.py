"""Use case for generating initial states."""

import itertools
from typing import List

import numpy as np

from lib.core.constants.app_constants import MAX_EXHAUSTIVE_NODES
from lib.core.errors.app_errors import DomainError, ResourceError
from lib.features.fcm_core.domain.entities.state_vector import StateVector


class InitialStatesUsecase:
    """Random and exhaustive initial conditions."""

    def random(
        self,
        dimension: int,
        count: int,
        rng: np.random.Generator,
        binary: bool = True,
    ) -> List[StateVector]:
        """Draw ``count`` states, uniform binary by default or uniform on [0, 1]."""
        if count < 1:
            raise DomainError(f"count must be positive, got {count}")
        if binary:
            draws = rng.integers(0, 2, size=(count, dimension)).astype(float)
        else:
            draws = rng.random((count, dimension))
        return [StateVector(values=row) for row in draws]

    def exhaustive(self, dimension: int) -> List[StateVector]:
        """All 2^n binary states in counting order (first node most significant)."""
        if dimension > MAX_EXHAUSTIVE_NODES:
            raise ResourceError(
                f"exhaustive enumeration of {dimension} nodes exceeds the "
                f"{MAX_EXHAUSTIVE_NODES}-node guard; sample random initial states instead"
            )
        return [
            StateVector.binary(bits) for bits in itertools.product((0, 1), repeat=dimension)
        ]
