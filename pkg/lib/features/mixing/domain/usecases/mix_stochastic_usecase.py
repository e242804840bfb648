"""Use case showing that padded Markov chains do not mix into a Markov chain."""

import math
from typing import Sequence, Tuple

import numpy as np

from lib.core.constants.app_constants import CONVEXITY_TOLERANCE, STOCHASTIC_ROW_TOLERANCE
from lib.core.errors.app_errors import DomainError, StructuralError
from lib.features.mixing.domain.entities.stochastic_matrix import (
    StochasticMatrix,
    StochasticMixture,
)


class MixStochasticUsecase:
    """Zero-pads transition matrices to a universe and mixes them convexly."""

    def execute(
        self,
        chains: Sequence[Tuple[StochasticMatrix, float]],
        universe: Sequence[str],
    ) -> StochasticMixture:
        if not chains:
            raise DomainError("mixing needs at least one chain")
        weights = [float(weight) for _, weight in chains]
        if any(weight < 0 or not math.isfinite(weight) for weight in weights):
            raise DomainError(f"mixing weights must be nonnegative, got {weights}")
        total = math.fsum(weights)
        if abs(total - 1.0) > CONVEXITY_TOLERANCE:
            raise DomainError(f"mixing weights must sum to 1, got {total!r}")

        universe = tuple(universe)
        mixed = np.zeros((len(universe), len(universe)))
        for chain, weight in chains:
            missing = [label for label in chain.labels if label not in universe]
            if missing:
                raise StructuralError(f"chain labels missing from universe: {', '.join(missing)}")
            positions = [universe.index(label) for label in chain.labels]
            padded = np.zeros_like(mixed)
            padded[np.ix_(positions, positions)] = chain.probs
            mixed = mixed + weight * padded

        row_sums = mixed.sum(axis=1)
        is_stochastic = bool(
            np.all(mixed >= 0.0)
            and np.all(mixed <= 1.0)
            and np.all(np.abs(row_sums - 1.0) <= STOCHASTIC_ROW_TOLERANCE)
        )
        return StochasticMixture(
            labels=universe, matrix=mixed, row_sums=row_sums, is_stochastic=is_stochastic
        )
