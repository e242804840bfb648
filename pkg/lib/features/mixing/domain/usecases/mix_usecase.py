"""Use case for convex mixing of expert edge matrices."""

import logging
import math
from typing import Optional, Sequence

import numpy as np

from lib.core.constants.app_constants import CONVEXITY_TOLERANCE
from lib.core.errors.app_errors import DomainError, StructuralError
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix
from lib.features.mixing.domain.entities.weighted_expert import WeightedExpert
from lib.features.mixing.domain.usecases.augment_usecase import AugmentUsecase

logger = logging.getLogger(__name__)


class MixUsecase:
    """Computes E = Σ wᵢ Ẽᵢ over conformable expert matrices."""

    def __init__(self, augment_usecase: Optional[AugmentUsecase] = None) -> None:
        self._augment = augment_usecase or AugmentUsecase()

    def execute(self, experts: Sequence[WeightedExpert]) -> EdgeMatrix:
        """Mix experts that already share one universe.

        Raises:
            DomainError: if weights are not convex (the message reports their sum)
            StructuralError: if the experts' label lists differ
        """
        self._check_weights(experts)
        universe = experts[0].fcm.labels
        for expert in experts[1:]:
            if expert.fcm.labels != universe:
                raise StructuralError(
                    f"experts are not conformable: {list(universe)} vs {list(expert.fcm.labels)}; "
                    "augment them onto a shared universe first"
                )
        mixed = np.zeros_like(experts[0].fcm.weights)
        for expert in experts:
            mixed = mixed + expert.weight * expert.fcm.weights
        return EdgeMatrix(labels=universe, weights=mixed)

    def mix_over_universe(
        self,
        experts: Sequence[WeightedExpert],
        universe: Sequence[str],
        coverage_normalized: bool = False,
    ) -> EdgeMatrix:
        """Augment each expert onto ``universe`` and mix.

        With ``coverage_normalized`` each column j is divided by the total weight of the
        experts whose own label set contains node j, so every node receives input on the
        scale used inside the experts that model it. Entries remain bipolar.
        """
        self._check_weights(experts)
        padded = [
            WeightedExpert(fcm=self._augment.execute(expert.fcm, universe), weight=expert.weight)
            for expert in experts
        ]
        mixture = self.execute(padded)
        if not coverage_normalized:
            return mixture

        coverage = np.array(
            [
                math.fsum(expert.weight for expert in experts if label in expert.fcm.labels)
                for label in universe
            ]
        )
        scale = np.divide(1.0, coverage, out=np.zeros_like(coverage), where=coverage > 0)
        logger.debug("Coverage weights per node: %s", dict(zip(universe, coverage.tolist())))
        return EdgeMatrix(labels=mixture.labels, weights=mixture.weights * scale[np.newaxis, :])

    @staticmethod
    def _check_weights(experts: Sequence[WeightedExpert]) -> None:
        if not experts:
            raise DomainError("mixing needs at least one expert")
        total = math.fsum(expert.weight for expert in experts)
        if abs(total - 1.0) > CONVEXITY_TOLERANCE:
            raise DomainError(f"mixing weights must sum to 1, got {total!r}")
