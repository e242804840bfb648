"""Use case for comparing two attractors on shared observable nodes."""

import math
from typing import List, Sequence

import numpy as np

from lib.core.errors.app_errors import DomainError, StructuralError
from lib.features.attractors.domain.entities.attractor import Attractor


class CycleDistanceUsecase:
    """Mean absolute difference of projected cycles, minimized over alignments."""

    def execute(self, a: Attractor, b: Attractor, observable: Sequence[str]) -> float:
        """Distance between ``a`` and ``b`` on ``observable`` nodes.

        Both cycles are unrolled to the least common multiple of their periods and
        compared at every relative rotation; the smallest mean per-node absolute
        difference is returned. The result is 0 exactly when the projected cycles are
        the same cyclic sequence.

        Raises:
            DomainError: if either attractor is unresolved
            StructuralError: if an observable label is missing from either attractor
        """
        if not a.is_resolved or not b.is_resolved:
            raise DomainError("cycle distance is undefined for unresolved attractors")
        observable = list(observable)
        if not observable:
            raise StructuralError("cycle distance needs at least one observable node")

        first = a.as_array()[:, self._indices(a, observable)]
        second = b.as_array()[:, self._indices(b, observable)]
        length = math.lcm(len(first), len(second))
        first = np.tile(first, (length // len(first), 1))
        second = np.tile(second, (length // len(second), 1))
        best = min(
            float(np.mean(np.abs(first - np.roll(second, shift, axis=0))))
            for shift in range(length)
        )
        return best

    @staticmethod
    def _indices(attractor: Attractor, observable: List[str]) -> List[int]:
        missing = [label for label in observable if label not in attractor.labels]
        if missing:
            raise StructuralError(f"attractor has no nodes labelled {', '.join(missing)}")
        return [attractor.labels.index(label) for label in observable]
