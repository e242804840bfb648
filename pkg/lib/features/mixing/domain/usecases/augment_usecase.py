"""Use case for zero-padding an edge matrix onto a larger node universe."""

from typing import Iterable, List, Sequence

import numpy as np

from lib.core.errors.app_errors import StructuralError
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix


class AugmentUsecase:
    """Embeds an FCM into a universe of nodes, padding absent ones with zeros."""

    def execute(self, fcm: EdgeMatrix, universe: Sequence[str]) -> EdgeMatrix:
        """Pad ``fcm`` to ``universe``.

        Args:
            fcm: Expert edge matrix
            universe: Ordered node names containing every label of ``fcm``

        Returns:
            |universe| x |universe| matrix labelled by ``universe``
        """
        universe = tuple(universe)
        if len(set(universe)) != len(universe):
            raise StructuralError("universe labels must be distinct")
        missing = [label for label in fcm.labels if label not in universe]
        if missing:
            raise StructuralError(f"labels missing from universe: {', '.join(missing)}")
        positions = [universe.index(label) for label in fcm.labels]
        padded = np.zeros((len(universe), len(universe)))
        padded[np.ix_(positions, positions)] = fcm.weights
        return EdgeMatrix(labels=universe, weights=padded)

    def union_universe(
        self,
        label_lists: Iterable[Sequence[str]],
        phantom_labels: Sequence[str] = (),
    ) -> List[str]:
        """Union of label lists in first-appearance order, phantom labels first."""
        phantom = list(dict.fromkeys(phantom_labels))
        observable: List[str] = []
        for labels in label_lists:
            for label in labels:
                if label not in phantom and label not in observable:
                    observable.append(label)
        return phantom + observable
