"""Use case for adding phantom nodes to an expert FCM."""

from typing import Sequence, Tuple

import numpy as np

from lib.core.constants.app_constants import INIT_STREAM
from lib.core.errors.app_errors import StructuralError
from lib.core.utils.rng import stream
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix
from lib.features.phantom_learning.domain.entities.phantom_layout import PhantomLayout
from lib.features.phantom_learning.domain.entities.train_config import (
    PhantomInit,
    PhantomInitKind,
)


class AugmentWithPhantomsUsecase:
    """Pads an expert with phantom rows and columns ahead of its own nodes."""

    def execute(
        self,
        expert: EdgeMatrix,
        phantom_names: Sequence[str],
        init: PhantomInit,
        seed: int,
    ) -> Tuple[EdgeMatrix, PhantomLayout]:
        """Build the phantom-augmented matrix.

        Args:
            expert: Frozen expert knowledge over observable nodes
            phantom_names: Names of the hidden nodes to add
            init: Initialization of the trainable entries
            seed: Seed for the initialization stream

        Returns:
            Augmented matrix labelled ``phantom_names + expert.labels`` and its layout
        """
        phantom_names = tuple(phantom_names)
        if not phantom_names:
            raise StructuralError("at least one phantom node is required")
        collisions = sorted(set(phantom_names) & set(expert.labels))
        if collisions or len(set(phantom_names)) != len(phantom_names):
            raise StructuralError(f"phantom names collide: {', '.join(collisions) or phantom_names}")

        labels = phantom_names + expert.labels
        layout = PhantomLayout.build(labels, phantom_names)
        p = len(phantom_names)
        weights = np.zeros((len(labels), len(labels)))
        weights[p:, p:] = expert.weights
        if init.kind is PhantomInitKind.UNIFORM_SYMMETRIC:
            rng = stream(seed, INIT_STREAM)
            draws = rng.uniform(-init.half_width, init.half_width, size=weights.shape)
            weights[layout.trainable_mask] = draws[layout.trainable_mask]
        return EdgeMatrix(labels=labels, weights=weights), layout
