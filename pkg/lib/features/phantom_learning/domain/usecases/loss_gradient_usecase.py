"""Use case for the loss and its gradient through unrolled sigmoid dynamics."""

from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from lib.core.errors.app_errors import DomainError, StructuralError
from lib.features.fcm_core.domain.entities.threshold_function import Sigmoid
from lib.features.phantom_learning.domain.entities.phantom_layout import PhantomLayout
from lib.features.phantom_learning.domain.entities.train_config import LossKind, Weighting
from lib.features.phantom_learning.domain.entities.training_batch import TrainingBatch
from lib.features.phantom_learning.domain.entities.training_sample import TrainingSample
from lib.features.phantom_learning.domain.usecases.forward_unroll_usecase import (
    ForwardUnrollUsecase,
)
from lib.features.phantom_learning.domain.usecases.loss_usecase import LossUsecase


class LossGradientUsecase:
    """Backpropagation through time over a batch of deduplicated samples."""

    def __init__(
        self,
        forward_usecase: Optional[ForwardUnrollUsecase] = None,
        loss_usecase: Optional[LossUsecase] = None,
    ) -> None:
        self._forward = forward_usecase or ForwardUnrollUsecase()
        self._loss = loss_usecase or LossUsecase()

    def build_batch(
        self,
        layout: PhantomLayout,
        samples: Sequence[TrainingSample],
        steps: int,
        weighting: Weighting = Weighting.MULTIPLICITY,
    ) -> TrainingBatch:
        """Collapse identical samples and stack them into arrays.

        Each sample is mapped onto the layout's observable nodes by label. Under
        multiplicity weighting a sample seen m times out of N weighs m / N; under
        uniform weighting every distinct sample weighs the same.
        """
        if not samples:
            raise DomainError("training needs at least one sample")
        counts: Dict[tuple, int] = {}
        distinct: Dict[tuple, TrainingSample] = {}
        for sample in samples:
            if sample.length < steps:
                raise DomainError(
                    f"sample has {sample.length} target states, need at least {steps}"
                )
            key = sample.key()
            counts[key] = counts.get(key, 0) + 1
            distinct.setdefault(key, sample)

        initial_rows = []
        target_rows = []
        for sample in distinct.values():
            columns = self._columns(sample, layout)
            initial_rows.append(sample.initial.values[columns])
            target_rows.append(
                np.vstack([state.values[columns] for state in sample.target_states[:steps]])
            )
        multiplicity = np.array([counts[key] for key in distinct], dtype=float)
        if weighting is Weighting.UNIFORM:
            multiplicity = np.ones_like(multiplicity)
        return TrainingBatch(
            initial=self._forward.embed(layout, np.vstack(initial_rows)),
            targets=np.stack(target_rows, axis=1),
            weights=multiplicity / multiplicity.sum(),
            observable_indices=np.array(layout.observable_indices, dtype=int),
        )

    def execute(
        self,
        weights: np.ndarray,
        mask: np.ndarray,
        batch: TrainingBatch,
        phi: Sigmoid,
        kind: LossKind,
    ) -> Tuple[float, np.ndarray]:
        """Weighted-mean loss over the batch and its gradient on masked entries.

        Args:
            weights: Current augmented edge weights
            mask: Trainable entries; the gradient is zero elsewhere
            batch: Stacked samples
            phi: Sigmoid used for the unrolled dynamics
            kind: Loss function

        Returns:
            (loss, gradient) with the gradient shaped like ``weights``
        """
        states = self._forward.run(weights, batch.initial, batch.steps, phi)
        observable = batch.observable_indices
        sample_weights = batch.weights[:, np.newaxis]

        loss = 0.0
        for step in range(1, batch.steps + 1):
            terms = self._loss.value(states[step][:, observable], batch.targets[step - 1], kind)
            loss += float(np.sum(sample_weights * terms))

        gradient = np.zeros_like(weights, dtype=float)
        upstream = np.zeros_like(batch.initial, dtype=float)
        for step in range(batch.steps, 0, -1):
            output = states[step]
            local = upstream.copy()
            local[:, observable] += sample_weights * self._loss.derivative(
                output[:, observable], batch.targets[step - 1], kind
            )
            delta = local * phi.derivative_from_output(output)
            gradient += states[step - 1].T @ delta
            upstream = delta @ weights.T
        return loss, np.where(mask, gradient, 0.0)

    @staticmethod
    def _columns(sample: TrainingSample, layout: PhantomLayout) -> list:
        missing = [label for label in layout.observable if label not in sample.labels]
        if missing:
            raise StructuralError(f"sample lacks observable nodes: {', '.join(missing)}")
        return [sample.labels.index(label) for label in layout.observable]
