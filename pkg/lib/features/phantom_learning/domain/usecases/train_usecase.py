"""Use case for learning phantom-adjacent edges by gradient descent."""

import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from lib.core.errors.app_errors import DomainError, NumericError
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix
from lib.features.fcm_core.domain.entities.threshold_function import Sigmoid
from lib.features.phantom_learning.domain.entities.train_config import TrainConfig
from lib.features.phantom_learning.domain.entities.training_sample import TrainingSample
from lib.features.phantom_learning.domain.usecases.augment_with_phantoms_usecase import (
    AugmentWithPhantomsUsecase,
)
from lib.features.phantom_learning.domain.usecases.loss_gradient_usecase import (
    LossGradientUsecase,
)

logger = logging.getLogger(__name__)


class TrainUsecase:
    """Full-batch descent on the masked entries of a phantom-augmented expert."""

    def __init__(
        self,
        augment_usecase: Optional[AugmentWithPhantomsUsecase] = None,
        gradient_usecase: Optional[LossGradientUsecase] = None,
    ) -> None:
        self._augment = augment_usecase or AugmentWithPhantomsUsecase()
        self._gradient = gradient_usecase or LossGradientUsecase()

    def execute(
        self,
        expert: EdgeMatrix,
        phantom_names: Sequence[str],
        samples: Sequence[TrainingSample],
        cfg: TrainConfig,
    ) -> Tuple[EdgeMatrix, List[float]]:
        """Train phantom edges for ``expert``.

        Args:
            expert: Frozen expert matrix over observable nodes
            phantom_names: Hidden nodes to add and learn
            samples: Target-cycle samples over the expert's nodes
            cfg: Hyperparameters

        Returns:
            The learned augmented matrix and the pre-update loss of every epoch

        Raises:
            DomainError: when ``samples`` is empty or too short for the unroll
            NumericError: when the loss stops being finite
        """
        if not samples:
            raise DomainError("training needs at least one sample")
        augmented, layout = self._augment.execute(
            expert, phantom_names, cfg.phantom_init, cfg.seed
        )
        batch = self._gradient.build_batch(layout, samples, cfg.unroll_steps, cfg.weighting)
        logger.debug(
            "Training %s with %d distinct samples over %d trainable edges",
            ",".join(layout.phantom),
            batch.size,
            layout.trainable_count,
        )

        weights = np.array(augmented.weights, dtype=float)
        mask = layout.trainable_mask
        history: List[float] = []
        for epoch in range(cfg.epochs):
            phi = Sigmoid(steepness=cfg.steepness_at(epoch), offset=cfg.sigmoid_offset)
            loss, gradient = self._gradient.execute(weights, mask, batch, phi, cfg.loss)
            if not math.isfinite(loss) or not np.all(np.isfinite(gradient)):
                raise NumericError(f"loss became non-finite ({loss!r}) at epoch {epoch}", epoch)
            history.append(loss)
            weights[mask] -= cfg.learning_rate * gradient[mask]
            if cfg.l1_shrinkage > 0:
                weights[mask] = self.shrink(weights[mask], cfg.learning_rate * cfg.l1_shrinkage)
            if cfg.clip_to_bipolar:
                weights[mask] = np.clip(weights[mask], -1.0, 1.0)
            if epoch % cfg.log_every == 0:
                logger.debug("epoch %d loss %.6g", epoch, loss)

        try:
            learned = EdgeMatrix(labels=augmented.labels, weights=weights)
        except DomainError as error:
            raise DomainError(
                f"learned weights left [-1, 1]; enable clip_to_bipolar ({error})"
            ) from error
        logger.debug("Finished training: loss %.6g -> %.6g", history[0], history[-1])
        return learned, history

    @staticmethod
    def shrink(values: np.ndarray, amount: float) -> np.ndarray:
        """Soft threshold: move each value ``amount`` towards 0, stopping at 0."""
        return values - np.clip(values, -amount, amount)
