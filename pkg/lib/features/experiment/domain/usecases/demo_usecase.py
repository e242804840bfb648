"""Use cases behind the mixing demonstrations."""

from typing import Optional, Tuple

import numpy as np

from lib.features.experiment.domain.repositories.scenario_repository import ScenarioRepository
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix
from lib.features.mixing.domain.entities.stochastic_matrix import StochasticMixture
from lib.features.mixing.domain.usecases.mix_stochastic_usecase import MixStochasticUsecase
from lib.features.mixing.domain.usecases.mix_usecase import MixUsecase


class DemoUsecase:
    """Mixes the built-in Markov chains and closure experts."""

    def __init__(
        self,
        scenario_repository: ScenarioRepository,
        mix_usecase: Optional[MixUsecase] = None,
        mix_stochastic_usecase: Optional[MixStochasticUsecase] = None,
    ) -> None:
        self._scenarios = scenario_repository
        self._mix = mix_usecase or MixUsecase()
        self._mix_stochastic = mix_stochastic_usecase or MixStochasticUsecase()

    def markov_nonclosure(self) -> StochasticMixture:
        chains, universe = self._scenarios.markov_chains()
        return self._mix_stochastic.execute(chains, universe)

    def closure(self) -> Tuple[EdgeMatrix, bool]:
        """Mixture of the closure experts and whether every entry is bipolar."""
        experts, universe = self._scenarios.closure_experts()
        mixture = self._mix.mix_over_universe(experts, universe)
        weights = mixture.weights
        return mixture, bool(np.all((weights >= -1.0) & (weights <= 1.0)))
