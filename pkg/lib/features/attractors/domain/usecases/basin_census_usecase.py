"""Use case for mapping basins of attraction."""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence

from lib.core.constants.app_constants import DEFAULT_MAX_STEPS
from lib.core.errors.app_errors import DomainError
from lib.features.attractors.domain.entities.attractor import Attractor
from lib.features.attractors.domain.entities.basin_census import BasinCensus, BasinEntry
from lib.features.attractors.domain.usecases.find_attractor_usecase import FindAttractorUsecase
from lib.features.attractors.domain.usecases.initial_states_usecase import (
    InitialStatesUsecase,
)
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix
from lib.features.fcm_core.domain.entities.state_vector import StateVector
from lib.features.fcm_core.domain.entities.threshold_function import ThresholdFunction

logger = logging.getLogger(__name__)


class BasinCensusUsecase:
    """Groups initial states by the canonical attractor they reach."""

    def __init__(
        self,
        find_attractor_usecase: Optional[FindAttractorUsecase] = None,
        initial_states_usecase: Optional[InitialStatesUsecase] = None,
    ) -> None:
        self._find_attractor = find_attractor_usecase or FindAttractorUsecase()
        self._initial_states = initial_states_usecase or InitialStatesUsecase()

    def execute(
        self,
        fcm: EdgeMatrix,
        phi: ThresholdFunction,
        initials: Optional[Sequence[StateVector]] = None,
        exhaustive: bool = False,
        max_steps: int = DEFAULT_MAX_STEPS,
        threads: int = 1,
        keep_members: bool = False,
    ) -> BasinCensus:
        """Build the census.

        Args:
            fcm: Edge matrix to analyse
            phi: Threshold function
            initials: Explicit initial states (ignored when ``exhaustive``)
            exhaustive: Enumerate all 2^n binary states instead
            max_steps: Step budget per run
            threads: Worker threads; the merge is in input order either way
            keep_members: Record which initial states fell in each basin

        Returns:
            BasinCensus whose counts sum to the number of initial states
        """
        if exhaustive:
            initials = self._initial_states.exhaustive(fcm.dimension)
        if not initials:
            raise DomainError("basin census needs at least one initial state")

        distinct: Dict[StateVector, int] = {}
        for state in initials:
            distinct.setdefault(state, len(distinct))
        unique_states = list(distinct)

        def classify(state: StateVector) -> Attractor:
            return self._find_attractor.execute(state, fcm, phi, max_steps)

        if threads > 1 and len(unique_states) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                outcomes = list(pool.map(classify, unique_states))
        else:
            outcomes = [classify(state) for state in unique_states]

        counts: Dict[Attractor, int] = {}
        members: Dict[Attractor, List[StateVector]] = {}
        for state in initials:
            attractor = outcomes[distinct[state]]
            counts[attractor] = counts.get(attractor, 0) + 1
            if keep_members:
                members.setdefault(attractor, []).append(state)

        ordered = sorted(counts, key=Attractor.sort_key)
        entries = tuple(
            BasinEntry(
                attractor=attractor,
                count=counts[attractor],
                members=tuple(members.get(attractor, ())),
            )
            for attractor in ordered
        )
        logger.debug(
            "Census over %d initial states found %d attractors", len(initials), len(entries)
        )
        return BasinCensus(entries=entries, total=len(initials))
