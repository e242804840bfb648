"""Target-cycle samples used to fit phantom edges."""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from lib.core.errors.app_errors import DomainError, StructuralError
from lib.features.fcm_core.domain.entities.state_vector import StateVector


@dataclass(frozen=True)
class TrainingSample:
    """An observable start state and the k target states that should follow it."""

    initial: StateVector
    target_states: Tuple[StateVector, ...]
    labels: Tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.target_states:
            raise DomainError("a training sample needs at least one target state")
        dimension = len(self.labels)
        for state in (self.initial, *self.target_states):
            if state.dimension != dimension:
                raise StructuralError(
                    f"sample state has dimension {state.dimension}, expected {dimension}"
                )

    @property
    def length(self) -> int:
        return len(self.target_states)

    def key(self) -> tuple:
        return (self.labels, self.initial, self.target_states)


class SampleAnchor(str, Enum):
    """Which cycle state a sample starts from."""

    CANONICAL = "canonical"
    ENTRY = "entry"
