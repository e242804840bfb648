"""Domain entities for the partition of initial states by attractor."""

from dataclasses import dataclass, field
from typing import Sequence, Tuple

from lib.core.errors.app_errors import DomainError
from lib.features.attractors.domain.entities.attractor import Attractor
from lib.features.fcm_core.domain.entities.state_vector import StateVector


@dataclass(frozen=True)
class BasinEntry:
    """One attractor with the number of sampled initial states reaching it."""

    attractor: Attractor
    count: int
    members: Tuple[StateVector, ...] = field(default=(), compare=False)

    def to_dict(self) -> dict:
        return {"attractor": self.attractor.to_dict(), "count": self.count}


@dataclass(frozen=True)
class BasinCensus:
    """Attractor counts over a set of initial states, in deterministic order."""

    entries: Tuple[BasinEntry, ...]
    total: int

    def __post_init__(self) -> None:
        counted = sum(entry.count for entry in self.entries)
        if counted != self.total:
            raise DomainError(f"basin counts sum to {counted}, expected {self.total}")

    @property
    def attractors(self) -> Tuple[Attractor, ...]:
        return tuple(entry.attractor for entry in self.entries)

    def count_for(self, attractor: Attractor) -> int:
        for entry in self.entries:
            if entry.attractor == attractor:
                return entry.count
        return 0

    def basin_of(self, state: StateVector) -> Attractor:
        """Attractor whose recorded members include ``state``."""
        for entry in self.entries:
            if state in entry.members:
                return entry.attractor
        raise DomainError(f"state {state.bits_text()} was not part of this census")

    def compare(self, other: "BasinCensus", observable: Sequence[str]) -> Tuple[Attractor, ...]:
        """Resolved attractors of this census reproduced by ``other`` on ``observable``."""
        reproduced = {
            attractor.project(observable)
            for attractor in other.attractors
            if attractor.is_resolved
        }
        return tuple(
            attractor
            for attractor in self.attractors
            if attractor.is_resolved and attractor.project(observable) in reproduced
        )

    def to_dict(self) -> dict:
        return {"total": self.total, "entries": [entry.to_dict() for entry in self.entries]}
