"""Domain entity for the equilibrium an FCM trajectory settles into."""

from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Tuple

import numpy as np

from lib.core.errors.app_errors import StructuralError
from lib.features.fcm_core.domain.entities.state_vector import StateVector


class AttractorKind(str, Enum):
    FIXED_POINT = "fixed_point"
    LIMIT_CYCLE = "limit_cycle"
    UNRESOLVED = "unresolved"


_KIND_ORDER = {AttractorKind.FIXED_POINT: 0, AttractorKind.LIMIT_CYCLE: 1, AttractorKind.UNRESOLVED: 2}


def _order_key(state: StateVector, tol: float) -> tuple:
    if tol <= 0.0:
        return state.as_tuple()
    return tuple(int(value) for value in np.round(state.values / tol))


@dataclass(frozen=True, eq=False)
class Attractor:
    """Fixed point, K-step limit cycle, or an unresolved run.

    Cycle states are stored in canonical rotation (lexicographically smallest state
    first), so equality ignores where the trajectory entered the cycle. States are
    compared after quantizing to ``tol``, the tolerance the cycle was detected with,
    so runs that settle within ``tol`` of each other share one attractor. ``transient``
    and ``entry`` describe one particular run and take no part in equality.
    """

    kind: AttractorKind
    states: Tuple[StateVector, ...]
    labels: Tuple[str, ...] = ()
    transient: int = 0
    entry: int = 0
    tol: float = 0.0

    @classmethod
    def from_cycle(
        cls,
        cycle: Sequence[StateVector],
        transient: int,
        labels: Sequence[str] = (),
        tol: float = 0.0,
    ) -> "Attractor":
        """Canonicalize ``cycle`` (in visiting order, entry state first)."""
        if not cycle:
            raise StructuralError("a resolved attractor needs at least one state")
        start = min(range(len(cycle)), key=lambda index: _order_key(cycle[index], tol))
        states = tuple(cycle[start:]) + tuple(cycle[:start])
        kind = AttractorKind.FIXED_POINT if len(states) == 1 else AttractorKind.LIMIT_CYCLE
        return cls(
            kind=kind,
            states=states,
            labels=tuple(labels),
            transient=transient,
            entry=(len(cycle) - start) % len(cycle),
            tol=tol,
        )

    @classmethod
    def unresolved(cls, transient: int, labels: Sequence[str] = ()) -> "Attractor":
        return cls(kind=AttractorKind.UNRESOLVED, states=(), labels=tuple(labels), transient=transient)

    def identity(self) -> tuple:
        """What equality and hashing see: kind, labels and the quantized cycle."""
        return (
            self.kind,
            self.labels,
            tuple((state.key(self.tol), state.clamp) for state in self.states),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Attractor):
            return NotImplemented
        return self.identity() == other.identity()

    def __hash__(self) -> int:
        return hash(self.identity())

    @property
    def period(self) -> int:
        return len(self.states)

    @property
    def is_resolved(self) -> bool:
        return self.kind is not AttractorKind.UNRESOLVED

    @property
    def entry_state(self) -> StateVector:
        """State at which the recorded trajectory joined the cycle."""
        return self.states[self.entry]

    def as_array(self) -> np.ndarray:
        """Cycle as a (period, n) array."""
        if not self.states:
            return np.zeros((0, len(self.labels)))
        return np.vstack([state.values for state in self.states])

    def project(self, labels: Sequence[str]) -> "Attractor":
        """Restrict the cycle to ``labels``, reduced to its minimal period."""
        if not self.is_resolved:
            return Attractor.unresolved(self.transient, labels)
        indices = []
        for label in labels:
            if label not in self.labels:
                raise StructuralError(f"attractor has no node labelled {label}")
            indices.append(self.labels.index(label))
        projected = [state.project(indices) for state in self.states]
        keys = [state.key(self.tol) for state in projected]
        period = len(projected)
        for candidate in range(1, period + 1):
            if period % candidate == 0 and all(
                keys[index] == keys[index % candidate] for index in range(period)
            ):
                period = candidate
                break
        return Attractor.from_cycle(projected[:period], self.transient, labels, self.tol)

    def sort_key(self) -> tuple:
        return (_KIND_ORDER[self.kind], self.period, tuple(state.as_tuple() for state in self.states))

    def describe(self) -> str:
        """Short human label such as ``limit_cycle(4): 00010 -> 10001 -> ...``."""
        if not self.is_resolved:
            return "unresolved"
        path = " -> ".join(state.bits_text() for state in self.states)
        if self.kind is AttractorKind.FIXED_POINT:
            return f"fixed_point: {path}"
        return f"limit_cycle({self.period}): {path}"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "period": self.period,
            "transient": self.transient,
            "labels": list(self.labels),
            "states": [list(state.as_tuple()) for state in self.states],
        }
