"""Domain entity for an FCM activation state."""

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Tuple

import numpy as np

from lib.core.errors.app_errors import DomainError, StructuralError


@dataclass(frozen=True, eq=False)
class StateVector:
    """Activation vector in [0, 1]^n with an optional clamp constant per node."""

    values: np.ndarray
    clamp: Tuple[Optional[float], ...] = ()

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float).reshape(-1)
        clamp = tuple(self.clamp) if self.clamp else (None,) * values.size
        if len(clamp) != values.size:
            raise StructuralError(
                f"clamp has length {len(clamp)} but state has dimension {values.size}"
            )
        if not np.all(np.isfinite(values)) or np.any(values < 0.0) or np.any(values > 1.0):
            raise DomainError(f"state values must lie in [0, 1], got {values.tolist()}")
        normalized = []
        for constant in clamp:
            if constant is None:
                normalized.append(None)
                continue
            constant = float(constant)
            if not 0.0 <= constant <= 1.0:
                raise DomainError(f"clamp constant {constant!r} is outside [0, 1]")
            normalized.append(constant)
        values = values + 0.0
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "clamp", tuple(normalized))

    @classmethod
    def binary(cls, bits: Iterable[int]) -> "StateVector":
        return cls(values=np.array(list(bits), dtype=float))

    @classmethod
    def zeros(cls, dimension: int) -> "StateVector":
        return cls(values=np.zeros(dimension))

    @classmethod
    def from_bits_text(cls, text: str) -> "StateVector":
        """Parse ``"0,1,0"`` (or ``"010"``) into a state."""
        cleaned = text.strip()
        parts = cleaned.split(",") if "," in cleaned else list(cleaned)
        try:
            return cls(values=np.array([float(part) for part in parts if part.strip()]))
        except ValueError as error:
            raise DomainError(f"cannot parse state {text!r}: {error}") from error

    @property
    def dimension(self) -> int:
        return int(self.values.size)

    @property
    def is_clamped(self) -> bool:
        return any(constant is not None for constant in self.clamp)

    def with_clamp(self, constants: Mapping[int, float]) -> "StateVector":
        """Return a copy holding the given node indices at constant values."""
        clamp = list(self.clamp)
        for index, constant in constants.items():
            if not 0 <= index < self.dimension:
                raise StructuralError(f"clamp index {index} outside dimension {self.dimension}")
            clamp[index] = constant
        return StateVector(values=self.values, clamp=tuple(clamp))

    def apply_clamp(self, activation: np.ndarray) -> np.ndarray:
        """Overwrite clamped positions of ``activation`` with their constants."""
        if not self.is_clamped:
            return activation
        result = np.array(activation, dtype=float)
        for index, constant in enumerate(self.clamp):
            if constant is not None:
                result[index] = constant
        return result

    def project(self, indices: Sequence[int]) -> "StateVector":
        """Return the sub-state over ``indices``, clamps included."""
        indices = list(indices)
        return StateVector(
            values=self.values[indices],
            clamp=tuple(self.clamp[index] for index in indices),
        )

    def key(self, tol: float = 0.0) -> bytes:
        """Hashable identity, exact at ``tol`` 0 and quantized otherwise."""
        if tol <= 0.0:
            return self.values.tobytes()
        return np.round(self.values / tol).astype(np.int64).tobytes()

    def is_binary(self) -> bool:
        return bool(np.all((self.values == 0.0) | (self.values == 1.0)))

    def as_tuple(self) -> Tuple[float, ...]:
        return tuple(float(value) for value in self.values)

    def bits_text(self) -> str:
        """Compact rendering such as ``01100`` for binary states."""
        if self.is_binary():
            return "".join(str(int(value)) for value in self.values)
        return ",".join(repr(float(value)) for value in self.values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StateVector):
            return NotImplemented
        return np.array_equal(self.values, other.values) and self.clamp == other.clamp

    def __hash__(self) -> int:
        return hash((self.values.tobytes(), self.clamp))

    def __repr__(self) -> str:
        return f"StateVector({self.bits_text()})"

    def to_dict(self) -> dict:
        return {"values": list(self.as_tuple()), "clamp": list(self.clamp)}
