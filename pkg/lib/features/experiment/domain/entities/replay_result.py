"""Outcome of replaying one trained component from a chosen initial state."""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

from lib.features.attractors.domain.entities.attractor import Attractor
from lib.features.fcm_core.domain.entities.state_vector import StateVector


@dataclass(frozen=True)
class ReplayResult:
    expert: str
    attractor: Attractor
    trajectory: Tuple[StateVector, ...]
    raster_path: Optional[Path]
    target_attractor: Attractor
    distance: Optional[float]

    def to_dict(self) -> dict:
        return {
            "expert": self.expert,
            "attractor": self.attractor.to_dict(),
            "target_attractor": self.target_attractor.to_dict(),
            "distance": self.distance,
            "raster_path": str(self.raster_path) if self.raster_path else None,
        }
