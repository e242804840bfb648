"""Use case for extracting a sub-FCM over a subset of nodes."""

from typing import Iterable

from lib.core.errors.app_errors import StructuralError
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix


class RestrictUsecase:
    """Builds the principal submatrix over kept nodes, preserving label order."""

    def execute(self, fcm: EdgeMatrix, keep: Iterable[str]) -> EdgeMatrix:
        keep = set(keep)
        if not keep:
            raise StructuralError("restriction must keep at least one node")
        unknown = sorted(keep.difference(fcm.labels))
        if unknown:
            raise StructuralError(f"unknown node labels: {', '.join(unknown)}")
        indices = [index for index, label in enumerate(fcm.labels) if label in keep]
        return EdgeMatrix(
            labels=tuple(fcm.labels[index] for index in indices),
            weights=fcm.weights[indices][:, indices],
        )

    def drop(self, fcm: EdgeMatrix, dropped: Iterable[str]) -> EdgeMatrix:
        """Restrict to every node except ``dropped``."""
        dropped = set(dropped)
        unknown = sorted(dropped.difference(fcm.labels))
        if unknown:
            raise StructuralError(f"unknown node labels: {', '.join(unknown)}")
        return self.execute(fcm, [label for label in fcm.labels if label not in dropped])
