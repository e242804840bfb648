"""Data model for edge matrices in serialized form."""

from dataclasses import dataclass
from typing import List

from lib.core.errors.app_errors import StructuralError
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix


@dataclass(frozen=True)
class EdgeMatrixModel:
    """DTO for inline matrices in text and YAML files."""

    labels: List[str]
    weights: List[List[float]]

    @staticmethod
    def from_dict(payload: dict) -> "EdgeMatrixModel":
        if not isinstance(payload, dict) or "labels" not in payload or "weights" not in payload:
            raise StructuralError("inline matrix needs 'labels' and 'weights'")
        labels = payload["labels"]
        if isinstance(labels, str):
            labels = [label.strip() for label in labels.split(",")]
        return EdgeMatrixModel(
            labels=[str(label) for label in labels],
            weights=[list(row) for row in payload["weights"]],
        )

    @staticmethod
    def from_entity(matrix: EdgeMatrix) -> "EdgeMatrixModel":
        return EdgeMatrixModel(
            labels=list(matrix.labels),
            weights=[[clean_number(value) for value in row] for row in matrix.weights],
        )

    def to_entity(self) -> EdgeMatrix:
        """Convert to domain entity."""
        width = len(self.labels)
        for index, row in enumerate(self.weights):
            if len(row) != width:
                raise StructuralError(
                    f"matrix row {index + 1} has {len(row)} entries, expected {width}"
                )
        if len(self.weights) != width:
            raise StructuralError(f"matrix has {len(self.weights)} rows, expected {width}")
        return EdgeMatrix.from_rows(self.labels, self.weights)

    def to_dict(self) -> dict:
        return {"labels": list(self.labels), "weights": [list(row) for row in self.weights]}


def clean_number(value: float):
    """Python scalar for a weight; integral values become ints."""
    value = float(value) + 0.0
    if value.is_integer():
        return int(value)
    return value
