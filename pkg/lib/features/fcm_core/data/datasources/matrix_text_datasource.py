"""Reads and writes the matrix text format.

The format is a ``# labels: C1,C2,...`` header followed by one comma-separated row of
decimal weights per node. Further ``#`` lines are comments. Mask sidecars share the
layout with 0/1 entries.
"""

import logging
from pathlib import Path
from typing import List, Sequence, Tuple

import numpy as np

from lib.core.errors.app_errors import ArtifactIOError, StructuralError
from lib.features.fcm_core.data.models.edge_matrix_model import EdgeMatrixModel, clean_number
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix

LABELS_PREFIX = "# labels:"

logger = logging.getLogger(__name__)


class MatrixTextDatasource:
    """Parses and formats edge matrices and trainable-edge masks."""

    def parse(self, text: str) -> EdgeMatrix:
        labels, rows = self._parse_table(text)
        return EdgeMatrixModel(labels=labels, weights=rows).to_entity()

    def format(self, matrix: EdgeMatrix) -> str:
        return self._format_table(matrix.labels, matrix.weights)

    def parse_mask(self, text: str) -> Tuple[Tuple[str, ...], np.ndarray]:
        labels, rows = self._parse_table(text)
        mask = np.array(rows, dtype=float)
        if mask.shape != (len(labels), len(labels)):
            raise StructuralError(f"mask shape {mask.shape} does not match {len(labels)} labels")
        if not np.all((mask == 0.0) | (mask == 1.0)):
            raise StructuralError("mask entries must be 0 or 1")
        return tuple(labels), mask.astype(bool)

    def format_mask(self, labels: Sequence[str], mask: np.ndarray) -> str:
        return self._format_table(labels, np.asarray(mask, dtype=int))

    def load(self, path: Path) -> EdgeMatrix:
        return self.parse(self._read(path))

    def save(self, path: Path, matrix: EdgeMatrix) -> Path:
        return self._write(path, self.format(matrix))

    def load_mask(self, path: Path) -> Tuple[Tuple[str, ...], np.ndarray]:
        return self.parse_mask(self._read(path))

    def save_mask(self, path: Path, labels: Sequence[str], mask: np.ndarray) -> Path:
        return self._write(path, self.format_mask(labels, mask))

    def _parse_table(self, text: str) -> Tuple[List[str], List[List[float]]]:
        labels: List[str] = []
        rows: List[List[float]] = []
        header_seen = False
        for line_number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith(LABELS_PREFIX) and not header_seen:
                labels = [label.strip() for label in line[len(LABELS_PREFIX):].split(",")]
                labels = [label for label in labels if label]
                header_seen = True
                continue
            if line.startswith("#"):
                continue
            if not header_seen:
                raise StructuralError(f"line {line_number}: expected '{LABELS_PREFIX}' header")
            try:
                rows.append([float(cell) for cell in line.split(",")])
            except ValueError as error:
                raise StructuralError(f"line {line_number}: {error}") from error
        if not header_seen:
            raise StructuralError(f"missing '{LABELS_PREFIX}' header")
        width = len(labels)
        if len(rows) != width or any(len(row) != width for row in rows):
            shape = f"{len(rows)} rows of widths {sorted({len(row) for row in rows})}"
            raise StructuralError(f"matrix data is not {width}x{width}: got {shape}")
        return labels, rows

    def _format_table(self, labels: Sequence[str], values: np.ndarray) -> str:
        lines = [f"{LABELS_PREFIX} {','.join(labels)}"]
        for row in values:
            lines.append(",".join(_format_number(value) for value in row))
        return "\n".join(lines) + "\n"

    def _read(self, path: Path) -> str:
        try:
            return Path(path).read_text(encoding="utf-8")
        except OSError as error:
            raise ArtifactIOError(f"cannot read matrix file {path}: {error}") from error

    def _write(self, path: Path, text: str) -> Path:
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
        except OSError as error:
            raise ArtifactIOError(f"cannot write matrix file {path}: {error}") from error
        logger.debug("Wrote %s", path)
        return path


def _format_number(value: float) -> str:
    return repr(clean_number(value))
