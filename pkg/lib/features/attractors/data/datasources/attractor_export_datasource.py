"""Text, CSV and portable-graymap renderings of attractors and trajectories."""

import csv
import io
from typing import Sequence

import numpy as np

from lib.features.attractors.domain.entities.attractor import Attractor
from lib.features.attractors.domain.entities.basin_census import BasinCensus
from lib.features.fcm_core.domain.entities.state_vector import StateVector

CYCLE_SEPARATOR = "---"
PGM_MAX_VALUE = 255


class AttractorExportDatasource:
    """Formats attractor results; writing to disk is left to repositories."""

    def format_attractor(self, attractor: Attractor) -> str:
        """Header line then one comma-separated state per line."""
        lines = [
            f"# attractor kind={attractor.kind.value} period={attractor.period} "
            f"transient={attractor.transient}"
        ]
        if attractor.labels:
            lines.append(f"# labels: {','.join(attractor.labels)}")
        for state in attractor.states:
            lines.append(",".join(_format_activation(value) for value in state.values))
        return "\n".join(lines) + "\n"

    def format_census_text(self, census: BasinCensus) -> str:
        blocks = [f"# census total={census.total} attractors={len(census.entries)}"]
        for entry in census.entries:
            blocks.append(f"# count={entry.count}")
            blocks.append(self.format_attractor(entry.attractor).rstrip("\n"))
            blocks.append(CYCLE_SEPARATOR)
        return "\n".join(blocks) + "\n"

    def format_census_csv(self, census: BasinCensus) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["attractor_id", "kind", "period", "count", "states"])
        for index, entry in enumerate(census.entries):
            writer.writerow(
                [
                    index,
                    entry.attractor.kind.value,
                    entry.attractor.period,
                    entry.count,
                    "|".join(state.bits_text() for state in entry.attractor.states),
                ]
            )
        return buffer.getvalue()

    def format_trajectory_pgm(self, states: Sequence[StateVector], labels: Sequence[str]) -> str:
        """ASCII graymap with one row per node and one column per step."""
        grid = np.vstack([state.values for state in states]).T if states else np.zeros((0, 0))
        pixels = np.rint(np.clip(grid, 0.0, 1.0) * PGM_MAX_VALUE).astype(int)
        height, width = pixels.shape
        lines = ["P2", f"# nodes: {','.join(labels)}", f"{width} {height}", str(PGM_MAX_VALUE)]
        for row in pixels:
            lines.append(" ".join(str(value) for value in row))
        return "\n".join(lines) + "\n"


def _format_activation(value: float) -> str:
    value = float(value)
    if value.is_integer():
        return str(int(value))
    return repr(value)
