"""CSV rendering of stochastic mixtures."""

import csv
import io

from lib.features.mixing.domain.entities.stochastic_matrix import StochasticMixture


class MixtureExportDatasource:
    """Writes a mixture as CSV with a trailing row-sums column."""

    def format_csv(self, mixture: StochasticMixture, digits: int = 12) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["from", *mixture.labels, "row_sum"])
        for label, row, total in zip(mixture.labels, mixture.matrix, mixture.row_sums):
            writer.writerow(
                [label, *(_round(value, digits) for value in row), _round(total, digits)]
            )
        return buffer.getvalue()


def _round(value: float, digits: int) -> str:
    return f"{float(value):.{digits}g}"
