"""CSV rendering of training loss curves."""

import csv
import io
from typing import List, Sequence

from lib.core.errors.app_errors import ArtifactIOError


class LossHistoryDatasource:
    """One ``epoch,loss`` row per epoch, losses written ``repr``-exact."""

    def format_csv(self, history: Sequence[float]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["epoch", "loss"])
        for epoch, loss in enumerate(history):
            writer.writerow([epoch, repr(float(loss))])
        return buffer.getvalue()

    def parse_csv(self, text: str) -> List[float]:
        reader = csv.reader(io.StringIO(text))
        header = next(reader, None)
        if header != ["epoch", "loss"]:
            raise ArtifactIOError(f"unexpected loss curve header: {header}")
        try:
            return [float(row[1]) for row in reader if row]
        except (IndexError, ValueError) as error:
            raise ArtifactIOError(f"malformed loss curve: {error}") from error
