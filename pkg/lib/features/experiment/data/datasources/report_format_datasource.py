"""Human and machine renderings of an evaluation report."""

import csv
import io
from typing import List, Optional

from lib.features.experiment.domain.entities.evaluation_report import (
    DistanceStats,
    EvaluationReport,
)

CSV_HEADER = [
    "model",
    "role",
    "n_initials",
    "unresolved",
    "match_rate",
    "mean_distance",
    "median_distance",
    "max_distance",
    "initial_loss",
    "final_loss",
]
MIXTURE_MODEL = "mixture"


class ReportFormatDatasource:
    """No timestamps anywhere, so identical runs give identical bytes."""

    def format_csv(self, report: EvaluationReport) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for expert in report.experts:
            writer.writerow(self._row(expert.name, "pre_phantom", expert.pre_phantom))
            writer.writerow(
                self._row(
                    expert.name,
                    "post_phantom",
                    expert.post_phantom,
                    expert.initial_loss,
                    expert.final_loss,
                )
            )
        writer.writerow(self._row(MIXTURE_MODEL, "mixture", report.mixture.stats))
        census = report.mixture.census
        writer.writerow(
            [
                "# census",
                f"target_attractors={census.target_attractors}",
                f"reproduced={census.reproduced}",
                f"mixture_attractors={census.mixture_attractors}",
            ]
        )
        provenance = report.provenance
        writer.writerow(
            [
                "# provenance",
                f"config_sha256={provenance.config_sha256}",
                f"seed={provenance.seed}",
                f"version={provenance.version}",
            ]
        )
        return buffer.getvalue()

    def format_text(self, report: EvaluationReport) -> str:
        lines = [f"Scenario: {report.scenario}", ""]
        for expert in report.experts:
            lines.append(f"Expert {expert.name}")
            lines.append(f"  without phantoms: {self._describe(expert.pre_phantom)}")
            lines.append(f"  with phantoms:    {self._describe(expert.post_phantom)}")
            if expert.initial_loss is not None:
                lines.append(f"  loss: {expert.initial_loss:.6g} -> {expert.final_loss:.6g}")
        lines.append("")
        lines.append(f"Mixture: {self._describe(report.mixture.stats)}")
        census = report.mixture.census
        lines.append(
            f"  reproduces {census.reproduced} of {census.target_attractors} target attractors "
            f"({census.mixture_attractors} attractors in the mixture)"
        )
        lines.append("")
        provenance = report.provenance
        lines.append(
            f"config sha256 {provenance.config_sha256}, seed {provenance.seed}, "
            f"version {provenance.version}"
        )
        return "\n".join(lines) + "\n"

    @staticmethod
    def _row(
        model: str,
        role: str,
        stats: DistanceStats,
        initial_loss: Optional[float] = None,
        final_loss: Optional[float] = None,
    ) -> List[str]:
        return [
            model,
            role,
            str(stats.n_initials),
            str(stats.unresolved),
            repr(stats.match_rate),
            repr(stats.mean),
            repr(stats.median),
            repr(stats.maximum),
            repr(initial_loss) if initial_loss is not None else "",
            repr(final_loss) if final_loss is not None else "",
        ]

    @staticmethod
    def _describe(stats: DistanceStats) -> str:
        return (
            f"match rate {stats.match_rate:.3f}, mean distance {stats.mean:.4f}, "
            f"median {stats.median:.4f}, max {stats.maximum:.4f} "
            f"({stats.unresolved} of {stats.n_initials} unresolved)"
        )
