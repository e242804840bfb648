"""Use case for the end-to-end phantom-mixture experiment."""

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from lib.core.constants.app_constants import (
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_RASTER_STEPS,
    DEFAULT_THREADS,
    EVALUATION_STREAM,
    OUTPUT_FORMAT_ENV,
    OUTPUT_FORMATS,
    THREADS_ENV,
)
from lib.core.errors.app_errors import ConfigError, NumericError, TrainingError
from lib.core.utils.rng import stream
from lib.core.utils.version import package_version
from lib.features.attractors.domain.usecases.basin_census_usecase import BasinCensusUsecase
from lib.features.attractors.domain.usecases.initial_states_usecase import (
    InitialStatesUsecase,
)
from lib.features.experiment.domain.entities.evaluation_report import (
    CensusComparison,
    EvaluationReport,
    ExpertEvaluation,
    MixtureEvaluation,
    Provenance,
)
from lib.features.experiment.domain.entities.scenario_config import ExpertSpec, ScenarioConfig
from lib.features.experiment.domain.entities.trained_expert import TrainedExpert
from lib.features.experiment.domain.repositories.artifact_repository import ArtifactRepository
from lib.features.experiment.domain.repositories.scenario_repository import ScenarioRepository
from lib.features.experiment.domain.usecases.evaluate_model_usecase import (
    EvaluateModelUsecase,
)
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix
from lib.features.fcm_core.domain.entities.state_vector import StateVector
from lib.features.fcm_core.domain.entities.threshold_function import HardBinary
from lib.features.fcm_core.domain.usecases.restrict_usecase import RestrictUsecase
from lib.features.fcm_core.domain.usecases.trajectory_usecase import TrajectoryUsecase
from lib.features.mixing.domain.entities.weighted_expert import WeightedExpert
from lib.features.mixing.domain.usecases.mix_usecase import MixUsecase
from lib.features.phantom_learning.domain.entities.phantom_layout import PhantomLayout
from lib.features.phantom_learning.domain.entities.train_config import PhantomInit
from lib.features.phantom_learning.domain.usecases.augment_with_phantoms_usecase import (
    AugmentWithPhantomsUsecase,
)
from lib.features.phantom_learning.domain.usecases.sample_targets_usecase import (
    SampleTargetsUsecase,
)
from lib.features.phantom_learning.domain.usecases.train_usecase import TrainUsecase

logger = logging.getLogger(__name__)

MIXTURE_NAME = "mixture"
TARGET_NAME = "target"


class RunScenarioUsecase:
    """Samples targets, trains one phantom set per expert, mixes, evaluates, reports."""

    def __init__(
        self,
        artifact_repository: ArtifactRepository,
        scenario_repository: ScenarioRepository,
        restrict_usecase: Optional[RestrictUsecase] = None,
        sample_targets_usecase: Optional[SampleTargetsUsecase] = None,
        train_usecase: Optional[TrainUsecase] = None,
        augment_phantoms_usecase: Optional[AugmentWithPhantomsUsecase] = None,
        mix_usecase: Optional[MixUsecase] = None,
        initial_states_usecase: Optional[InitialStatesUsecase] = None,
        basin_census_usecase: Optional[BasinCensusUsecase] = None,
        evaluate_model_usecase: Optional[EvaluateModelUsecase] = None,
        trajectory_usecase: Optional[TrajectoryUsecase] = None,
    ) -> None:
        self._artifacts = artifact_repository
        self._scenarios = scenario_repository
        self._restrict = restrict_usecase or RestrictUsecase()
        self._sample_targets = sample_targets_usecase or SampleTargetsUsecase()
        self._train = train_usecase or TrainUsecase()
        self._augment_phantoms = augment_phantoms_usecase or AugmentWithPhantomsUsecase()
        self._mix = mix_usecase or MixUsecase()
        self._initial_states = initial_states_usecase or InitialStatesUsecase()
        self._basin_census = basin_census_usecase or BasinCensusUsecase()
        self._evaluate = evaluate_model_usecase or EvaluateModelUsecase()
        self._trajectory = trajectory_usecase or TrajectoryUsecase()
        self._default_threads = int(os.getenv(THREADS_ENV, str(DEFAULT_THREADS)))
        self._default_format = os.getenv(OUTPUT_FORMAT_ENV, DEFAULT_OUTPUT_FORMAT)

    def execute(
        self,
        config: ScenarioConfig,
        base_dir: Optional[Path] = None,
        threads: Optional[int] = None,
        output_format: Optional[str] = None,
    ) -> EvaluationReport:
        """Run the scenario and write its artifacts.

        Args:
            config: Validated scenario
            base_dir: Directory that relative ``outputs`` paths resolve against
            threads: Worker threads for per-expert training
            output_format: 'csv', 'pgm' or 'both'

        Returns:
            The evaluation report, also written to the outputs directory

        Raises:
            ArtifactIOError: when the outputs directory is unusable (checked first)
            TrainingError: when an expert's training diverges
        """
        output_format = output_format or self._default_format
        if output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"output format must be one of {OUTPUT_FORMATS}, got {output_format!r}")
        threads = max(1, threads or self._default_threads)
        outputs = self.resolve_outputs(config, base_dir)
        self._artifacts.prepare(outputs)
        logger.info("Running scenario %s into %s", config.name, outputs)

        experts = self._build_experts(config, threads)
        universe = self._universe(config, experts)
        mixture = self._mix.mix_over_universe(
            [WeightedExpert(fcm=expert.model, weight=expert.weight) for expert in experts],
            universe,
            coverage_normalized=config.mixing.coverage_normalized,
        )
        logger.info("Mixed %d experts over %d nodes", len(experts), len(universe))

        initials = self._evaluation_initials(config)
        report = self._evaluate_all(config, experts, mixture, initials)
        self._write_artifacts(config, outputs, output_format, experts, mixture, initials, report)
        return report

    @staticmethod
    def resolve_outputs(config: ScenarioConfig, base_dir: Optional[Path]) -> Path:
        outputs = Path(config.outputs)
        if not outputs.is_absolute() and base_dir is not None:
            outputs = Path(base_dir) / outputs
        return outputs

    def build_expert(self, config: ScenarioConfig, spec: ExpertSpec) -> TrainedExpert:
        """Augment (and unless skipped, train) one expert."""
        phantom = config.phantom_labels(spec)
        source = (
            spec.matrix
            if spec.matrix is not None
            else self._restrict.drop(config.target, spec.dropped_nodes)
        )
        observable = [label for label in source.labels if label not in phantom]
        base = self._restrict.execute(source, observable)
        history: Tuple[float, ...] = ()

        if any(label in source.labels for label in phantom):
            model = source
        elif config.skip_training:
            model, _ = self._augment_phantoms.execute(
                base, phantom, PhantomInit.zeros(), config.train.seed
            )
        else:
            samples = self._sample_targets.execute(
                config.target,
                HardBinary(),
                config.sampling.n_initials,
                config.sampling.k,
                config.sampling.seed,
                observable=base.labels,
                anchor=config.sampling.anchor,
                skip_hidden_active=config.sampling.skip_hidden_active,
                max_steps=config.evaluation.max_steps,
            )
            try:
                model, losses = self._train.execute(base, phantom, samples, config.train)
            except NumericError as error:
                raise TrainingError(
                    f"training expert {spec.name} failed at epoch {error.epoch}: {error}",
                    expert=spec.name,
                ) from error
            history = tuple(losses)
            logger.info(
                "Trained %s: loss %.6g -> %.6g over %d epochs",
                spec.name,
                history[0],
                history[-1],
                len(history),
            )

        present = tuple(label for label in phantom if label in model.labels)
        return TrainedExpert(
            name=spec.name,
            weight=spec.weight,
            base=base,
            model=model,
            phantom=present,
            trainable_mask=PhantomLayout.build(model.labels, present).trainable_mask,
            loss_history=history,
        )

    def _build_experts(self, config: ScenarioConfig, threads: int) -> List[TrainedExpert]:
        if threads > 1 and len(config.experts) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                return list(pool.map(lambda spec: self.build_expert(config, spec), config.experts))
        return [self.build_expert(config, spec) for spec in config.experts]

    @staticmethod
    def _universe(config: ScenarioConfig, experts: Sequence[TrainedExpert]) -> List[str]:
        phantoms = [label for expert in experts for label in expert.phantom]
        return phantoms + list(config.target.labels)

    def _evaluation_initials(self, config: ScenarioConfig) -> List[StateVector]:
        if config.evaluation.exhaustive:
            return self._initial_states.exhaustive(config.target.dimension)
        rng = stream(config.evaluation.seed, EVALUATION_STREAM)
        return self._initial_states.random(
            config.target.dimension, config.evaluation.n_initials, rng
        )

    def _evaluate_all(
        self,
        config: ScenarioConfig,
        experts: Sequence[TrainedExpert],
        mixture: EdgeMatrix,
        initials: Sequence[StateVector],
    ) -> EvaluationReport:
        target_phi = HardBinary()
        model_phi = HardBinary(threshold=config.evaluation_threshold)
        max_steps = config.evaluation.max_steps

        evaluations = []
        for expert in experts:
            pre = self._evaluate.execute(
                expert.base, model_phi, config.target, target_phi, initials, max_steps
            )
            post = self._evaluate.execute(
                expert.model, model_phi, config.target, target_phi, initials, max_steps
            )
            evaluations.append(
                ExpertEvaluation(
                    name=expert.name,
                    pre_phantom=pre,
                    post_phantom=post,
                    initial_loss=expert.loss_history[0] if expert.loss_history else None,
                    final_loss=expert.loss_history[-1] if expert.loss_history else None,
                )
            )

        mixture_stats = self._evaluate.execute(
            mixture, model_phi, config.target, target_phi, initials, max_steps
        )
        target_census = self._basin_census.execute(
            config.target, target_phi, initials, max_steps=max_steps
        )
        mixture_census = self._basin_census.execute(
            mixture,
            model_phi,
            [self._evaluate.embed(state, config.target.labels, mixture.labels) for state in initials],
            max_steps=max_steps,
        )
        reproduced = target_census.compare(mixture_census, config.target.labels)
        census = CensusComparison(
            target_attractors=sum(1 for a in target_census.attractors if a.is_resolved),
            reproduced=len(reproduced),
            mixture_attractors=sum(1 for a in mixture_census.attractors if a.is_resolved),
        )
        return EvaluationReport(
            scenario=config.name,
            experts=tuple(evaluations),
            mixture=MixtureEvaluation(stats=mixture_stats, census=census),
            provenance=Provenance(
                config_sha256=self._scenarios.fingerprint(config),
                seed=config.train.seed,
                version=package_version(),
            ),
        )

    def _write_artifacts(
        self,
        config: ScenarioConfig,
        outputs: Path,
        output_format: str,
        experts: Sequence[TrainedExpert],
        mixture: EdgeMatrix,
        initials: Sequence[StateVector],
        report: EvaluationReport,
    ) -> None:
        include_csv = output_format in ("csv", "both")
        include_pgm = output_format in ("pgm", "both")
        max_steps = config.evaluation.max_steps
        model_phi = HardBinary(threshold=config.evaluation_threshold)
        written: List[Path] = []

        written += self._artifacts.save_matrix(outputs, TARGET_NAME, config.target)
        for expert in experts:
            written += self._artifacts.save_matrix(
                outputs, expert.name, expert.model, expert.trainable_mask
            )
            if include_csv and expert.loss_history:
                written.append(
                    self._artifacts.save_loss_history(outputs, expert.name, expert.loss_history)
                )
        written += self._artifacts.save_matrix(outputs, MIXTURE_NAME, mixture)

        for name, model, phi in (
            (TARGET_NAME, config.target, HardBinary()),
            (MIXTURE_NAME, mixture, model_phi),
        ):
            embedded = [self._evaluate.embed(s, config.target.labels, model.labels) for s in initials]
            census = self._basin_census.execute(model, phi, embedded, max_steps=max_steps)
            written += self._artifacts.save_census(outputs, name, census, include_csv)

        if include_pgm:
            first = initials[0]
            models = [(TARGET_NAME, config.target, HardBinary())]
            models += [(expert.name, expert.model, model_phi) for expert in experts]
            models.append((MIXTURE_NAME, mixture, model_phi))
            for name, model, phi in models:
                start = self._evaluate.embed(first, config.target.labels, model.labels)
                states = self._trajectory.execute(start, model, phi, DEFAULT_RASTER_STEPS)
                written.append(self._artifacts.save_raster(outputs, name, states, model.labels))

        written += self._artifacts.save_report(outputs, report, include_csv)
        logger.info("Wrote %d artifacts under %s", len(written), outputs)
