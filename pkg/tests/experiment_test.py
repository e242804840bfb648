"""Tests for scenario files, end-to-end runs, replay and artifacts."""

from pathlib import Path
from typing import Dict, List, Optional, Sequence

import numpy as np
import pytest

from lib.core.errors.app_errors import ArtifactIOError, ConfigError
from lib.features.attractors.domain.entities.basin_census import BasinCensus
from lib.features.experiment.data.datasources.preset_datasource import (
    DOLPHIN_PRESET,
    PAPER_MIXTURE_PRESET,
    PresetDatasource,
)
from lib.features.experiment.data.datasources.scenario_config_datasource import (
    ScenarioConfigDatasource,
)
from lib.features.experiment.data.repositories.artifact_repository_impl import (
    ArtifactRepositoryImpl,
)
from lib.features.experiment.data.repositories.scenario_repository_impl import (
    ScenarioRepositoryImpl,
)
from lib.features.experiment.domain.entities.evaluation_report import EvaluationReport
from lib.features.experiment.domain.entities.scenario_config import ExpertSpec, ScenarioConfig
from lib.features.experiment.domain.repositories.artifact_repository import ArtifactRepository
from lib.features.experiment.domain.usecases.load_scenario_usecase import LoadScenarioUsecase
from lib.features.experiment.domain.usecases.replay_component_usecase import (
    ReplayComponentUsecase,
)
from lib.features.experiment.domain.usecases.run_scenario_usecase import RunScenarioUsecase
from lib.features.experiment.domain.usecases.write_preset_usecase import WritePresetUsecase
from lib.features.fcm_core.data.datasources.matrix_text_datasource import MatrixTextDatasource
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix
from lib.features.fcm_core.domain.entities.state_vector import StateVector

DOLPHIN_YAML = """
labels: [C1, C2, C3, C4, C5]
weights:
  - [0, 1, 0, -1, 0]
  - [0, 0, 1, 0, -1]
  - [0, -1, 0, 1, -1]
  - [1, 0, -1, 0, 1]
  - [-1, 1, 0, -1, 0]
"""

SELF_SCENARIO = """
name: self
target:
  labels: [C1, C2, C3, C4, C5]
  weights:
    - [0, 1, 0, -1, 0]
    - [0, 0, 1, 0, -1]
    - [0, -1, 0, 1, -1]
    - [1, 0, -1, 0, 1]
    - [-1, 1, 0, -1, 0]
experts:
  - name: whole
    weight: 1.0
train:
  learning_rate: 0.001
  epochs: 5
sampling:
  n_initials: 40
  k: 2
evaluation:
  exhaustive: true
outputs: out
"""


class FakeArtifactRepository(ArtifactRepository):
    """Keeps artifacts in memory."""

    def __init__(self) -> None:
        self.prepared: List[Path] = []
        self.matrices: Dict[str, EdgeMatrix] = {}
        self.masks: Dict[str, np.ndarray] = {}
        self.losses: Dict[str, Sequence[float]] = {}
        self.rasters: Dict[str, int] = {}
        self.censuses: Dict[str, BasinCensus] = {}
        self.reports: List[EvaluationReport] = []

    def prepare(self, outputs: Path) -> None:
        self.prepared.append(Path(outputs))

    def save_matrix(
        self,
        outputs: Path,
        name: str,
        matrix: EdgeMatrix,
        mask: Optional[np.ndarray] = None,
    ) -> List[Path]:
        self.matrices[name] = matrix
        if mask is not None:
            self.masks[name] = mask
        return [Path(outputs) / name]

    def load_matrix(self, outputs: Path, name: str) -> EdgeMatrix:
        if name not in self.matrices:
            raise ArtifactIOError(f"missing artifact: {name}")
        return self.matrices[name]

    def save_loss_history(self, outputs: Path, name: str, history: Sequence[float]) -> Path:
        self.losses[name] = list(history)
        return Path(outputs) / name

    def save_raster(self, outputs, name, states, labels) -> Path:
        self.rasters[name] = len(states)
        return Path(outputs) / name

    def save_census(self, outputs, name, census, include_csv) -> List[Path]:
        self.censuses[name] = census
        return [Path(outputs) / name]

    def save_report(self, outputs, report, include_csv) -> List[Path]:
        self.reports.append(report)
        return [Path(outputs) / "report"]


def parse(text: str, base_dir: Optional[Path] = None) -> ScenarioConfig:
    return ScenarioConfigDatasource().parse(text, base_dir)


def run_usecase(artifacts: Optional[ArtifactRepository] = None) -> RunScenarioUsecase:
    return RunScenarioUsecase(artifacts or ArtifactRepositoryImpl(), ScenarioRepositoryImpl())


@pytest.mark.parametrize("name", [DOLPHIN_PRESET, PAPER_MIXTURE_PRESET])
def test_presets_survive_serialization(name: str) -> None:
    datasource = ScenarioConfigDatasource()
    config = PresetDatasource().scenario(name)

    assert datasource.parse(datasource.serialize(config)) == config


def test_unknown_preset_is_a_config_error() -> None:
    with pytest.raises(ConfigError):
        PresetDatasource().scenario("whales")


def test_parse_fills_defaults_and_names_phantoms() -> None:
    config = parse(SELF_SCENARIO)

    assert config.target == PresetDatasource().dolphin_matrix()
    assert config.train.learning_rate == 0.001
    assert config.sampling.n_initials == 40
    assert config.evaluation.exhaustive
    assert config.phantom_labels(config.experts[0]) == ("A",)


def test_evaluation_uses_the_hard_threshold_unless_a_cut_is_opted_into() -> None:
    offset = parse(SELF_SCENARIO.replace("epochs: 5", "epochs: 5\n  sigmoid_offset: 0.5"))
    variant = parse(
        SELF_SCENARIO.replace("exhaustive: true", "exhaustive: true\n  threshold: 0.5")
        + "mixing: {coverage_normalized: true}\n"
    )
    preset = PresetDatasource().dolphin_scenario()

    assert offset.train.sigmoid_offset == 0.5
    assert offset.evaluation_threshold == 0.0
    assert not offset.mixing.coverage_normalized
    assert variant.evaluation_threshold == 0.5
    assert variant.mixing.coverage_normalized
    assert preset.evaluation_threshold == 0.0
    assert not preset.mixing.coverage_normalized
    assert preset.train.sigmoid_offset == 0.3
    assert preset.train.phantom_init.half_width > 0.0


@pytest.mark.parametrize(
    "text",
    [
        SELF_SCENARIO + "colour: blue\n",
        SELF_SCENARIO.replace("weight: 1.0", "weight: 0.6"),
        SELF_SCENARIO.replace("weight: 1.0", "weight: 1.0\n    dropped_nodes: [C9]"),
        SELF_SCENARIO.replace("epochs: 5", "epochs: five"),
        SELF_SCENARIO.replace("k: 2", "k: 1"),
        SELF_SCENARIO.replace("[0, 1, 0, -1, 0]", "[0, 2, 0, -1, 0]"),
        "name: [unclosed\n",
        "",
    ],
)
def test_invalid_scenarios_are_config_errors(text: str) -> None:
    with pytest.raises(ConfigError):
        parse(text)


def test_target_file_is_resolved_next_to_the_scenario(tmp_path: Path) -> None:
    MatrixTextDatasource().save(tmp_path / "dolphin.txt", PresetDatasource().dolphin_matrix())
    text = SELF_SCENARIO.split("target:")[0] + "target: {file: dolphin.txt}\n" + (
        "experts:" + SELF_SCENARIO.split("experts:")[1]
    )
    (tmp_path / "scenario.yaml").write_text(text, encoding="utf-8")

    config = ScenarioRepositoryImpl().load(tmp_path / "scenario.yaml")

    assert config.target == PresetDatasource().dolphin_matrix()
    assert config.target_file == "dolphin.txt"
    assert config == parse(SELF_SCENARIO)


def test_missing_target_file_is_an_io_error(tmp_path: Path) -> None:
    text = SELF_SCENARIO.split("target:")[0] + "target: {file: nowhere.txt}\n" + (
        "experts:" + SELF_SCENARIO.split("experts:")[1]
    )

    with pytest.raises(ArtifactIOError):
        parse(text, tmp_path)


def test_seed_override_replaces_every_seed(tmp_path: Path) -> None:
    repository = ScenarioRepositoryImpl()
    path = WritePresetUsecase(repository).execute(DOLPHIN_PRESET, tmp_path)

    config = LoadScenarioUsecase(repository).execute(path, seed=42)

    assert path == tmp_path / "scenario.yaml"
    assert config.train.seed == config.sampling.seed == config.evaluation.seed == 42


def test_fingerprint_tracks_content() -> None:
    repository = ScenarioRepositoryImpl()
    config = parse(SELF_SCENARIO)

    assert repository.fingerprint(config) == repository.fingerprint(parse(SELF_SCENARIO))
    assert repository.fingerprint(config) != repository.fingerprint(config.with_seed(1))


def test_expert_validation() -> None:
    target = PresetDatasource().dolphin_matrix()

    with pytest.raises(ConfigError):
        ScenarioConfig(name="x", target=target, experts=())
    with pytest.raises(ConfigError):
        ScenarioConfig(
            name="x",
            target=target,
            experts=(ExpertSpec(name="bad name", weight=1.0),),
        )
    with pytest.raises(ConfigError):
        ScenarioConfig(
            name="x",
            target=target,
            experts=(ExpertSpec(name="e", weight=1.0, phantom_labels=("C1",)),),
        )


def test_self_scenario_reproduces_the_target(tmp_path: Path) -> None:
    artifacts = FakeArtifactRepository()

    report = run_usecase(artifacts).execute(parse(SELF_SCENARIO), base_dir=tmp_path)

    whole = report.expert("whole")
    assert whole.pre_phantom.match_rate == 1.0
    assert whole.post_phantom.match_rate == 1.0
    assert whole.post_phantom.n_initials == 32
    assert len(artifacts.losses["whole"]) == 5
    assert report.mixture.stats.match_rate == 1.0
    assert report.mixture.census.reproduced == report.mixture.census.target_attractors
    assert artifacts.prepared == [tmp_path / "out"]
    assert set(artifacts.matrices) == {"target", "whole", "mixture"}
    assert artifacts.masks["whole"].sum() == 10
    assert set(artifacts.rasters) == {"target", "whole", "mixture"}
    assert artifacts.censuses["target"].total == 32


def test_csv_only_format_skips_rasters(tmp_path: Path) -> None:
    artifacts = FakeArtifactRepository()

    run_usecase(artifacts).execute(parse(SELF_SCENARIO), base_dir=tmp_path, output_format="csv")

    assert artifacts.rasters == {}


def test_unknown_format_is_rejected(tmp_path: Path) -> None:
    with pytest.raises(ConfigError):
        run_usecase(FakeArtifactRepository()).execute(
            parse(SELF_SCENARIO), base_dir=tmp_path, output_format="png"
        )


def test_runs_are_byte_identical(tmp_path: Path) -> None:
    config = parse(SELF_SCENARIO)

    run_usecase().execute(config, base_dir=tmp_path)
    first = (tmp_path / "out" / "report.csv").read_bytes()
    run_usecase().execute(config, base_dir=tmp_path, threads=3)
    second = (tmp_path / "out" / "report.csv").read_bytes()

    assert first == second
    lines = first.decode("utf-8").splitlines()
    assert lines[0].startswith("model,role,n_initials")
    assert lines[1].startswith("whole,pre_phantom,32,0,1.0,0.0")
    assert lines[-1].startswith("# provenance,config_sha256=")


def test_run_writes_the_artifact_layout(tmp_path: Path) -> None:
    run_usecase().execute(parse(SELF_SCENARIO), base_dir=tmp_path)

    out = tmp_path / "out"
    for relative in (
        "matrices/target.txt",
        "matrices/whole.txt",
        "matrices/whole.mask.txt",
        "matrices/mixture.txt",
        "loss/whole.csv",
        "rasters/mixture.pgm",
        "attractors/target.txt",
        "attractors/mixture.csv",
        "report.txt",
    ):
        assert (out / relative).is_file(), relative
    assert (out / "rasters" / "target.pgm").read_text(encoding="utf-8").startswith("P2\n")


def test_unwritable_outputs_fail_before_any_work(tmp_path: Path) -> None:
    (tmp_path / "blocker").write_text("", encoding="utf-8")
    config = parse(SELF_SCENARIO.replace("outputs: out", "outputs: blocker/out"))

    with pytest.raises(ArtifactIOError):
        run_usecase().execute(config, base_dir=tmp_path)


def test_published_experts_mix_without_training(tmp_path: Path) -> None:
    config = PresetDatasource().paper_mixture_scenario()

    report = run_usecase().execute(config, base_dir=tmp_path, threads=2)

    mixture = MatrixTextDatasource().load(tmp_path / "results" / "matrices" / "mixture.txt")
    assert mixture.labels == ("A", "B", "C", "C1", "C2", "C3", "C4", "C5")
    assert mixture.weight("A", "C2") == pytest.approx(0.2228, abs=0.005)
    assert mixture.weight("B", "C4") == pytest.approx(0.3149, abs=0.005)
    assert mixture.weight("C3", "C5") == pytest.approx(-1.0)
    assert [expert.name for expert in report.experts] == ["drop-C1", "drop-C2", "drop-C4"]
    assert all(expert.initial_loss is None for expert in report.experts)


def test_replay_reruns_a_written_expert(tmp_path: Path) -> None:
    config = PresetDatasource().paper_mixture_scenario()
    artifacts = ArtifactRepositoryImpl()
    run_usecase(artifacts).execute(config, base_dir=tmp_path)

    result = ReplayComponentUsecase(artifacts).execute(
        config, "drop-C4", StateVector.from_bits_text("1,0,0,1"), base_dir=tmp_path
    )

    assert result.attractor.is_resolved
    assert result.distance is not None and result.distance >= 0.0
    assert result.raster_path == tmp_path / "results" / "rasters" / "replay-drop-C4.pgm"
    assert result.raster_path.is_file()


def test_replay_needs_artifacts_and_a_fitting_state(tmp_path: Path) -> None:
    config = PresetDatasource().paper_mixture_scenario()
    usecase = ReplayComponentUsecase(ArtifactRepositoryImpl())

    with pytest.raises(ArtifactIOError):
        usecase.execute(config, "drop-C4", StateVector.from_bits_text("1001"), tmp_path)
    with pytest.raises(ConfigError):
        usecase.execute(config, "drop-C9", StateVector.from_bits_text("1001"), tmp_path)


@pytest.mark.slow
def test_mixture_beats_its_components_on_the_dolphin_pod(tmp_path: Path) -> None:
    preset = PresetDatasource().dolphin_scenario()
    assert preset.evaluation_threshold == 0.0
    assert not preset.mixing.coverage_normalized
    at_least_best = 0
    below_median = 0

    for seed in range(5):
        report = run_usecase().execute(
            preset.with_seed(seed), base_dir=tmp_path / str(seed), output_format="csv"
        )
        components = sorted(expert.post_phantom.mean for expert in report.experts)
        mixture = report.mixture.stats.mean
        at_least_best += mixture <= components[0]
        below_median += mixture < components[len(components) // 2]

    assert at_least_best >= 3
    assert below_median >= 4


@pytest.mark.slow
def test_dolphin_runs_are_byte_identical_across_thread_counts(tmp_path: Path) -> None:
    preset = PresetDatasource().dolphin_scenario()

    run_usecase().execute(preset, base_dir=tmp_path / "serial", threads=1, output_format="csv")
    run_usecase().execute(preset, base_dir=tmp_path / "threaded", threads=3, output_format="csv")

    serial = tmp_path / "serial" / "results"
    threaded = tmp_path / "threaded" / "results"
    written = sorted(
        path.relative_to(serial)
        for path in serial.rglob("*")
        if path.is_file() and path.suffix in (".csv", ".txt")
    )
    assert Path("report.csv") in written
    assert Path("matrices/mixture.txt") in written
    assert Path("matrices/drop-C1.mask.txt") in written
    for relative in written:
        assert (serial / relative).read_bytes() == (threaded / relative).read_bytes(), relative
