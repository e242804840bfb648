"""Tests for edge matrices, states, thresholds and the update rule."""

import numpy as np
import pytest

from lib.core.errors.app_errors import ArtifactIOError, DomainError, StructuralError
from lib.features.experiment.data.datasources.preset_datasource import PresetDatasource
from lib.features.fcm_core.data.datasources.matrix_text_datasource import MatrixTextDatasource
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix
from lib.features.fcm_core.domain.entities.state_vector import StateVector
from lib.features.fcm_core.domain.entities.threshold_function import HardBinary, Sigmoid
from lib.features.fcm_core.domain.usecases.restrict_usecase import RestrictUsecase
from lib.features.fcm_core.domain.usecases.step_usecase import StepUsecase
from lib.features.fcm_core.domain.usecases.trajectory_usecase import TrajectoryUsecase


def dolphin() -> EdgeMatrix:
    return PresetDatasource().dolphin_matrix()


def bits(text: str) -> StateVector:
    return StateVector.from_bits_text(text)


def test_dolphin_matrix_reads_rows_as_sources() -> None:
    fcm = dolphin()

    assert fcm.weight("C4", "C1") == 1.0
    assert fcm.weight("C1", "C4") == -1.0
    assert fcm.weight("C5", "C2") == 1.0


def test_step_from_single_active_c3_excites_c4() -> None:
    # C3's row is (0, -1, 0, 1, -1), so only C4 turns on
    state = StepUsecase().execute(bits("00100"), dolphin(), HardBinary())

    assert state == bits("00010")


def test_step_from_c4_excites_c1_and_c5() -> None:
    state = StepUsecase().execute(bits("00010"), dolphin(), HardBinary())

    assert state == bits("10001")


def test_step_rejects_dimension_mismatch() -> None:
    with pytest.raises(StructuralError):
        StepUsecase().execute(bits("0010"), dolphin(), HardBinary())


def test_step_holds_clamped_nodes() -> None:
    state = bits("00100").with_clamp({2: 1.0})

    after = StepUsecase().execute(state, dolphin(), HardBinary())

    assert after.values.tolist() == [0.0, 0.0, 1.0, 1.0, 0.0]
    assert after.clamp == state.clamp


def test_hard_binary_threshold_is_strict() -> None:
    assert HardBinary().apply(np.array([-1.0, 0.0, 0.5])).tolist() == [0.0, 0.0, 1.0]
    assert HardBinary(threshold=0.5).apply(np.array([0.5, 0.51])).tolist() == [0.0, 1.0]


def test_sigmoid_is_centered_on_offset_and_bounded() -> None:
    sigmoid = Sigmoid(steepness=5.0, offset=0.5)
    outputs = sigmoid.apply(np.array([-100.0, 0.5, 100.0]))

    assert outputs[1] == pytest.approx(0.5)
    assert 0.0 <= outputs[0] < 1e-12
    assert 1.0 - 1e-12 < outputs[2] <= 1.0
    assert sigmoid.derivative_from_output(np.array([0.5]))[0] == pytest.approx(1.25)


def test_sigmoid_rejects_nonpositive_steepness() -> None:
    with pytest.raises(DomainError):
        Sigmoid(steepness=0.0)


def test_sigmoid_step_stays_in_unit_interval() -> None:
    rng = np.random.default_rng(3)
    fcm = EdgeMatrix(labels=("a", "b", "c"), weights=rng.uniform(-1, 1, (3, 3)))

    state = StepUsecase().execute(StateVector(values=rng.random(3)), fcm, Sigmoid())

    assert np.all((state.values > 0.0) & (state.values < 1.0))


def test_trajectory_has_max_steps_plus_one_states() -> None:
    states = TrajectoryUsecase().execute(bits("00010"), dolphin(), HardBinary(), 4)

    assert [state.bits_text() for state in states] == [
        "00010",
        "10001",
        "01000",
        "00100",
        "00010",
    ]


def test_restriction_without_c4_decays_to_zero() -> None:
    restricted = RestrictUsecase().drop(dolphin(), ["C4"])

    states = TrajectoryUsecase().execute(bits("0110"), restricted, HardBinary(), 3)

    assert restricted.labels == ("C1", "C2", "C3", "C5")
    assert [state.bits_text() for state in states] == ["0110", "0010", "0000", "0000"]


def test_restrict_keeps_label_order_and_rejects_unknown() -> None:
    restricted = RestrictUsecase().execute(dolphin(), ["C5", "C2"])

    assert restricted.labels == ("C2", "C5")
    assert restricted.weights.tolist() == [[0.0, -1.0], [1.0, 0.0]]
    with pytest.raises(StructuralError):
        RestrictUsecase().execute(dolphin(), ["C9"])
    with pytest.raises(StructuralError):
        RestrictUsecase().execute(dolphin(), [])


def test_edge_matrix_snaps_rounding_noise_and_rejects_out_of_range() -> None:
    snapped = EdgeMatrix.from_rows(["a", "b"], [[0, 1 + 1e-12], [-1 - 1e-12, 0]])

    assert snapped.weights.tolist() == [[0.0, 1.0], [-1.0, 0.0]]
    with pytest.raises(DomainError):
        EdgeMatrix.from_rows(["a", "b"], [[0, 1.01], [0, 0]])
    with pytest.raises(DomainError):
        EdgeMatrix.from_rows(["a", "b"], [[0, float("nan")], [0, 0]])


def test_edge_matrix_structural_checks() -> None:
    with pytest.raises(StructuralError):
        EdgeMatrix.from_rows(["a", "b"], [[0, 1, 0], [0, 0, 0]])
    with pytest.raises(StructuralError):
        EdgeMatrix.from_rows(["a", "a"], [[0, 1], [0, 0]])
    with pytest.raises(StructuralError):
        EdgeMatrix.from_rows(["a"], [[0, 1], [0, 0]])


def test_edge_matrix_is_read_only() -> None:
    with pytest.raises(ValueError):
        dolphin().weights[0, 0] = 1.0


def test_state_vector_validation() -> None:
    with pytest.raises(DomainError):
        StateVector(values=[0.0, 1.5])
    with pytest.raises(DomainError):
        StateVector.from_bits_text("0,x,1")
    with pytest.raises(DomainError):
        StateVector(values=[0.0, 1.0], clamp=(None, 2.0))
    assert bits("1,0,1") == StateVector.binary([1, 0, 1])


def test_matrix_text_round_trip(tmp_path) -> None:
    datasource = MatrixTextDatasource()
    matrix = EdgeMatrix.from_rows(["A", "C2"], [[0, 0.6685], [-0.25, 1]])

    path = datasource.save(tmp_path / "m" / "expert.txt", matrix)

    assert path.read_text(encoding="utf-8") == "# labels: A,C2\n0,0.6685\n-0.25,1\n"
    assert datasource.load(path) == matrix


def test_matrix_text_parse_rejects_bad_data() -> None:
    datasource = MatrixTextDatasource()

    with pytest.raises(StructuralError):
        datasource.parse("# labels: a,b\n0,1\n")
    with pytest.raises(StructuralError):
        datasource.parse("0,1\n1,0\n")
    with pytest.raises(DomainError):
        datasource.parse("# labels: a,b\n0,2\n0,0\n")


def test_matrix_text_ignores_comments_and_blank_lines() -> None:
    text = "# labels: a,b\n# learned\n\n0,-1\n0.5,0\n"

    matrix = MatrixTextDatasource().parse(text)

    assert matrix.weight("b", "a") == 0.5


def test_mask_sidecar_round_trip(tmp_path) -> None:
    datasource = MatrixTextDatasource()
    mask = np.array([[False, True], [True, False]])

    path = datasource.save_mask(tmp_path / "e.mask.txt", ["P", "x"], mask)
    labels, loaded = datasource.load_mask(path)

    assert labels == ("P", "x")
    assert np.array_equal(loaded, mask)


def test_load_missing_matrix_raises_artifact_error(tmp_path) -> None:
    with pytest.raises(ArtifactIOError):
        MatrixTextDatasource().load(tmp_path / "absent.txt")
