"""Tests for attractor detection, basin censuses, cycle distance and exports."""

import numpy as np
import pytest

from lib.core.constants.app_constants import SAMPLING_STREAM
from lib.core.errors.app_errors import DomainError, ResourceError, StructuralError
from lib.core.utils.rng import stream
from lib.features.attractors.data.datasources.attractor_export_datasource import (
    AttractorExportDatasource,
)
from lib.features.attractors.domain.entities.attractor import Attractor, AttractorKind
from lib.features.attractors.domain.usecases.basin_census_usecase import BasinCensusUsecase
from lib.features.attractors.domain.usecases.cycle_distance_usecase import (
    CycleDistanceUsecase,
)
from lib.features.attractors.domain.usecases.find_attractor_usecase import FindAttractorUsecase
from lib.features.attractors.domain.usecases.initial_states_usecase import (
    InitialStatesUsecase,
)
from lib.features.experiment.data.datasources.preset_datasource import PresetDatasource
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix
from lib.features.fcm_core.domain.entities.state_vector import StateVector
from lib.features.fcm_core.domain.entities.threshold_function import HardBinary, Sigmoid
from lib.features.fcm_core.domain.usecases.restrict_usecase import RestrictUsecase

LABELS = ("C1", "C2", "C3", "C4", "C5")
CYCLE_A = ["00010", "10001", "01000", "00100"]
CYCLE_B = ["00110", "10010", "11001", "01100"]


def dolphin() -> EdgeMatrix:
    return PresetDatasource().dolphin_matrix()


def bits(text: str) -> StateVector:
    return StateVector.from_bits_text(text)


def find(text: str, fcm: EdgeMatrix = None) -> Attractor:
    return FindAttractorUsecase().execute(bits(text), fcm or dolphin(), HardBinary())


def cycle(texts, labels=LABELS) -> Attractor:
    return Attractor.from_cycle([bits(text) for text in texts], transient=0, labels=labels)


def test_c4_and_c2_c4_starts_share_the_canonical_four_cycle() -> None:
    first = find("00010")
    second = find("01010")

    assert first == second
    assert first.kind is AttractorKind.LIMIT_CYCLE
    assert [state.bits_text() for state in first.states] == CYCLE_A
    assert first.transient == 0
    assert second.transient == 2


def test_c4_c5_start_reaches_the_other_four_cycle() -> None:
    attractor = find("00011")

    assert [state.bits_text() for state in attractor.states] == CYCLE_B
    assert attractor.transient == 2
    assert attractor != find("00010")


def test_zero_state_is_a_fixed_point() -> None:
    attractor = find("00000")

    assert attractor.kind is AttractorKind.FIXED_POINT
    assert attractor.period == 1


def test_dropping_c4_kills_the_cycle_but_the_full_map_keeps_it() -> None:
    restricted = RestrictUsecase().drop(dolphin(), ["C4"])

    reduced = find("0110", restricted)
    full = find("01100")

    assert reduced.kind is AttractorKind.FIXED_POINT
    assert reduced.states[0].bits_text() == "0000"
    assert reduced.transient == 2
    assert full.kind is AttractorKind.LIMIT_CYCLE
    assert full.period == 4


def test_entry_records_where_the_run_joined_the_cycle() -> None:
    attractor = find("01100")

    assert attractor.entry_state.bits_text() == "01100"
    assert attractor.states[0].bits_text() == "00110"


def test_canonical_form_ignores_rotation() -> None:
    rotated = cycle(CYCLE_A[2:] + CYCLE_A[:2])

    assert rotated == cycle(CYCLE_A)
    assert hash(rotated) == hash(cycle(CYCLE_A))


def test_unresolved_when_budget_is_too_small() -> None:
    attractor = FindAttractorUsecase().execute(bits("00011"), dolphin(), HardBinary(), max_steps=3)

    assert attractor.kind is AttractorKind.UNRESOLVED
    assert attractor.transient == 3
    assert attractor.describe() == "unresolved"


def test_find_attractor_validates_inputs() -> None:
    with pytest.raises(DomainError):
        FindAttractorUsecase().execute(bits("00011"), dolphin(), HardBinary(), max_steps=0)
    with pytest.raises(StructuralError):
        FindAttractorUsecase().execute(bits("0011"), dolphin(), HardBinary())


def test_binary_dynamics_always_resolve_within_pigeonhole_budget() -> None:
    rng = np.random.default_rng(11)
    usecase = FindAttractorUsecase()
    for _ in range(25):
        n = int(rng.integers(2, 7))
        fcm = EdgeMatrix(labels=[f"n{i}" for i in range(n)], weights=rng.uniform(-1, 1, (n, n)))
        start = StateVector.binary(rng.integers(0, 2, n))

        attractor = usecase.execute(start, fcm, HardBinary(), max_steps=2**n + 1)

        assert attractor.is_resolved
        states = attractor.states
        for divisor in range(1, attractor.period):
            if attractor.period % divisor == 0:
                assert any(states[i] != states[i % divisor] for i in range(attractor.period))


def test_sigmoid_dynamics_settle_under_tolerance() -> None:
    fcm = EdgeMatrix.from_rows(["a", "b"], [[0.2, 0.1], [0.1, 0.2]])

    attractor = FindAttractorUsecase().execute(
        StateVector(values=[0.3, 0.9]), fcm, Sigmoid(steepness=1.0), max_steps=2000
    )

    assert attractor.kind is AttractorKind.FIXED_POINT


def test_sigmoid_runs_settling_within_tolerance_share_one_basin() -> None:
    fcm = EdgeMatrix.from_rows(["a", "b"], [[0.2, 0.1], [0.1, 0.2]])
    phi = Sigmoid(steepness=1.0)
    initials = [
        StateVector(values=[0.3, 0.9]),
        StateVector(values=[0.0, 0.0]),
        StateVector(values=[1.0, 1.0]),
    ]
    first = FindAttractorUsecase().execute(initials[0], fcm, phi)
    second = FindAttractorUsecase().execute(initials[1], fcm, phi)

    census = BasinCensusUsecase().execute(fcm, phi, initials=initials)

    assert first.states[0] != second.states[0]
    assert first == second
    assert hash(first) == hash(second)
    assert len(census.entries) == 1
    assert census.entries[0].count == 3


def test_exhaustive_census_partitions_all_states() -> None:
    census = BasinCensusUsecase().execute(dolphin(), HardBinary(), exhaustive=True)

    assert census.total == 32
    assert sum(entry.count for entry in census.entries) == 32
    assert set(census.attractors) >= {find("00000"), cycle(CYCLE_A), cycle(CYCLE_B)}
    assert all(attractor.is_resolved for attractor in census.attractors)


def test_census_puts_same_basin_states_together() -> None:
    initials = [bits("00010"), bits("01010")]

    census = BasinCensusUsecase().execute(
        dolphin(), HardBinary(), initials=initials, keep_members=True
    )

    assert len(census.entries) == 1
    assert census.basin_of(bits("01010")) == cycle(CYCLE_A)
    assert census.count_for(cycle(CYCLE_A)) == 2
    assert census.count_for(cycle(CYCLE_B)) == 0


def test_random_census_is_deterministic_for_a_seed() -> None:
    usecase = BasinCensusUsecase()

    def run(threads: int):
        initials = InitialStatesUsecase().random(5, 10_000, stream(5, SAMPLING_STREAM))
        return usecase.execute(dolphin(), HardBinary(), initials=initials, threads=threads)

    first = run(1)
    second = run(4)

    assert first == second
    assert first.total == 10_000


def test_census_compare_projects_onto_observable_nodes() -> None:
    target = BasinCensusUsecase().execute(dolphin(), HardBinary(), exhaustive=True)
    padded = EdgeMatrix(
        labels=("P",) + LABELS,
        weights=np.pad(dolphin().weights, ((1, 0), (1, 0))),
    )
    initials = [StateVector(values=np.concatenate([[0.0], s.values])) for s in
                InitialStatesUsecase().exhaustive(5)]
    mixture = BasinCensusUsecase().execute(padded, HardBinary(), initials=initials)

    reproduced = target.compare(mixture, LABELS)

    assert set(reproduced) == {a for a in target.attractors if a.is_resolved}


def test_exhaustive_guard() -> None:
    with pytest.raises(ResourceError):
        InitialStatesUsecase().exhaustive(21)


def test_random_initials_can_be_real_valued() -> None:
    states = InitialStatesUsecase().random(4, 3, np.random.default_rng(0), binary=False)

    assert len(states) == 3
    assert not all(state.is_binary() for state in states)


def test_cycle_distance_of_identical_and_rotated_cycles_is_zero() -> None:
    usecase = CycleDistanceUsecase()
    rotated = Attractor(
        kind=AttractorKind.LIMIT_CYCLE,
        states=tuple(bits(text) for text in CYCLE_A[2:] + CYCLE_A[:2]),
        labels=LABELS,
    )

    assert usecase.execute(cycle(CYCLE_A), cycle(CYCLE_A), LABELS) == 0.0
    assert usecase.execute(cycle(CYCLE_A), rotated, LABELS) == 0.0


def test_cycle_distance_to_zero_fixed_point_is_mean_activation() -> None:
    usecase = CycleDistanceUsecase()

    distance = usecase.execute(cycle(CYCLE_A), find("00000"), LABELS)

    assert distance == pytest.approx(5 / 20)
    assert usecase.execute(find("00000"), cycle(CYCLE_A), LABELS) == distance


def test_cycle_distance_is_symmetric_across_periods() -> None:
    usecase = CycleDistanceUsecase()
    two_cycle = cycle(["10000", "01000"])

    assert usecase.execute(two_cycle, cycle(CYCLE_B), LABELS) == pytest.approx(
        usecase.execute(cycle(CYCLE_B), two_cycle, LABELS)
    )
    assert usecase.execute(two_cycle, cycle(CYCLE_B), LABELS) > 0.0


def test_cycle_distance_matches_by_label_across_node_sets() -> None:
    without_c1 = cycle(["0010", "0001", "1000", "0100"], labels=("C2", "C3", "C4", "C5"))
    observable = ["C2", "C3", "C4", "C5"]

    assert CycleDistanceUsecase().execute(cycle(CYCLE_A), without_c1, observable) == 0.0
    assert CycleDistanceUsecase().execute(without_c1, cycle(CYCLE_B), observable) > 0.0


def test_cycle_distance_rejects_unresolved_and_unknown_labels() -> None:
    usecase = CycleDistanceUsecase()

    with pytest.raises(DomainError):
        usecase.execute(Attractor.unresolved(10, LABELS), cycle(CYCLE_A), LABELS)
    with pytest.raises(StructuralError):
        usecase.execute(cycle(CYCLE_A), cycle(CYCLE_A), ["C9"])


def test_project_reduces_to_minimal_period() -> None:
    projected = cycle(CYCLE_A).project(["C3"])

    assert projected.period == 4
    assert cycle(["10", "11"], labels=("a", "b")).project(["a"]).kind is AttractorKind.FIXED_POINT


def test_attractor_text_export() -> None:
    text = AttractorExportDatasource().format_attractor(cycle(CYCLE_A))

    assert text.splitlines() == [
        "# attractor kind=limit_cycle period=4 transient=0",
        "# labels: C1,C2,C3,C4,C5",
        "0,0,0,1,0",
        "1,0,0,0,1",
        "0,1,0,0,0",
        "0,0,1,0,0",
    ]


def test_census_csv_export() -> None:
    census = BasinCensusUsecase().execute(dolphin(), HardBinary(), initials=[bits("00000")])

    text = AttractorExportDatasource().format_census_csv(census)

    assert text == "attractor_id,kind,period,count,states\n0,fixed_point,1,1,00000\n"


def test_census_text_export_separates_attractors() -> None:
    census = BasinCensusUsecase().execute(
        dolphin(), HardBinary(), initials=[bits("00000"), bits("00010")]
    )

    text = AttractorExportDatasource().format_census_text(census)

    assert text.startswith("# census total=2 attractors=2\n")
    assert text.count("---") == 2


def test_trajectory_raster_is_ascii_graymap() -> None:
    states = [bits("10"), StateVector(values=[0.5, 1.0])]

    text = AttractorExportDatasource().format_trajectory_pgm(states, ["a", "b"])

    assert text.splitlines() == ["P2", "# nodes: a,b", "2 2", "255", "255 128", "0 255"]
