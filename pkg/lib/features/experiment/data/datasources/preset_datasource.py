"""Built-in systems, experts and scenarios of the dolphin-pod study."""

from typing import Callable, Dict, List, Sequence, Tuple

from lib.core.constants.app_constants import DEFAULT_MAX_STEPS, DEFAULT_SEED
from lib.core.errors.app_errors import ConfigError
from lib.features.experiment.domain.entities.scenario_config import (
    EvaluationSpec,
    ExpertSpec,
    SamplingSpec,
    ScenarioConfig,
)
from lib.features.fcm_core.domain.entities.edge_matrix import EdgeMatrix
from lib.features.mixing.domain.entities.stochastic_matrix import StochasticMatrix
from lib.features.mixing.domain.entities.weighted_expert import WeightedExpert
from lib.features.phantom_learning.domain.entities.train_config import (
    LossKind,
    PhantomInit,
    TrainConfig,
    Weighting,
)
from lib.features.phantom_learning.domain.entities.training_sample import SampleAnchor

DOLPHIN_LABELS = ("C1", "C2", "C3", "C4", "C5")
DOLPHIN_ROWS = (
    (0, 1, 0, -1, 0),
    (0, 0, 1, 0, -1),
    (0, -1, 0, 1, -1),
    (1, 0, -1, 0, 1),
    (-1, 1, 0, -1, 0),
)
DROPPED_BY_EXPERT = (("drop-C1", "C1"), ("drop-C2", "C2"), ("drop-C4", "C4"))
PHANTOM_NAMES = ("A", "B", "C")

# Phantom edges per expert, in observable order; the phantom's out-edges equal its in-edges.
LEARNED_PHANTOM_EDGES = (
    (0.6685, 0.4392, 0.0066, 0.8296),
    (0.8601, 0.6264, 0.9446, 0.4425),
    (0.7535, 0.4866, 0.8142, 0.0701),
)

MARKOV_CHAINS = (
    (("A", "B"), ((0.2, 0.8), (0.7, 0.3)), 0.3),
    (("A", "C"), ((0.5, 0.5), (0.9, 0.1)), 0.4),
    (("B", "C"), ((0.4, 0.6), (0.2, 0.8)), 0.3),
)
MARKOV_UNIVERSE = ("A", "B", "C")

CLOSURE_EXPERTS = (
    (("C1", "C2", "C3", "C4"), ((0, 1, 0, 0), (0, 0, -1, 1), (0, 0, 0, 1), (-1, 0, 0, 0)), 0.4),
    (("C1", "C2", "C4", "C5"), ((0, 1, 0, 1), (0, 0, 1, 0), (-1, 0, 0, 0), (0, 0, 1, 0)), 0.3),
    (("C2", "C3", "C4", "C5"), ((0, -1, 1, 0), (0, 0, 1, 0), (0, 0, 0, 0), (0, 0, 1, 0)), 0.3),
)

DOLPHIN_PRESET = "dolphin"
PAPER_MIXTURE_PRESET = "paper-mixture"


class PresetDatasource:
    """Constant inputs for demonstrations and zero-setup scenarios."""

    def dolphin_matrix(self) -> EdgeMatrix:
        return EdgeMatrix.from_rows(DOLPHIN_LABELS, DOLPHIN_ROWS)

    def markov_chains(self) -> Tuple[List[Tuple[StochasticMatrix, float]], Tuple[str, ...]]:
        chains = [
            (StochasticMatrix.from_rows(labels, rows), weight)
            for labels, rows, weight in MARKOV_CHAINS
        ]
        return chains, MARKOV_UNIVERSE

    def closure_experts(self) -> Tuple[List[WeightedExpert], Tuple[str, ...]]:
        experts = [
            WeightedExpert(fcm=EdgeMatrix.from_rows(labels, rows), weight=weight)
            for labels, rows, weight in CLOSURE_EXPERTS
        ]
        return experts, DOLPHIN_LABELS

    def learned_phantom_experts(self) -> List[EdgeMatrix]:
        """Dolphin restrictions augmented with the published phantom edges."""
        target = self.dolphin_matrix()
        experts = []
        for (_, dropped), phantom, edges in zip(
            DROPPED_BY_EXPERT, PHANTOM_NAMES, LEARNED_PHANTOM_EDGES
        ):
            observable = [label for label in DOLPHIN_LABELS if label != dropped]
            rows: List[List[float]] = [[0.0, *edges]]
            for row_index, label in enumerate(observable):
                source = target.index_of(label)
                rows.append(
                    [edges[row_index], *(target.weights[source, target.index_of(o)] for o in observable)]
                )
            experts.append(EdgeMatrix.from_rows([phantom, *observable], rows))
        return experts

    def dolphin_scenario(self) -> ScenarioConfig:
        """Three experts each missing one dolphin node, one phantom each, trained.

        Evaluation is HardBinary with x > 0 and the mixture is plain convex mixing.
        Edges the samples leave unconstrained are shrunk to exactly 0, which keeps
        them inactive under that threshold.
        """
        weight = 1.0 / len(DROPPED_BY_EXPERT)
        return ScenarioConfig(
            name=DOLPHIN_PRESET,
            target=self.dolphin_matrix(),
            experts=tuple(
                ExpertSpec(name=name, weight=weight, dropped_nodes=(dropped,))
                for name, dropped in DROPPED_BY_EXPERT
            ),
            train=TrainConfig(
                loss=LossKind.ENTROPIC,
                learning_rate=0.5,
                epochs=1500,
                unroll_steps=2,
                sigmoid_steepness=5.0,
                sigmoid_offset=0.3,
                anneal_to=20.0,
                phantom_init=PhantomInit.uniform_symmetric(0.1),
                seed=DEFAULT_SEED,
                weighting=Weighting.MULTIPLICITY,
                l1_shrinkage=0.01,
            ),
            sampling=SamplingSpec(
                n_initials=10_000,
                k=2,
                anchor=SampleAnchor.CANONICAL,
                skip_hidden_active=True,
                seed=DEFAULT_SEED,
            ),
            evaluation=EvaluationSpec(
                max_steps=DEFAULT_MAX_STEPS,
                seed=DEFAULT_SEED,
                exhaustive=True,
            ),
        )

    def paper_mixture_scenario(self) -> ScenarioConfig:
        """The published learned experts mixed as-is, without training."""
        weight = 1.0 / len(DROPPED_BY_EXPERT)
        return ScenarioConfig(
            name=PAPER_MIXTURE_PRESET,
            target=self.dolphin_matrix(),
            experts=tuple(
                ExpertSpec(name=name, weight=weight, matrix=matrix, phantom_labels=(phantom,))
                for (name, _), phantom, matrix in zip(
                    DROPPED_BY_EXPERT, PHANTOM_NAMES, self.learned_phantom_experts()
                )
            ),
            evaluation=EvaluationSpec(
                max_steps=DEFAULT_MAX_STEPS, exhaustive=True, threshold=0.0
            ),
            skip_training=True,
        )

    def scenario(self, name: str) -> ScenarioConfig:
        builders: Dict[str, Callable[[], ScenarioConfig]] = {
            DOLPHIN_PRESET: self.dolphin_scenario,
            PAPER_MIXTURE_PRESET: self.paper_mixture_scenario,
        }
        if name not in builders:
            raise ConfigError(f"unknown preset {name!r}; known: {', '.join(self.names())}")
        return builders[name]()

    def names(self) -> Sequence[str]:
        return [DOLPHIN_PRESET, PAPER_MIXTURE_PRESET]
