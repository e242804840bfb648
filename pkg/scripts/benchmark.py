#!/usr/bin/env python3
"""Quick latency benchmark for attractor search, mixing and training epochs."""

from __future__ import annotations

import argparse
import statistics
import time

from lib.features.attractors.domain.usecases.basin_census_usecase import BasinCensusUsecase
from lib.features.experiment.data.datasources.preset_datasource import PresetDatasource
from lib.features.fcm_core.domain.entities.threshold_function import HardBinary
from lib.features.fcm_core.domain.usecases.restrict_usecase import RestrictUsecase
from lib.features.mixing.domain.usecases.mix_usecase import MixUsecase
from lib.features.phantom_learning.domain.entities.train_config import TrainConfig
from lib.features.phantom_learning.domain.usecases.sample_targets_usecase import (
    SampleTargetsUsecase,
)
from lib.features.phantom_learning.domain.usecases.train_usecase import TrainUsecase


def benchmark_operation(name: str, operation, iterations: int) -> dict:
    latencies_ms = []
    for _ in range(iterations):
        start = time.perf_counter()
        operation()
        latencies_ms.append((time.perf_counter() - start) * 1000)

    p95_index = max(0, min(len(latencies_ms) - 1, int(iterations * 0.95) - 1))
    sorted_latencies = sorted(latencies_ms)
    return {
        "name": name,
        "avg_ms": statistics.mean(latencies_ms),
        "min_ms": min(latencies_ms),
        "max_ms": max(latencies_ms),
        "p95_ms": sorted_latencies[p95_index],
    }


def main() -> None:
    parser = argparse.ArgumentParser(description="Benchmark phantom-fcm core operations")
    parser.add_argument(
        "--iterations",
        type=int,
        default=20,
        help="Number of iterations per operation",
    )
    args = parser.parse_args()

    presets = PresetDatasource()
    dolphin = presets.dolphin_matrix()
    experts, universe = presets.closure_experts()
    expert = RestrictUsecase().drop(dolphin, ["C1"])
    labels = expert.labels
    samples = SampleTargetsUsecase().execute(dolphin, HardBinary(), 1000, 2, 0, observable=labels)
    census = BasinCensusUsecase()
    operations = [
        ("exhaustive_census", lambda: census.execute(dolphin, HardBinary(), exhaustive=True)),
        ("mix_closure_experts", lambda: MixUsecase().mix_over_universe(experts, universe)),
        (
            "train_100_epochs",
            lambda: TrainUsecase().execute(expert, ["A"], samples, TrainConfig(epochs=100)),
        ),
    ]

    for name, operation in operations:
        metrics = benchmark_operation(name, operation, args.iterations)
        print(
            f"{metrics['name']}: avg={metrics['avg_ms']:.2f}ms p95={metrics['p95_ms']:.2f}ms "
            f"min={metrics['min_ms']:.2f}ms max={metrics['max_ms']:.2f}ms"
        )


if __name__ == "__main__":
    main()
