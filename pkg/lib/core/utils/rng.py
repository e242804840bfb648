"""Seeded random streams."""

import numpy as np


def stream(seed: int, index: int) -> np.random.Generator:
    """Return the generator for child stream ``index`` of ``seed``.

    Children of one SeedSequence never overlap, so sampling, initialization and
    evaluation draws stay disjoint even when they share a seed.
    """
    children = np.random.SeedSequence(int(seed)).spawn(index + 1)
    return np.random.default_rng(children[index])
