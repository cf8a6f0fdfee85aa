"""Shared randomized-data helpers for the test-suite.

All randomness is seeded by the callers, so every test run sees the same
sequence of matrices, relabelings, and mutants.
"""

from __future__ import annotations

import random
from typing import Dict, Tuple

import pytest

from gkmkit.model import FixedPoint, FixedPointData, relabel
from gkmkit.weights import Weight


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260818)


def random_unimodular(rng: random.Random, n: int) -> Tuple[Weight, ...]:
    """Random determinant +-1 integer matrix built from elementary row ops."""
    if n == 1:
        return ((rng.choice((-1, 1)),),)
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(2 * n):
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-2, -1, 1, 2))
        for col in range(n):
            m[j][col] += c * m[i][col]
    rng.shuffle(m)
    for row in m:
        if rng.random() < 0.3:
            for col in range(n):
                row[col] = -row[col]
    return tuple(tuple(r) for r in m)


def random_relabel(rng: random.Random, data: FixedPointData,
                   prefix: str = "v") -> Tuple[FixedPointData, Dict[str, str]]:
    """Rename every point id to a shuffled fresh name."""
    ids = [p.id for p in data.points]
    perm = list(range(len(ids)))
    rng.shuffle(perm)
    mapping = {pid: f"{prefix}{perm[i]:02d}" for i, pid in enumerate(ids)}
    return relabel(data, mapping), mapping


def shuffled(rng: random.Random, data: FixedPointData) -> FixedPointData:
    """Shuffle point order and the weight order inside each point."""
    pts = []
    for p in data.points:
        ws = list(p.weights)
        rng.shuffle(ws)
        pts.append(FixedPoint(p.id, tuple(ws)))
    rng.shuffle(pts)
    return FixedPointData(data.torus_rank, data.half_dim, tuple(pts),
                          data.torus_manifold)


def mutate_one_weight(rng: random.Random, data: FixedPointData) -> FixedPointData:
    """Replace a single weight by a different non-zero random vector."""
    i = rng.randrange(len(data.points))
    p = data.points[i]
    j = rng.randrange(len(p.weights))
    k = data.torus_rank
    while True:
        w = tuple(rng.randint(-4, 4) for _ in range(k))
        if any(w) and w != p.weights[j]:
            break
    ws = list(p.weights)
    ws[j] = w
    pts = list(data.points)
    pts[i] = FixedPoint(p.id, tuple(ws))
    return FixedPointData(data.torus_rank, data.half_dim, tuple(pts),
                          data.torus_manifold)
