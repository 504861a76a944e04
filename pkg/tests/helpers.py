"""Randomized instance builders shared by property and acceptance tests."""
from __future__ import annotations

import random

from heavenhell import Tolerance, WeightedDigraph


def random_edges(rng: random.Random, n: int, w_max: int, density: float, selfloops: bool):
    edges = []
    for u in range(n):
        for v in range(n):
            if u == v and not selfloops:
                continue
            if rng.random() < density:
                edges.append((u, v, rng.randint(1, w_max)))
    return edges


def random_hubless(
    rng: random.Random,
    n_min: int = 2,
    n_max: int = 10,
    w_max: int = 5,
    density: float = 0.35,
    selfloops: bool = False,
) -> WeightedDigraph:
    n = rng.randint(n_min, n_max)
    return WeightedDigraph(n, random_edges(rng, n, w_max, density, selfloops))


def random_hubbed(
    rng: random.Random,
    n_min: int = 2,
    n_max: int = 10,
    w_max: int = 5,
    density: float = 0.35,
    selfloops: bool = False,
) -> WeightedDigraph:
    n = rng.randint(n_min, n_max)
    edges = random_edges(rng, n, w_max, density, selfloops)
    return WeightedDigraph(n, edges, hub=rng.randrange(n))


def random_state(rng: random.Random, n: int) -> int:
    return rng.getrandbits(n)


def random_tau(rng: random.Random, n: int, t_max: int = 3) -> Tolerance:
    return Tolerance({v: rng.randint(0, t_max) for v in range(n)})


def random_seeds(rng: random.Random, n: int, max_size: int | None = None) -> frozenset[int]:
    size = rng.randint(1, max_size if max_size is not None else n)
    return frozenset(rng.sample(range(n), size))
