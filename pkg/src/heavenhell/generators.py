"""Deterministic constructors for the experiment graph families.

All base families are hubless (``hub=None``); hubs and seed splits are
attached afterwards as fresh vertices so the base topology's rest
weights are undisturbed.  Seed vertices receive no in-edges: their
state is pinned anyway.  No family generates self-loops.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import WeightedDigraph

FAMILIES = ("ring", "grid", "barabasi_albert", "adversarial_hetero")


def gen_ring(n: int, k: int) -> WeightedDigraph:
    """Cycle of n vertices where each receives weight-1 edges from its k
    nearest neighbours on each side (2k in-edges per vertex)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n < 2 * k + 1:
        raise ValueError(f"ring needs n >= 2k+1, got n={n}, k={k}")
    edges = []
    for v in range(n):
        for j in range(1, k + 1):
            edges.append(((v - j) % n, v, 1))
            edges.append(((v + j) % n, v, 1))
    return WeightedDigraph(n, edges)


def gen_grid(rows: int, cols: int, torus: bool) -> WeightedDigraph:
    """4-neighbour grid, weight 1 per direction; torus wraps the borders."""
    if rows < 3 or cols < 3:
        raise ValueError(f"grid needs rows, cols >= 3, got {rows}x{cols}")
    n = rows * cols
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            for dr, dc in ((-1, 0), (1, 0), (0, -1), (0, 1)):
                rr, cc = r + dr, c + dc
                if torus:
                    rr, cc = rr % rows, cc % cols
                elif not (0 <= rr < rows and 0 <= cc < cols):
                    continue
                edges.append((rr * cols + cc, v, 1))
    return WeightedDigraph(n, edges)


def gen_ba(n: int, m: int, seed: int) -> WeightedDigraph:
    """Preferential-attachment graph, deterministic under the rng seed.

    Starts from a complete clique on m+1 vertices, then each new vertex
    draws m distinct attachment targets proportionally to degree
    (repeat draws are re-drawn).  Undirected links are stored as
    symmetric directed pairs of weight 1, so every weight is 1 and a
    vertex's rest weight equals its in-degree.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if n <= m:
        raise ValueError(f"ba needs n > m, got n={n}, m={m}")
    rng = random.Random(seed)
    edges = []
    repeated: list[int] = []  # one entry per link endpoint, drives the degree bias
    for u in range(m + 1):
        for v in range(u + 1, m + 1):
            edges.append((u, v, 1))
            edges.append((v, u, 1))
            repeated.extend((u, v))
    for new in range(m + 1, n):
        targets: set[int] = set()
        while len(targets) < m:
            targets.add(rng.choice(repeated))
        for target in sorted(targets):
            edges.append((new, target, 1))
            edges.append((target, new, 1))
            repeated.extend((new, target))
    return WeightedDigraph(n, edges)


def gen_adversarial_hetero(
    fan_in: int = 200, light_w: int = 4, heavy_w: int = 800
) -> WeightedDigraph:
    """Heterogeneous instance where the per-node deg-max bound is exact
    but the global product bound is off by a factor of fan_in.

    Vertex 0 collects fan_in edges of weight light_w from distinct
    leaves; vertex 1 collects a single edge of weight heavy_w from a
    dedicated source.  Defaults give rest weights 800/800, pointwise
    bound 800, classical bound 200 * 800 = 160000.
    """
    if fan_in < 1:
        raise ValueError(f"fan_in must be >= 1, got {fan_in}")
    if light_w < 1 or heavy_w < 1:
        raise ValueError("edge weights must be >= 1")
    # ids: 0 = fan-in target, 1 = heavy target, 2 = heavy source, 3.. = leaves
    n = fan_in + 3
    edges = [(2, 1, heavy_w)]
    for leaf in range(3, n):
        edges.append((leaf, 0, light_w))
    return WeightedDigraph(n, edges)


def attach_hub(G: WeightedDigraph, W: int) -> WeightedDigraph:
    """Add a fresh hub wired to every existing vertex at weight W.

    W=0 attaches an isolated hub (still designated, no edges).
    """
    if W < 0:
        raise ValueError(f"hub weight must be >= 0, got {W}")
    hub = G.n
    edges = G.edges()
    if W > 0:
        edges.extend((hub, v, W) for v in range(G.n))
    return WeightedDigraph(G.n + 1, edges, hub=hub)


def attach_seed_split(
    G: WeightedDigraph, weights: list[int]
) -> tuple[WeightedDigraph, frozenset[int]]:
    """Add one fresh seed vertex per entry, the i-th wired to every
    original vertex at weights[i].  Returns the graph (hub = first seed)
    and the new seed ids; seeds get no in-edges."""
    if not weights:
        raise ValueError("split weights must be nonempty")
    if any(w < 0 for w in weights):
        raise ValueError("split weights must be >= 0")
    edges = G.edges()
    seeds = []
    for i, w in enumerate(weights):
        s = G.n + i
        seeds.append(s)
        if w > 0:
            edges.extend((s, v, w) for v in range(G.n))
    return WeightedDigraph(G.n + len(weights), edges, hub=seeds[0]), frozenset(seeds)


@dataclass(frozen=True)
class GenSpec:
    """A reproducible recipe: base family parameters plus hubbing.

    Identical specs build bit-identical graphs.  hub_weight and split
    are mutually exclusive; with neither set, build() returns the
    hubless base and an empty seed set.
    """

    family: str
    n: int | None = None
    k: int | None = None
    rows: int | None = None
    cols: int | None = None
    torus: bool = False
    m: int | None = None
    seed: int | None = None
    fan_in: int = 200
    light_w: int = 4
    heavy_w: int = 800
    hub_weight: int | None = None
    split: tuple[int, ...] | None = None

    def build_base(self) -> WeightedDigraph:
        if self.family == "ring":
            return gen_ring(self.n, self.k)
        if self.family == "grid":
            return gen_grid(self.rows, self.cols, self.torus)
        if self.family == "barabasi_albert":
            return gen_ba(self.n, self.m, self.seed if self.seed is not None else 0)
        if self.family == "adversarial_hetero":
            return gen_adversarial_hetero(self.fan_in, self.light_w, self.heavy_w)
        raise ValueError(f"unknown family {self.family!r}, expected one of {FAMILIES}")

    def build(self) -> tuple[WeightedDigraph, frozenset[int]]:
        if self.hub_weight is not None and self.split is not None:
            raise ValueError("hub_weight and split are mutually exclusive")
        base = self.build_base()
        if self.split is not None:
            return attach_seed_split(base, list(self.split))
        if self.hub_weight is not None:
            hubbed = attach_hub(base, self.hub_weight)
            return hubbed, frozenset((hubbed.hub,))
        return base, frozenset()

    def describe(self) -> str:
        """Compact parameter string for CSV rows and figure legends."""
        if self.family == "ring":
            return f"ring n={self.n} k={self.k}"
        if self.family == "grid":
            kind = "torus" if self.torus else "open"
            return f"grid {self.rows}x{self.cols} {kind}"
        if self.family == "barabasi_albert":
            return f"ba n={self.n} m={self.m} seed={self.seed}"
        return f"adversarial fan_in={self.fan_in} light={self.light_w} heavy={self.heavy_w}"
