"""Exact one-step convergence criteria and worst-case bounds.

The uniform-hub threshold is ``max_need``: the largest rest weight
minus tolerance over non-hub vertices, truncated at zero (weights and
tolerances live in the naturals, so negative slack never helps).  A
hypothetical uniform hub weight W achieves one-step all-Glory from
every initial state iff W >= max_need; the per-node form
``W + tau(v) >= rest_weight(v)`` is equivalent.

Two worst-case bounds sit above the exact threshold: the pointwise
deg-max bound (per-node indegree times max inbound weight, maximised
over non-hub vertices) and the classical product of the two global
maxima.  The chain maxneed <= maxrest <= pointwise <= classical holds
on every graph.
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import asdict, dataclass

from .graph import Tolerance, WeightedDigraph, validate_seeds


@dataclass(frozen=True)
class NodeNeed:
    """Per-node breakdown row of a threshold report."""

    vertex: int
    rest_weight: int
    tolerance: int
    need: int
    indeg: int
    max_in: int


@dataclass(frozen=True)
class ThresholdReport:
    maxrest: int
    maxneed: int
    pointwise_bound: int
    classical_bound: int
    per_node: tuple[NodeNeed, ...]

    def as_dict(self) -> dict:
        return {
            "maxrest": self.maxrest,
            "maxneed": self.maxneed,
            "pointwise_bound": self.pointwise_bound,
            "classical_bound": self.classical_bound,
            "per_node": [asdict(row) for row in self.per_node],
        }


def non_hub_vertices(G: WeightedDigraph) -> list[int]:
    vs = [v for v in range(G.n) if v != G.hub]
    if not vs:
        raise ValueError("graph has no non-hub vertices")
    return vs


def max_need(G: WeightedDigraph, tau: Tolerance) -> int:
    """Max over non-hub v of rest_weight(v) - tau(v), truncated at 0."""
    return max(max(0, G.rest_weight(v) - tau[v]) for v in non_hub_vertices(G))


def uniform_one_step_holds(G: WeightedDigraph, W: int, tau: Tolerance) -> bool:
    """Would a uniform hub of weight W force all-Glory in one step?

    W is hypothetical: any hub edges actually present in G live in
    hub_weight, not rest_weight, so they never enter the comparison.
    """
    if W < 0:
        raise ValueError(f"hub weight must be >= 0, got {W}")
    return W >= max_need(G, tau)


def seeded_one_step_holds(
    G: WeightedDigraph, seeds: Iterable[int], tau: Tolerance
) -> bool:
    """Exact one-step criterion for a seed set pinned to Glory.

    True iff for every vertex outside the seed set, inbound mass from
    the seeds plus tolerance covers inbound mass from everywhere else.
    """
    members = validate_seeds(G, seeds)
    for v in range(G.n):
        if v in members:
            continue
        inside, outside = G.seed_masses(members, v)
        if inside + tau[v] < outside:
            return False
    return True


def pointwise_degmax_bound(G: WeightedDigraph) -> int:
    """Max over non-hub v of (non-hub indegree of v) * (max inbound weight of v)."""
    best = 0
    for v in non_hub_vertices(G):
        indeg, max_in = G.nonhub_indeg_and_maxin(v)
        best = max(best, indeg * max_in)
    return best


def classical_bound(G: WeightedDigraph) -> int:
    """Product of the two global maxima (indegree and edge weight), hub excluded."""
    indeg_global = 0
    wmax_global = 0
    for v in non_hub_vertices(G):
        indeg, max_in = G.nonhub_indeg_and_maxin(v)
        indeg_global = max(indeg_global, indeg)
        wmax_global = max(wmax_global, max_in)
    return indeg_global * wmax_global


def threshold_report(G: WeightedDigraph, tau: Tolerance) -> ThresholdReport:
    rows = []
    for v in non_hub_vertices(G):
        rest = G.rest_weight(v)
        t = tau[v]
        indeg, max_in = G.nonhub_indeg_and_maxin(v)
        rows.append(
            NodeNeed(
                vertex=v,
                rest_weight=rest,
                tolerance=t,
                need=max(0, rest - t),
                indeg=indeg,
                max_in=max_in,
            )
        )
    return ThresholdReport(
        maxrest=max(r.rest_weight for r in rows),
        maxneed=max(r.need for r in rows),
        pointwise_bound=max(r.indeg * r.max_in for r in rows),
        classical_bound=max(r.indeg for r in rows) * max(r.max_in for r in rows),
        per_node=tuple(rows),
    )


def tolerance_monotonicity_check(
    G: WeightedDigraph, tau: Tolerance, tau_hi: Tolerance
) -> bool:
    """Check that raising tolerances cannot raise the required hub weight.

    Requires tau_hi >= tau pointwise; returns whether
    max_need(tau_hi) <= max_need(tau), which always holds.
    """
    keys = {v for v, _ in tau.items()} | {v for v, _ in tau_hi.items()}
    for v in keys:
        if tau_hi[v] < tau[v]:
            raise ValueError(f"tau_hi[{v}]={tau_hi[v]} is below tau[{v}]={tau[v]}")
    return max_need(G, tau_hi) <= max_need(G, tau)
