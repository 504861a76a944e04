"""Brute-force ground truth by exhaustive enumeration of initial states.

For n <= 20 every assignment of the non-seed vertices is enumerated,
one forced synchronous step is applied, and the verdict is whether all
of them land on all-Glory.  States are enumerated as a binary counter
over the non-seed vertices in ascending id order (Gnash=0, Glory=1,
most significant digit first), so index 0 is all-Gnash and a failing
instance reports the lexicographically first counterexample.

The step itself is evaluated in bulk with numpy (a chunk of states is
a 0/1 matrix; scores are one matrix product), which is the same forced
update the scalar ``dynamics.sync_step`` performs; the test suite
cross-checks the two on random instances.
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from .dynamics import ALL_GNASH, State, TiePolicy, is_all_glory, sync_step
from .graph import Tolerance, WeightedDigraph, validate_seeds

CAPACITY = 20  # max vertex count; 2^(n-1) states must stay enumerable
_CHUNK_BITS = 16


class CapacityError(ValueError):
    """Instance too large to enumerate exhaustively."""


@dataclass(frozen=True)
class OracleVerdict:
    converges_from_all_states: bool
    witness: tuple[State, int] | None  # (initial state, failing vertex)
    states_checked: int


def _check_capacity(G: WeightedDigraph) -> None:
    if G.n > CAPACITY:
        raise CapacityError(
            f"graph has n={G.n} vertices, exhaustive enumeration is capped at {CAPACITY}"
        )


def exhaustive_one_step(
    G: WeightedDigraph,
    seeds: Iterable[int],
    tau: Tolerance,
    policy: TiePolicy,
) -> OracleVerdict:
    """Check one-step all-Glory convergence from every initial state.

    On failure the witness is the first counterexample in enumeration
    order together with its smallest non-Glory vertex, and
    states_checked counts the states scanned up to and including it.
    """
    _check_capacity(G)
    members = validate_seeds(G, seeds)
    nonseeds = [v for v in range(G.n) if v not in members]
    k = len(nonseeds)
    total_states = 1 << k

    W = G.weight_matrix()
    cols = np.array(nonseeds, dtype=np.int64) if nonseeds else np.zeros(0, dtype=np.int64)
    w_to_nonseeds = W[:, cols]  # (n, k)
    tau_vec = np.array([tau[v] for v in nonseeds], dtype=np.int64)
    total_in_vec = np.array([G.total_in(v) for v in nonseeds], dtype=np.int64)
    shifts = np.array([k - 1 - j for j in range(k)], dtype=np.int64)

    chunk = min(total_states, 1 << _CHUNK_BITS)
    for start in range(0, total_states, chunk):
        idx = np.arange(start, min(start + chunk, total_states), dtype=np.int64)
        bits = (idx[:, None] >> shifts[None, :]) & 1 if k else np.zeros((len(idx), 0), dtype=np.int64)
        full = np.ones((len(idx), G.n), dtype=np.int64)  # seed columns stay 1
        full[:, cols] = bits
        score_g = full @ w_to_nonseeds  # (m, k)
        t = score_g + tau_vec
        r = total_in_vec - score_g
        if policy is TiePolicy.GLORY:
            glory = r <= t
        elif policy is TiePolicy.GNASH:
            glory = r < t
        else:
            glory = (r < t) | ((r == t) & bits.astype(bool))
        ok = glory.all(axis=1)
        if not ok.all():
            row = int(np.argmin(ok))
            col = int(np.argmin(glory[row]))
            counter = int(idx[row])
            witness_state = 0
            for j, v in enumerate(nonseeds):
                if counter >> (k - 1 - j) & 1:
                    witness_state |= 1 << v
            return OracleVerdict(
                converges_from_all_states=False,
                witness=(witness_state, nonseeds[col]),
                states_checked=counter + 1,
            )
    return OracleVerdict(True, None, total_states)


def oracle_threshold_search(
    G_base: WeightedDigraph,
    k_max_W: int,
    tau: Tolerance,
    policy: TiePolicy = TiePolicy.GLORY,
    method: str = "binary",
) -> int | None:
    """Smallest uniform hub weight in [0, k_max_W] that passes the
    exhaustive check after attaching a fresh hub to G_base, or None.

    G_base must carry no hub edges.  The binary method exploits that
    raising W only grows every Glory score; the linear method scans
    from 0 and exists to validate that assumption.
    """
    from .generators import attach_hub  # late import, generators builds on this package

    if G_base.hub is not None and any(u == G_base.hub for u, _, _ in G_base.edges()):
        raise ValueError("base graph must have no hub out-edges")
    if G_base.n + 1 > CAPACITY:
        raise CapacityError(
            f"base graph with attached hub has n={G_base.n + 1}, cap is {CAPACITY}"
        )
    if k_max_W < 0:
        raise ValueError(f"k_max_W must be >= 0, got {k_max_W}")
    if method not in ("binary", "linear"):
        raise ValueError(f"unknown search method {method!r}")

    def converges(W: int) -> bool:
        hubbed = attach_hub(G_base, W)
        return exhaustive_one_step(
            hubbed, (hubbed.hub,), tau, policy
        ).converges_from_all_states

    if method == "linear":
        for W in range(k_max_W + 1):
            if converges(W):
                return W
        return None

    if not converges(k_max_W):
        return None
    lo, hi = 0, k_max_W
    while lo < hi:
        mid = (lo + hi) // 2
        if converges(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def worst_case_is_all_gnash_check(
    G: WeightedDigraph, seeds: Iterable[int], tau: Tolerance
) -> bool:
    """Validate the worst-case reduction under TieGlory: one step from
    all-Gnash succeeds iff one step from every state succeeds."""
    _check_capacity(G)
    members = validate_seeds(G, seeds)
    from_gnash = is_all_glory(
        sync_step(G, ALL_GNASH, members, tau, TiePolicy.GLORY), G.n
    )
    verdict = exhaustive_one_step(G, members, tau, TiePolicy.GLORY)
    return from_gnash == verdict.converges_from_all_states
