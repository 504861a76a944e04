"""Update semantics: seed forcing, Glory/Gnash scores, tie policies,
synchronous steps, and sequential schedule passes.

A state is an int bitmask: bit v set means vertex v is Glory, clear
means Gnash.  This keeps forcing a single OR and makes exhaustive
enumeration of small instances cheap.  ``ALL_GNASH`` (0) is the empty
mask.

Every update first forces the seed set to Glory, then a node compares
its Glory score plus tolerance against its Gnash score; ties resolve
per the active :class:`TiePolicy`.  ``TiePolicy.STAY`` keeps the node's
pre-forcing value on a tie (forcing only pins seed members, so for a
non-seed node that is simply its current value).
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from enum import Enum

from .graph import Tolerance, WeightedDigraph, validate_seeds

State = int

ALL_GNASH: State = 0


class TiePolicy(Enum):
    GLORY = "glory"  # tie -> Glory
    GNASH = "gnash"  # tie -> Gnash
    STAY = "stay"    # tie -> keep current value


def seed_mask(seeds: Iterable[int]) -> State:
    m = 0
    for v in seeds:
        m |= 1 << v
    return m


def all_glory_state(n: int) -> State:
    return (1 << n) - 1


def is_all_glory(s: State, n: int) -> bool:
    return s == all_glory_state(n)


def glory_count(s: State, n: int) -> int:
    return (s & all_glory_state(n)).bit_count()


def state_from_literal(text: str) -> State:
    """Parse a 'G'/'N' string, index = vertex id."""
    s = 0
    for i, ch in enumerate(text):
        if ch == "G":
            s |= 1 << i
        elif ch != "N":
            raise ValueError(f"bad state character {ch!r} at index {i}")
    return s


def state_to_literal(s: State, n: int) -> str:
    return "".join("G" if s >> v & 1 else "N" for v in range(n))


def force_seed(s: State, seeds: Iterable[int]) -> State:
    """Pin every seed member to Glory; all other vertices unchanged."""
    return s | seed_mask(seeds)


def scores(
    G: WeightedDigraph, s: State, seeds: Iterable[int], v: int
) -> tuple[int, int]:
    """Weighted inbound (Glory, Gnash) scores of v after forcing the seeds.

    Both sides are summed independently; their total equals total_in(v).
    """
    members = validate_seeds(G, seeds)
    G.check_vertex(v)
    forced = s | seed_mask(members)
    score_g = score_n = 0
    for u, w in G.in_edges(v):
        if forced >> u & 1:
            score_g += w
        else:
            score_n += w
    return score_g, score_n


def next_state(
    G: WeightedDigraph,
    s: State,
    seeds: Iterable[int],
    tau: Tolerance,
    policy: TiePolicy,
    v: int,
) -> bool:
    """Next value of v (True = Glory) under one forced update.

    Seed members are pinned Glory.  For the rest, with T = Glory score
    plus tolerance and R = Gnash score: TieGlory yields Glory iff
    R <= T, TieGnash iff R < T, TieStay keeps s(v) exactly at R == T.
    """
    members = validate_seeds(G, seeds)
    if v in members:
        return True
    score_g, score_n = scores(G, s, members, v)
    t = score_g + tau[v]
    r = score_n
    if policy is TiePolicy.GLORY:
        return r <= t
    if policy is TiePolicy.GNASH:
        return r < t
    if r < t:
        return True
    if t < r:
        return False
    return bool(s >> v & 1)


def next_state_majority(
    G: WeightedDigraph, s: State, tau: Tolerance, v: int
) -> bool:
    """Majority form of the single-hub TieGlory update.

    Glory iff twice the Glory score plus tolerance reaches total_in(v).
    Agrees with next_state(..., TiePolicy.GLORY, v) on every input.
    """
    if G.hub is None:
        raise ValueError("majority form requires a designated hub")
    if v == G.hub:
        return True
    score_g, _ = scores(G, s, (G.hub,), v)
    return 2 * score_g + tau[v] >= G.total_in(v)


def sync_step(
    G: WeightedDigraph,
    s: State,
    seeds: Iterable[int],
    tau: Tolerance,
    policy: TiePolicy,
) -> State:
    """Simultaneous update: every non-seed vertex evaluated against the
    same pre-step state (seeds forced), seed members pinned Glory."""
    members = validate_seeds(G, seeds)
    out = seed_mask(members)
    for v in range(G.n):
        if v in members:
            continue
        if next_state(G, s, members, tau, policy, v):
            out |= 1 << v
    return out


def run_sync(
    G: WeightedDigraph,
    s0: State,
    seeds: Iterable[int],
    tau: Tolerance,
    policy: TiePolicy,
    max_steps: int,
) -> tuple[State, int | None]:
    """Iterate sync_step up to max_steps times.

    Returns the final state and the first step index at which all
    vertices are Glory (0 if s0 already is), or None if never within
    the budget.  Stops early at a fixed point.
    """
    if max_steps < 0:
        raise ValueError(f"max_steps must be >= 0, got {max_steps}")
    members = validate_seeds(G, seeds)
    full = all_glory_state(G.n)
    cur = s0
    steps_to_all_glory = 0 if cur == full else None
    for i in range(1, max_steps + 1):
        nxt = sync_step(G, cur, members, tau, policy)
        if nxt == cur:
            break
        cur = nxt
        if steps_to_all_glory is None and cur == full:
            steps_to_all_glory = i
    return cur, steps_to_all_glory


def schedule_states(
    G: WeightedDigraph,
    s0: State,
    seeds: Iterable[int],
    tau: Tolerance,
    policy: TiePolicy,
    sched: Sequence[int],
) -> Iterator[State]:
    """Yield the state after each visit of a sequential schedule pass.

    Seeds stay pinned Glory for the whole run; visiting a seed member
    is a no-op.  Each visit recomputes scores against the current state.
    """
    members = validate_seeds(G, seeds)
    cur = force_seed(s0, members)
    for v in sched:
        G.check_vertex(v)
        if v not in members:
            if next_state(G, cur, members, tau, policy, v):
                cur |= 1 << v
            else:
                cur &= ~(1 << v)
        yield cur


def run_schedule(
    G: WeightedDigraph,
    s0: State,
    seeds: Iterable[int],
    tau: Tolerance,
    policy: TiePolicy,
    sched: Sequence[int],
) -> State:
    """Run one full schedule pass; an empty schedule just forces the seeds."""
    cur = force_seed(s0, validate_seeds(G, seeds))
    for cur in schedule_states(G, s0, seeds, tau, policy, sched):
        pass
    return cur


def covers_all_nonhubs(
    sched: Sequence[int], G: WeightedDigraph, seeds: Iterable[int]
) -> bool:
    """True iff every non-seed vertex appears in the schedule at least once."""
    members = validate_seeds(G, seeds)
    visited = set(sched)
    return all(v in visited for v in range(G.n) if v not in members)
