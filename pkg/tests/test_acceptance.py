"""Acceptance suite: one test per exit criterion.

Every check is exact (integer equality, zero tolerated discrepancies)
and asserts its wall-clock budget; a PASS line per criterion is printed
on success (visible with pytest -s, or in captured output).
"""
import random
import time
from contextlib import contextmanager

from heavenhell import (
    ALL_GNASH,
    TiePolicy,
    Tolerance,
    all_glory_state,
    attach_hub,
    attach_seed_split,
    exhaustive_one_step,
    gen_grid,
    gen_ring,
    glory_count,
    max_need,
    next_state,
    next_state_majority,
    oracle_threshold_search,
    schedule_states,
    scores,
    seeded_one_step_holds,
    threshold_report,
    tolerance_monotonicity_check,
    uniform_one_step_holds,
)

from helpers import random_hubbed, random_hubless, random_seeds, random_state, random_tau

T0 = Tolerance()


@contextmanager
def budget(name: str, seconds: float):
    t0 = time.perf_counter()
    yield
    elapsed = time.perf_counter() - t0
    assert elapsed < seconds, f"{name} took {elapsed:.2f}s, budget is {seconds:.0f}s"
    print(f"[acceptance] PASS {name} ({elapsed:.2f}s < {seconds:.0f}s)")


def test_ring_exact_thresholds():
    with budget("ring exact thresholds (k=1..4, n=10)", 10):
        for k in (1, 2, 3, 4):
            base = gen_ring(10, k)
            assert oracle_threshold_search(base, 2 * k + 2, T0) == 2 * k
            for W in range(2 * k + 3):
                assert uniform_one_step_holds(base, W, T0) == (W >= 2 * k)


def test_grid_threshold():
    with budget("grid 4x4 torus threshold = 4", 30):
        base = gen_grid(4, 4, torus=True)
        assert oracle_threshold_search(base, 8, T0) == 4


def test_adversarial_bounds():
    with budget("adversarial bounds (800, 800, 800, 160000)", 1):
        from heavenhell import gen_adversarial_hetero

        rep = threshold_report(gen_adversarial_hetero(), T0)
        assert rep.maxrest == 800
        assert rep.maxneed == 800
        assert rep.pointwise_bound == 800
        assert rep.classical_bound == 160000
        assert rep.classical_bound == 200 * rep.pointwise_bound


def test_multi_hub_splits():
    with budget("multi-hub splits on ring(10,3)", 10):
        expectations = [([5], False), ([3, 3], True), ([2, 2, 2], True)]
        for weights, expected in expectations:
            g, seeds = attach_seed_split(gen_ring(10, 3), weights)
            assert seeded_one_step_holds(g, seeds, T0) == expected
            verdict = exhaustive_one_step(g, seeds, T0, TiePolicy.GLORY)
            assert verdict.converges_from_all_states == expected


def test_one_pass_fairness():
    with budget("one-pass fairness (100 random permutations each)", 5):
        rng = random.Random(2024)
        instances = [
            attach_hub(gen_ring(10, 3), 6),
            attach_hub(gen_grid(4, 4, torus=True), 4),
        ]
        for g in instances:
            for trial in range(100):
                s0 = ALL_GNASH if trial == 0 else random_state(rng, g.n)
                sched = list(range(g.n))
                rng.shuffle(sched)
                counts = [glory_count(s0 | 1 << g.hub, g.n)]
                final = s0
                for final in schedule_states(g, s0, {g.hub}, T0, TiePolicy.GLORY, sched):
                    counts.append(glory_count(final, g.n))
                assert final == all_glory_state(g.n)
                assert counts == sorted(counts)


def test_uniform_hub_criterion_is_exact():
    with budget("uniform-hub iff vs oracle (200 random graphs)", 60):
        rng = random.Random(501)
        for _ in range(200):
            base = random_hubless(rng, n_max=10, w_max=5)
            tau = random_tau(rng, base.n, t_max=3)
            maxrest = max(base.rest_weight(v) for v in range(base.n))
            for W in range(maxrest + 3):
                hubbed = attach_hub(base, W)
                verdict = exhaustive_one_step(hubbed, {hubbed.hub}, tau, TiePolicy.GLORY)
                assert uniform_one_step_holds(base, W, tau) == verdict.converges_from_all_states


def test_seeded_criterion_is_exact():
    with budget("seeded iff vs oracle (200 random pairs)", 60):
        rng = random.Random(502)
        for _ in range(200):
            g = random_hubless(rng, n_max=10, w_max=5)
            seeds = random_seeds(rng, g.n)
            tau = random_tau(rng, g.n, t_max=3)
            verdict = exhaustive_one_step(g, seeds, tau, TiePolicy.GLORY)
            assert seeded_one_step_holds(g, seeds, tau) == verdict.converges_from_all_states


def test_property_suite():
    cases = 500
    with budget(f"property suite (7 properties x {cases} cases)", 60):
        rng = random.Random(503)

        for _ in range(cases):  # score conservation
            g = random_hubbed(rng, n_max=8, selfloops=True)
            s = random_state(rng, g.n)
            seeds = random_seeds(rng, g.n)
            for v in range(g.n):
                sg, sn = scores(g, s, seeds, v)
                assert sg + sn == g.total_in(v)

        for _ in range(cases):  # majority-form equivalence
            g = random_hubbed(rng, n_max=8, selfloops=True)
            s = random_state(rng, g.n)
            tau = random_tau(rng, g.n)
            for v in range(g.n):
                assert next_state_majority(g, s, tau, v) == next_state(
                    g, s, {g.hub}, tau, TiePolicy.GLORY, v
                )

        for _ in range(cases):  # state monotonicity of scores and updates
            g = random_hubbed(rng, n_max=8, selfloops=True)
            s = random_state(rng, g.n)
            t = s | random_state(rng, g.n)
            seeds = random_seeds(rng, g.n)
            tau = random_tau(rng, g.n)
            for v in range(g.n):
                assert scores(g, s, seeds, v)[0] <= scores(g, t, seeds, v)[0]
                assert scores(g, s, seeds, v)[1] >= scores(g, t, seeds, v)[1]
                for policy in (TiePolicy.GLORY, TiePolicy.GNASH):
                    if next_state(g, s, seeds, tau, policy, v):
                        assert next_state(g, t, seeds, tau, policy, v)

        for _ in range(cases):  # tolerance monotonicity
            g = random_hubbed(rng, n_max=8)
            tau = random_tau(rng, g.n)
            hi = Tolerance({v: tau[v] + rng.randint(0, 3) for v in range(g.n)})
            assert tolerance_monotonicity_check(g, tau, hi)

        for _ in range(cases):  # scores under all-Gnash initialization
            g = random_hubbed(rng, n_max=8, selfloops=True)
            seeds = random_seeds(rng, g.n)
            for v in range(g.n):
                if v not in seeds:
                    assert scores(g, ALL_GNASH, seeds, v) == g.seed_masses(seeds, v)

        for _ in range(cases):  # bound chain
            g = random_hubbed(rng, n_max=8, selfloops=True)
            rep = threshold_report(g, random_tau(rng, g.n))
            assert rep.maxneed <= rep.maxrest <= rep.pointwise_bound <= rep.classical_bound

        for _ in range(cases):  # per-node / aggregated threshold equivalence
            g = random_hubbed(rng, n_max=8)
            tau = random_tau(rng, g.n)
            maxrest = max(g.rest_weight(v) for v in range(g.n) if v != g.hub)
            for W in range(maxrest + 3):
                per_node = all(
                    W + tau[v] >= g.rest_weight(v) for v in range(g.n) if v != g.hub
                )
                assert uniform_one_step_holds(g, W, tau) == per_node
