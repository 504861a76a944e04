#!/usr/bin/env python3
"""Exact one-step thresholds on rings with k-nearest neighbours.

Every vertex of the ring receives 2k unit-weight edges, so the largest
inbound "rest" mass is 2k and a uniform hub needs exactly W = 2k to
flip the whole ring in one synchronous step.  The closed form and the
exhaustive oracle are computed independently and must agree.
"""
from heavenhell import (
    ALL_GNASH,
    TiePolicy,
    Tolerance,
    attach_hub,
    gen_ring,
    is_all_glory,
    max_need,
    oracle_threshold_search,
    sync_step,
    uniform_one_step_holds,
)

N = 10
tau0 = Tolerance()

print(f"rings on n={N} vertices, tolerance 0")
print(f"{'k':>3} {'closed form':>12} {'oracle':>7}")
for k in (1, 2, 3, 4):
    base = gen_ring(N, k)
    closed = max_need(base, tau0)
    found = oracle_threshold_search(base, 2 * k + 2, tau0)
    print(f"{k:>3} {closed:>12} {found:>7}")
    assert closed == found == 2 * k

# ── the knife edge at W = 2k ──────────────────────────────────────────────

base = gen_ring(N, 3)
print("\nring k=3: one step from all-Gnash under a uniform hub")
for W in (5, 6):
    g = attach_hub(base, W)
    out = sync_step(g, ALL_GNASH, {g.hub}, tau0, TiePolicy.GLORY)
    verdict = "all-Glory" if is_all_glory(out, g.n) else "stuck"
    print(f"  W={W}: {verdict}  (closed form says {uniform_one_step_holds(base, W, tau0)})")

# ── tolerances lower the requirement one-for-one ──────────────────────────

print("\nring k=2 with uniform tolerance t: threshold 4 - t, floored at 0")
for t in range(6):
    tau = Tolerance.uniform(t, N)
    found = oracle_threshold_search(gen_ring(N, 2), 6, tau)
    print(f"  t={t}: oracle threshold {found}")
    assert found == max(0, 4 - t)
