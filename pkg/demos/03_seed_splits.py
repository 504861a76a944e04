#!/usr/bin/env python3
"""Splitting a hub budget across multiple seed vertices.

A single hub of weight 5 cannot flip a ring whose vertices each carry
6 units of peer mass, but the same total budget split across two or
three seeds succeeds: seed masses add up at every target while the
opposition stays fixed.
"""
from heavenhell import (
    TiePolicy,
    Tolerance,
    attach_seed_split,
    exhaustive_one_step,
    gen_ring,
    seeded_one_step_holds,
)

base = gen_ring(10, 3)  # every vertex needs 6 units of seed mass
tau0 = Tolerance()

print("ring n=10, k=3 (rest weight 6 everywhere)")
print(f"{'split':>12} {'total':>6} {'criterion':>10} {'oracle':>7}")
for weights in ([5], [6], [3, 3], [2, 2, 2], [4, 1], [2, 2, 1]):
    g, seeds = attach_seed_split(base, weights)
    crit = seeded_one_step_holds(g, seeds, tau0)
    verdict = exhaustive_one_step(g, seeds, tau0, TiePolicy.GLORY)
    assert crit == verdict.converges_from_all_states
    label = "+".join(str(w) for w in weights)
    print(f"{label:>12} {sum(weights):>6} {str(crit):>10} {str(verdict.converges_from_all_states):>7}")

print("\nevery row: the closed-form criterion and the exhaustive check agree;")
print("a budget of 6 works however it is split, a budget of 5 never does.")
