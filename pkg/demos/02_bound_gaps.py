#!/usr/bin/env python3
"""How far the classical worst-case product overshoots on skewed graphs.

One vertex collects many light edges, another one heavy edge.  The
per-node deg-max bound tracks the true requirement exactly, while the
global indegree x max-weight product multiplies maxima that never
co-occur at a single vertex.
"""
from heavenhell import Tolerance, gen_adversarial_hetero, threshold_report

tau0 = Tolerance()

print("defaults: 200 edges of weight 4 into one vertex, one edge of weight 800 into another")
rep = threshold_report(gen_adversarial_hetero(), tau0)
print(f"  maxrest   (exact requirement) : {rep.maxrest}")
print(f"  pointwise deg-max bound       : {rep.pointwise_bound}")
print(f"  classical product bound       : {rep.classical_bound}")
print(f"  overshoot factor              : {rep.classical_bound // rep.pointwise_bound}x")

# ── the gap grows linearly with the fan-in ────────────────────────────────

print(f"\n{'fan_in':>7} {'maxrest':>8} {'pointwise':>10} {'classical':>10} {'factor':>7}")
for fan_in in (10, 25, 50, 100, 200):
    rep = threshold_report(gen_adversarial_hetero(fan_in, 4, 800), tau0)
    factor = rep.classical_bound / rep.pointwise_bound
    print(
        f"{fan_in:>7} {rep.maxrest:>8} {rep.pointwise_bound:>10} "
        f"{rep.classical_bound:>10} {factor:>7g}"
    )

# a scaled-down copy small enough for the exhaustive oracle to verify
from heavenhell import oracle_threshold_search

small = gen_adversarial_hetero(10, 4, 40)
rep = threshold_report(small, tau0)
found = oracle_threshold_search(small, rep.maxrest + 2, tau0)
print(f"\nscaled copy (fan_in=10, heavy=40): report maxrest {rep.maxrest}, oracle threshold {found}")
assert found == rep.maxrest
