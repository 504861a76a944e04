"""Command-line front end (installed as ``hh``).

Subcommands: generate, threshold, simulate, sweep, oracle.  Human
output is aligned text; machine output is CSV (sweeps, traces) or JSON
(reports), switched by --format.  All CSV files start with a versioned
comment line so downstream consumers can refuse stale schemas.  The
only randomness (BA generation, sampled sweeps, schedule shuffles) is
driven by explicit --seed flags, so outputs are byte-stable.
"""
from __future__ import annotations

import argparse
import csv
import json
import random
import sys

from .dynamics import (
    ALL_GNASH,
    TiePolicy,
    all_glory_state,
    force_seed,
    glory_count,
    run_sync,
    schedule_states,
    state_from_literal,
    state_to_literal,
    sync_step,
)
from .generators import GenSpec, attach_hub, attach_seed_split, gen_adversarial_hetero
from .graph import (
    GraphFormatError,
    Tolerance,
    format_graph_text,
    load_graph,
)
from .oracle import CAPACITY, CapacityError, exhaustive_one_step
from .thresholds import max_need, seeded_one_step_holds, threshold_report

CSV_VERSION = "hh-csv v1"

_POLICIES = {p.value: p for p in TiePolicy}


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip() != ""]


def _split_list(text: str) -> list[list[int]]:
    return [_int_list(part) for part in text.split("|")]


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def _write_csv(path: str | None, kind: str, header: list[str], rows) -> None:
    fh, close = _open_out(path)
    try:
        fh.write(f"# {CSV_VERSION} {kind}\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    finally:
        if close:
            fh.close()


def _effective_tau(file_tau: Tolerance, override: int | None, n: int) -> Tolerance:
    if override is None:
        return file_tau
    return Tolerance.uniform(override, n)


def _parse_state(text: str, n: int) -> int:
    if text == "all-gnash":
        return ALL_GNASH
    if text == "all-glory":
        return all_glory_state(n)
    if len(text) != n:
        raise ValueError(f"state literal has length {len(text)}, graph has n={n}")
    return state_from_literal(text)


# ---- generate ----------------------------------------------------------------


def _add_family_args(p: argparse.ArgumentParser, families: tuple[str, ...]) -> None:
    if "ring" in families or "ba" in families:
        p.add_argument("--n", type=int, help="vertex count (ring, ba)")
    if "ring" in families:
        p.add_argument("--k", type=int, help="ring nearest-neighbour radius")
    if "grid" in families:
        p.add_argument("--rows", type=int)
        p.add_argument("--cols", type=int)
        p.add_argument("--torus", action="store_true")
    if "ba" in families:
        p.add_argument("--m", type=int, help="attachments per new vertex (ba)")


def _spec_from_args(args, family: str) -> GenSpec:
    if family == "ring":
        if args.n is None or args.k is None:
            raise ValueError("ring requires --n and --k")
        return GenSpec("ring", n=args.n, k=args.k)
    if family == "grid":
        if args.rows is None or args.cols is None:
            raise ValueError("grid requires --rows and --cols")
        return GenSpec("grid", rows=args.rows, cols=args.cols, torus=args.torus)
    if family == "ba":
        if args.n is None or args.m is None:
            raise ValueError("ba requires --n and --m")
        return GenSpec("barabasi_albert", n=args.n, m=args.m, seed=getattr(args, "seed", 0) or 0)
    if family == "adversarial":
        return GenSpec(
            "adversarial_hetero",
            fan_in=args.fan_in,
            light_w=args.light_w,
            heavy_w=args.heavy_w,
        )
    raise ValueError(f"unknown family {family!r}")


def cmd_generate(args) -> int:
    spec = _spec_from_args(args, args.family)
    base = spec.build_base()
    if args.split is not None:
        G, seeds = attach_seed_split(base, _int_list(args.split))
        info = f"n={G.n} seeds={','.join(str(s) for s in sorted(seeds))}"
    else:
        G = attach_hub(base, args.hub_w)
        info = f"n={G.n} hub={G.hub}"
    text = format_graph_text(G)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(info)
    else:
        sys.stdout.write(text)
        print(info, file=sys.stderr)
    return 0


# ---- threshold ----------------------------------------------------------------


def cmd_threshold(args) -> int:
    G, file_tau = load_graph(args.graph)
    tau = _effective_tau(file_tau, args.tau, G.n)
    rep = threshold_report(G, tau)
    ratio = rep.classical_bound / rep.pointwise_bound if rep.pointwise_bound else float("inf")
    if args.format == "json":
        payload = {"format": "hh-report v1", **rep.as_dict()}
        if not args.per_node:
            payload.pop("per_node")
        print(json.dumps(payload, indent=2))
        return 0
    print(f"maxrest          {rep.maxrest}")
    print(f"maxneed          {rep.maxneed}")
    print(f"pointwise bound  {rep.pointwise_bound}")
    print(f"classical bound  {rep.classical_bound}")
    print(f"classical/pointwise ratio  {ratio:g}")
    if args.per_node:
        print(f"{'v':>6} {'rest':>8} {'tau':>5} {'need':>8} {'indeg':>6} {'max_in':>7}")
        for row in rep.per_node:
            print(
                f"{row.vertex:>6} {row.rest_weight:>8} {row.tolerance:>5} "
                f"{row.need:>8} {row.indeg:>6} {row.max_in:>7}"
            )
    return 0


# ---- simulate -----------------------------------------------------------------


def cmd_simulate(args) -> int:
    G, file_tau = load_graph(args.graph)
    tau = _effective_tau(file_tau, args.tau, G.n)
    seeds = frozenset(_int_list(args.seeds)) if args.seeds else frozenset((G.hub,))
    policy = _POLICIES[args.policy]
    s0 = _parse_state(args.state, G.n)
    n = G.n

    rows: list[tuple] = []
    reached: int | None = None
    if args.mode == "sync":
        cur = s0
        rows.append(("sync", 0, "", glory_count(cur, n), f"{glory_count(cur, n) / n:.6g}", state_to_literal(cur, n)))
        if cur == all_glory_state(n):
            reached = 0
        for step in range(1, args.max_steps + 1):
            nxt = sync_step(G, cur, seeds, tau, policy)
            if nxt == cur:
                break
            cur = nxt
            rows.append(("sync", step, "", glory_count(cur, n), f"{glory_count(cur, n) / n:.6g}", state_to_literal(cur, n)))
            if reached is None and cur == all_glory_state(n):
                reached = step
        unit = "step"
    else:
        if args.schedule == "random":
            rng = random.Random(args.seed)
            sched = list(range(n))
            rng.shuffle(sched)
        else:
            sched = _int_list(args.schedule)
        cur = force_seed(s0, seeds)
        rows.append(("schedule", 0, "", glory_count(cur, n), f"{glory_count(cur, n) / n:.6g}", state_to_literal(cur, n)))
        if cur == all_glory_state(n):
            reached = 0
        for visit, (v, cur) in enumerate(zip(sched, schedule_states(G, s0, seeds, tau, policy, sched)), 1):
            rows.append(("schedule", visit, v, glory_count(cur, n), f"{glory_count(cur, n) / n:.6g}", state_to_literal(cur, n)))
            if reached is None and cur == all_glory_state(n):
                reached = visit
        unit = "visit"

    if args.format == "csv":
        _write_csv(args.output, "trace", ["mode", "step", "vertex", "glory_count", "glory_fraction", "state"], rows)
    else:
        for mode, step, vertex, count, frac, state in rows:
            at = f"{unit} {step}" + (f" (vertex {vertex})" if vertex != "" else "")
            print(f"{at:<22} glory {count}/{n} ({frac})  {state}")
        if reached is not None:
            print(f"all-Glory after {unit} {reached}")
        else:
            print(f"not all-Glory within the {unit} budget")
    return 0


# ---- sweep --------------------------------------------------------------------

UNIFORM_HEADER = [
    "family", "params", "policy", "tau", "W", "w_star", "w_over_wstar",
    "mode", "success", "trials", "steps_from_all_gnash",
]


def cmd_sweep_uniform(args) -> int:
    spec = _spec_from_args(args, args.family)
    base = spec.build_base()
    tau = Tolerance.uniform(args.tau, base.n) if args.tau else Tolerance()
    policy = _POLICIES[args.policy]
    w_star = max_need(base, tau)
    exact = base.n + 1 <= CAPACITY
    rng = random.Random(args.seed)
    rows = []
    for W in range(args.w_min, args.w_max + 1):
        hubbed = attach_hub(base, W)
        seeds = frozenset((hubbed.hub,))
        if exact:
            verdict = exhaustive_one_step(hubbed, seeds, tau, policy)
            success = "1" if verdict.converges_from_all_states else "0"
            mode, trials = "exact", ""
        else:
            hits = 0
            for _ in range(args.trials):
                s0 = rng.getrandbits(hubbed.n)
                if sync_step(hubbed, s0, seeds, tau, policy) == all_glory_state(hubbed.n):
                    hits += 1
            success = f"{hits / args.trials:.6g}"
            mode, trials = "sampled", str(args.trials)
        _, steps = run_sync(hubbed, ALL_GNASH, seeds, tau, policy, max_steps=2 * hubbed.n)
        rows.append((
            spec.family, spec.describe(), policy.value, args.tau or 0, W, w_star,
            f"{W / w_star:.6g}" if w_star else "", mode, success, trials,
            "" if steps is None else steps,
        ))
    _write_csv(args.output, "sweep-uniform", UNIFORM_HEADER, rows)
    return 0


def cmd_sweep_bounds(args) -> int:
    rows = []
    for fan_in in _int_list(args.fan_in_list):
        g = gen_adversarial_hetero(fan_in, args.light_w, args.heavy_w)
        rep = threshold_report(g, Tolerance())
        ratio = rep.classical_bound / rep.pointwise_bound
        rows.append((
            fan_in, args.light_w, args.heavy_w, rep.maxrest, rep.maxneed,
            rep.pointwise_bound, rep.classical_bound, f"{ratio:.6g}",
        ))
    _write_csv(
        args.output,
        "sweep-bounds",
        ["fan_in", "light_w", "heavy_w", "maxrest", "maxneed", "pointwise", "classical", "classical_over_pointwise"],
        rows,
    )
    return 0


def cmd_sweep_split(args) -> int:
    spec = _spec_from_args(args, args.family)
    base = spec.build_base()
    tau = Tolerance.uniform(args.tau, base.n) if args.tau else Tolerance()
    if args.splits:
        configs = [(sum(ws), ws) for ws in _split_list(args.splits)]
    else:
        budgets = _int_list(args.budget)
        hub_counts = _int_list(args.hubs)
        configs = [(b, [b // h] * h) for b in budgets for h in hub_counts]
    rows = []
    for budget, weights in configs:
        G, seeds = attach_seed_split(base, weights)
        crit = seeded_one_step_holds(G, seeds, tau)
        if G.n <= CAPACITY:
            verdict = exhaustive_one_step(G, seeds, tau, TiePolicy.GLORY)
            oracle_col = "1" if verdict.converges_from_all_states else "0"
        else:
            oracle_col = ""
        rows.append((
            spec.family, spec.describe(), budget, len(weights),
            ";".join(str(w) for w in weights),
            "1" if crit else "0", oracle_col, "1" if crit else "0",
        ))
    _write_csv(
        args.output,
        "sweep-split",
        ["family", "params", "budget", "hubs", "per_hub", "criterion_holds", "oracle_converges", "success"],
        rows,
    )
    return 0


def cmd_sweep_passes(args) -> int:
    spec = _spec_from_args(args, args.family)
    base = spec.build_base()
    G = attach_hub(base, args.hub_w)
    seeds = frozenset((G.hub,))
    tau = Tolerance.uniform(args.tau, G.n) if args.tau else Tolerance()
    policy = _POLICIES[args.policy]
    rng = random.Random(args.seed)
    n = G.n
    rows = []
    for trial in range(args.trials):
        s0 = rng.getrandbits(n) if args.init == "random" else ALL_GNASH
        sched = list(range(n))
        rng.shuffle(sched)
        cur = force_seed(s0, seeds)
        rows.append((spec.family, spec.describe(), policy.value, args.tau or 0, args.init,
                     trial, 0, "", glory_count(cur, n), f"{glory_count(cur, n) / n:.6g}"))
        for visit, (v, state) in enumerate(zip(sched, schedule_states(G, s0, seeds, tau, policy, sched)), 1):
            rows.append((spec.family, spec.describe(), policy.value, args.tau or 0, args.init,
                         trial, visit, v, glory_count(state, n), f"{glory_count(state, n) / n:.6g}"))
    _write_csv(
        args.output,
        "sweep-passes",
        ["family", "params", "policy", "tau", "init", "trial", "visit", "vertex", "glory_count", "glory_fraction"],
        rows,
    )
    return 0


# ---- oracle -------------------------------------------------------------------


def cmd_oracle(args) -> int:
    G, file_tau = load_graph(args.graph)
    tau = _effective_tau(file_tau, args.tau, G.n)
    seeds = frozenset(_int_list(args.seeds)) if args.seeds else frozenset((G.hub,))
    policy = _POLICIES[args.policy]
    verdict = exhaustive_one_step(G, seeds, tau, policy)
    if verdict.converges_from_all_states:
        print(f"converges from all initial states ({verdict.states_checked} states checked)")
        return 0
    state, vertex = verdict.witness
    print("does not converge from all initial states")
    print(f"witness state: {state_to_literal(state, G.n)}")
    print(f"failing vertex: {vertex}")
    print(f"states checked: {verdict.states_checked}")
    return 1


# ---- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hh",
        description="Forced-hub binary consensus on weighted digraphs: "
        "generators, exact thresholds, simulation, exhaustive checking.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    # generate
    p = sub.add_parser("generate", help="emit a graph file for a named family")
    p.add_argument("family", choices=("ring", "grid", "ba", "adversarial"))
    _add_family_args(p, ("ring", "grid", "ba"))
    p.add_argument("--seed", type=int, default=0, help="rng seed (ba)")
    p.add_argument("--fan-in", type=int, default=200)
    p.add_argument("--light-w", type=int, default=4)
    p.add_argument("--heavy-w", type=int, default=800)
    hubbing = p.add_mutually_exclusive_group()
    hubbing.add_argument("--hub-w", type=int, default=0, help="uniform hub weight (default 0: isolated hub)")
    hubbing.add_argument("--split", help="comma list of per-seed weights, e.g. 3,3")
    p.add_argument("-o", "--output", help="graph file (default stdout)")
    p.set_defaults(func=cmd_generate)

    # threshold
    p = sub.add_parser("threshold", help="print the threshold report for a graph file")
    p.add_argument("graph")
    p.add_argument("--tau", type=int, help="uniform tolerance override")
    p.add_argument("--per-node", action="store_true", help="include the per-node table")
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(func=cmd_threshold)

    # simulate
    p = sub.add_parser("simulate", help="trace synchronous steps or one schedule pass")
    p.add_argument("graph")
    p.add_argument("--state", default="all-gnash", help="initial state literal (G/N string), or all-gnash/all-glory")
    p.add_argument("--mode", choices=("sync", "schedule"), default="sync")
    p.add_argument("--policy", choices=tuple(_POLICIES), default="glory")
    p.add_argument("--tau", type=int, help="uniform tolerance override")
    p.add_argument("--seeds", help="comma list of seed vertices (default: the file's hub)")
    p.add_argument("--max-steps", type=int, default=64)
    p.add_argument("--schedule", default="random", help="comma list of visits, or 'random'")
    p.add_argument("--seed", type=int, default=0, help="rng seed for random schedules")
    p.add_argument("--format", choices=("human", "csv"), default="human")
    p.add_argument("-o", "--output", help="csv destination (default stdout)")
    p.set_defaults(func=cmd_simulate)

    # sweep
    p = sub.add_parser("sweep", help="emit experiment CSVs")
    ssub = p.add_subparsers(dest="sweep_kind", required=True)

    q = ssub.add_parser("uniform", help="one-step success vs uniform hub weight")
    q.add_argument("--family", choices=("ring", "grid", "ba"), required=True)
    _add_family_args(q, ("ring", "grid", "ba"))
    q.add_argument("--w-min", type=int, default=0)
    q.add_argument("--w-max", type=int, required=True)
    q.add_argument("--policy", choices=tuple(_POLICIES), default="glory")
    q.add_argument("--tau", type=int, default=0)
    q.add_argument("--trials", type=int, default=200, help="samples per W when beyond oracle capacity")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_sweep_uniform)

    q = ssub.add_parser("bounds", help="pointwise vs classical bound over fan-in")
    q.add_argument("--fan-in-list", required=True, help="comma list of fan-in values")
    q.add_argument("--light-w", type=int, default=4)
    q.add_argument("--heavy-w", type=int, default=800)
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_sweep_bounds)

    q = ssub.add_parser("split", help="seeded criterion over multi-hub budget splits")
    q.add_argument("--family", choices=("ring", "grid", "ba"), required=True)
    _add_family_args(q, ("ring", "grid", "ba"))
    q.add_argument("--seed", type=int, default=0, help="rng seed (ba)")
    q.add_argument("--budget", help="comma list of total budgets (equal split per hub count)")
    q.add_argument("--hubs", help="comma list of hub counts, with --budget")
    q.add_argument("--splits", help="explicit splits, e.g. '5|3,3|2,2,2'")
    q.add_argument("--tau", type=int, default=0)
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_sweep_split)

    q = ssub.add_parser("passes", help="Glory fraction per visit over random one-pass schedules")
    q.add_argument("--family", choices=("ring", "grid", "ba"), required=True)
    _add_family_args(q, ("ring", "grid", "ba"))
    q.add_argument("--hub-w", type=int, required=True)
    q.add_argument("--trials", type=int, default=100)
    q.add_argument("--init", choices=("all-gnash", "random"), default="all-gnash")
    q.add_argument("--policy", choices=tuple(_POLICIES), default="glory")
    q.add_argument("--tau", type=int, default=0)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_sweep_passes)

    # oracle
    p = sub.add_parser("oracle", help="exhaustively check one-step convergence of a graph file")
    p.add_argument("graph")
    p.add_argument("--seeds", help="comma list of seed vertices (default: the file's hub)")
    p.add_argument("--policy", choices=tuple(_POLICIES), default="glory")
    p.add_argument("--tau", type=int, help="uniform tolerance override")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, CapacityError, ValueError, OSError) as exc:
        print(f"hh: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
