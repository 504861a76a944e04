#!/usr/bin/env python3
"""Regenerate the four figure-panel CSVs through the hh command line.

Writes into ./figure_data (or the directory given as argv[1]).  These
are the same commands that produced frontend/golden/*.csv; the
frontend's plot tool turns each file into an SVG panel.
"""
import pathlib
import sys

from heavenhell.cli import main

out_dir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "figure_data")
out_dir.mkdir(parents=True, exist_ok=True)

panels = {
    # A: one-step success vs W/W* on a ring (exact oracle mode)
    "panel_a.csv": [
        "sweep", "uniform", "--family", "ring", "--n", "10", "--k", "2",
        "--w-min", "0", "--w-max", "8",
    ],
    # B: pointwise vs classical bound as the fan-in grows
    "panel_b.csv": [
        "sweep", "bounds", "--fan-in-list", "10,25,50,100,150,200",
    ],
    # C: equal splits of two budgets across 1..3 seed hubs
    "panel_c.csv": [
        "sweep", "split", "--family", "ring", "--n", "10", "--k", "3",
        "--budget", "5,6", "--hubs", "1,2,3",
    ],
    # D: Glory fraction per visit over random one-pass schedules
    "panel_d.csv": [
        "sweep", "passes", "--family", "ring", "--n", "10", "--k", "3",
        "--hub-w", "6", "--trials", "30", "--init", "random", "--seed", "12",
    ],
}

for name, argv in panels.items():
    path = out_dir / name
    code = main(argv + ["-o", str(path)])
    assert code == 0, f"{name} failed"
    print(f"wrote {path}")
