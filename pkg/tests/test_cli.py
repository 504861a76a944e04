import json

import pytest

from heavenhell import load_graph
from heavenhell.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGenerate:
    def test_ring_with_hub(self, tmp_path, capsys):
        out_file = tmp_path / "ring.hh"
        code, out, _ = run(
            capsys, "generate", "ring", "--n", "10", "--k", "3", "--hub-w", "6", "-o", str(out_file)
        )
        assert code == 0
        assert "n=11 hub=10" in out
        g, tau = load_graph(str(out_file))
        assert g.n == 11 and g.hub == 10
        assert all(g.hub_weight(v) == 6 for v in range(10))

    def test_grid_torus(self, tmp_path, capsys):
        out_file = tmp_path / "grid.hh"
        code, out, _ = run(
            capsys, "generate", "grid", "--rows", "4", "--cols", "4", "--torus",
            "--hub-w", "4", "-o", str(out_file),
        )
        assert code == 0
        g, _ = load_graph(str(out_file))
        assert g.n == 17

    def test_adversarial_defaults(self, tmp_path, capsys):
        out_file = tmp_path / "adv.hh"
        code, out, _ = run(capsys, "generate", "adversarial", "-o", str(out_file))
        assert code == 0
        g, _ = load_graph(str(out_file))
        assert g.n == 204

    def test_split_prints_seed_ids(self, tmp_path, capsys):
        out_file = tmp_path / "split.hh"
        code, out, _ = run(
            capsys, "generate", "ring", "--n", "10", "--k", "3", "--split", "3,3",
            "-o", str(out_file),
        )
        assert code == 0
        assert "seeds=10,11" in out

    def test_stdout_when_no_output_file(self, capsys):
        code, out, err = run(capsys, "generate", "ring", "--n", "5", "--k", "1", "--hub-w", "2")
        assert code == 0
        assert out.startswith("hh v1 6 5")
        assert "n=6 hub=5" in err

    def test_missing_flags_exit_2(self, capsys):
        code, _, err = run(capsys, "generate", "ring", "--n", "10")
        assert code == 2
        assert "error" in err


class TestThreshold:
    @pytest.fixture
    def adv_file(self, tmp_path, capsys):
        out_file = tmp_path / "adv.hh"
        run(capsys, "generate", "adversarial", "-o", str(out_file))
        return str(out_file)

    def test_human_report_with_ratio(self, adv_file, capsys):
        code, out, _ = run(capsys, "threshold", adv_file)
        assert code == 0
        assert "maxrest          800" in out
        assert "classical bound  160000" in out
        assert "ratio  200" in out

    def test_json_report(self, adv_file, capsys):
        code, out, _ = run(capsys, "threshold", adv_file, "--format", "json", "--per-node")
        assert code == 0
        payload = json.loads(out)
        assert payload["format"] == "hh-report v1"
        assert payload["maxrest"] == 800
        assert payload["classical_bound"] == 160000
        assert len(payload["per_node"]) == 203

    def test_ring_maxneed(self, tmp_path, capsys):
        out_file = tmp_path / "ring.hh"
        run(capsys, "generate", "ring", "--n", "10", "--k", "3", "--hub-w", "6", "-o", str(out_file))
        code, out, _ = run(capsys, "threshold", str(out_file))
        assert code == 0
        assert "maxneed          6" in out

    def test_tau_override(self, tmp_path, capsys):
        out_file = tmp_path / "ring.hh"
        run(capsys, "generate", "ring", "--n", "10", "--k", "3", "--hub-w", "6", "-o", str(out_file))
        code, out, _ = run(capsys, "threshold", str(out_file), "--tau", "2")
        assert "maxneed          4" in out

    def test_single_vertex_graph_diagnosed(self, tmp_path, capsys):
        f = tmp_path / "one.hh"
        f.write_text("hh v1 1 0\n")
        code, _, err = run(capsys, "threshold", str(f))
        assert code == 2
        assert "non-hub" in err

    def test_parse_error_has_line_number(self, tmp_path, capsys):
        f = tmp_path / "bad.hh"
        f.write_text("hh v1 3 0\ne 0 9 1\n")
        code, _, err = run(capsys, "threshold", str(f))
        assert code == 2
        assert "line 2" in err


class TestSimulate:
    @pytest.fixture
    def ring_file(self, tmp_path, capsys):
        out_file = tmp_path / "ring.hh"
        run(capsys, "generate", "ring", "--n", "10", "--k", "3", "--hub-w", "6", "-o", str(out_file))
        return str(out_file)

    def test_sync_one_step(self, ring_file, capsys):
        code, out, _ = run(capsys, "simulate", ring_file, "--mode", "sync")
        assert code == 0
        assert "all-Glory after step 1" in out

    def test_schedule_pass(self, ring_file, capsys):
        code, out, _ = run(capsys, "simulate", ring_file, "--mode", "schedule", "--seed", "5")
        assert code == 0
        assert "all-Glory after visit" in out

    def test_all_glory_initial_zero_steps(self, ring_file, capsys):
        code, out, _ = run(capsys, "simulate", ring_file, "--state", "all-glory")
        assert "all-Glory after step 0" in out

    def test_explicit_state_literal(self, ring_file, capsys):
        code, out, _ = run(capsys, "simulate", ring_file, "--state", "G" * 11)
        assert code == 0 and "step 0" in out

    def test_wrong_literal_length(self, ring_file, capsys):
        code, _, err = run(capsys, "simulate", ring_file, "--state", "GN")
        assert code == 2
        assert "length" in err

    def test_csv_trace(self, ring_file, capsys):
        code, out, _ = run(capsys, "simulate", ring_file, "--format", "csv")
        lines = out.splitlines()
        assert lines[0] == "# hh-csv v1 trace"
        assert lines[1] == "mode,step,vertex,glory_count,glory_fraction,state"
        assert lines[2].startswith("sync,0,,0,")  # raw initial state, forcing happens inside the step

    def test_random_schedule_deterministic(self, ring_file, capsys):
        _, out1, _ = run(capsys, "simulate", ring_file, "--mode", "schedule", "--seed", "9", "--format", "csv")
        _, out2, _ = run(capsys, "simulate", ring_file, "--mode", "schedule", "--seed", "9", "--format", "csv")
        assert out1 == out2

    def test_explicit_schedule(self, ring_file, capsys):
        sched = ",".join(str(v) for v in range(11))
        code, out, _ = run(capsys, "simulate", ring_file, "--mode", "schedule", "--schedule", sched)
        assert code == 0
        assert "all-Glory after visit" in out


class TestSweep:
    def test_uniform_ring_flips_at_threshold(self, capsys):
        code, out, _ = run(
            capsys, "sweep", "uniform", "--family", "ring", "--n", "10", "--k", "2", "--w-max", "6"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "# hh-csv v1 sweep-uniform"
        rows = [line.split(",") for line in lines[2:]]
        by_w = {int(r[4]): r[8] for r in rows}
        assert [by_w[w] for w in range(7)] == ["0", "0", "0", "0", "1", "1", "1"]

    def test_uniform_byte_stable(self, capsys):
        args = ("sweep", "uniform", "--family", "ring", "--n", "10", "--k", "2", "--w-max", "5")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2

    def test_uniform_sampled_mode_beyond_capacity(self, capsys):
        code, out, _ = run(
            capsys, "sweep", "uniform", "--family", "ring", "--n", "30", "--k", "2",
            "--w-max", "5", "--trials", "20", "--seed", "4",
        )
        assert code == 0
        rows = [line.split(",") for line in out.splitlines()[2:]]
        assert all(r[7] == "sampled" and r[9] == "20" for r in rows)
        # sampled success at W=4 from random states is a fraction in [0, 1]
        assert all(0.0 <= float(r[8]) <= 1.0 for r in rows)

    def test_bounds_sweep(self, capsys):
        code, out, _ = run(capsys, "sweep", "bounds", "--fan-in-list", "10,100,200")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "# hh-csv v1 sweep-bounds"
        rows = [line.split(",") for line in lines[2:]]
        pointwise = [int(r[5]) for r in rows]
        classical = [int(r[6]) for r in rows]
        assert pointwise == [800, 800, 800]
        assert classical == [8000, 80000, 160000]

    def test_split_sweep_explicit(self, capsys):
        code, out, _ = run(
            capsys, "sweep", "split", "--family", "ring", "--n", "10", "--k", "3",
            "--splits", "5|3,3|2,2,2",
        )
        assert code == 0
        rows = [line.split(",") for line in out.splitlines()[2:]]
        assert [r[7] for r in rows] == ["0", "1", "1"]  # success column
        assert [r[6] for r in rows] == ["0", "1", "1"]  # oracle agrees

    def test_split_sweep_budget_mode(self, capsys):
        code, out, _ = run(
            capsys, "sweep", "split", "--family", "ring", "--n", "10", "--k", "3",
            "--budget", "6", "--hubs", "1,2,3",
        )
        rows = [line.split(",") for line in out.splitlines()[2:]]
        assert [r[4] for r in rows] == ["6", "3;3", "2;2;2"]
        assert [r[7] for r in rows] == ["1", "1", "1"]

    def test_exact_sweep_agrees_with_oracle_per_point(self, tmp_path, capsys):
        _, out, _ = run(
            capsys, "sweep", "uniform", "--family", "ring", "--n", "10", "--k", "2", "--w-max", "5"
        )
        rows = [line.split(",") for line in out.splitlines()[2:]]
        for row in rows:
            w, success = int(row[4]), row[8]
            f = tmp_path / f"ring_w{w}.hh"
            run(capsys, "generate", "ring", "--n", "10", "--k", "2", "--hub-w", str(w), "-o", str(f))
            code, _, _ = run(capsys, "oracle", str(f))
            assert (code == 0) == (success == "1")

    def test_passes_sweep(self, capsys):
        code, out, _ = run(
            capsys, "sweep", "passes", "--family", "ring", "--n", "10", "--k", "3",
            "--hub-w", "6", "--trials", "5", "--seed", "2",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "# hh-csv v1 sweep-passes"
        rows = [line.split(",") for line in lines[2:]]
        assert len(rows) == 5 * 12  # trials x (initial row + 11 visits)
        for trial in range(5):
            fracs = [float(r[9]) for r in rows if r[5] == str(trial)]
            assert fracs == sorted(fracs)
            assert fracs[-1] == 1.0


class TestOracleCommand:
    def test_converging_instance_exit_0(self, tmp_path, capsys):
        f = tmp_path / "ring.hh"
        run(capsys, "generate", "ring", "--n", "10", "--k", "3", "--hub-w", "6", "-o", str(f))
        code, out, _ = run(capsys, "oracle", str(f))
        assert code == 0
        assert "1024 states checked" in out

    def test_failing_instance_exit_1_with_witness(self, tmp_path, capsys):
        f = tmp_path / "ring.hh"
        run(capsys, "generate", "ring", "--n", "10", "--k", "3", "--hub-w", "5", "-o", str(f))
        code, out, _ = run(capsys, "oracle", str(f))
        assert code == 1
        assert "witness state: " + "N" * 11 in out

    def test_capacity_exit_2(self, tmp_path, capsys):
        f = tmp_path / "big.hh"
        run(capsys, "generate", "ring", "--n", "24", "--k", "1", "--hub-w", "2", "-o", str(f))
        code, _, err = run(capsys, "oracle", str(f))
        assert code == 2
        assert "20" in err

    def test_seed_flags(self, tmp_path, capsys):
        f = tmp_path / "split.hh"
        run(capsys, "generate", "ring", "--n", "10", "--k", "3", "--split", "3,3", "-o", str(f))
        code, _, _ = run(capsys, "oracle", str(f), "--seeds", "10,11")
        assert code == 0

    def test_policy_flag(self, tmp_path, capsys):
        # knife edge: W equals rest weight, so TieGnash fails where TieGlory passes
        f = tmp_path / "edge.hh"
        run(capsys, "generate", "ring", "--n", "10", "--k", "2", "--hub-w", "4", "-o", str(f))
        assert run(capsys, "oracle", str(f))[0] == 0
        assert run(capsys, "oracle", str(f), "--policy", "gnash")[0] == 1
