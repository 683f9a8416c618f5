"""End-to-end CLI behaviour: formats, exit codes, determinism."""

import io
import json

from collatzlab.cli import main


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_traj_text_and_verbose():
    code, text = run(["traj", "6"])
    assert code == 0
    assert text.startswith("6 3 10 5 16 8 4 2 1 | steps=8 peak=16")
    code, text = run(["traj", "6", "--verbose"])
    assert code == 0
    assert "10(101)" in text  # decimal alongside base 3


def test_traj_csv():
    code, text = run(["traj", "5", "--format", "csv"])
    assert code == 0
    assert text.splitlines()[:3] == ["step,value", "0,5", "1,16"]


def test_verify_json_and_exit_codes():
    code, text = run(["verify", "--claim", "L.10-11", "--range", "1..50"])
    assert code == 0
    data = json.loads(text)
    assert data["pass"] == 50 and data["fail"] == 0
    assert "wall_ms" not in data
    # a claim with verified findings exits 1
    code, text = run(["verify", "--claim", "T.edge-loop", "--range", "2..10"])
    assert code == 1
    assert json.loads(text)["fail"] > 0


def test_verify_csv_format():
    code, text = run(["verify", "--claim", "L.10-11", "--range", "1..5",
                      "--format", "csv"])
    assert code == 0
    assert text.splitlines() == ["claim_id,model,lo,hi,pass,fail,skipped",
                                 "L.10-11,M1,1,5,5,0,0"]


def test_verify_unknown_claim_is_usage_error():
    code, _ = run(["verify", "--claim", "L.bogus", "--range", "1..5"])
    assert code == 2


def test_verify_timing_flag_adds_wall_ms():
    code, text = run(["verify", "--claim", "L.10-11", "--range", "1..5",
                      "--timing"])
    assert code == 0
    assert "wall_ms" in json.loads(text)


def test_verify_is_deterministic():
    argv = ["verify", "--claim", "T.succ1,L.02-11,T.node-loop",
            "--range", "1..200"]
    _, first = run(argv)
    _, second = run(argv)
    assert first == second


def test_reach():
    code, text = run(["reach", "--model", "ms", "--from", "7", "--to", "1"])
    assert code == 0
    assert text.strip() == "7 -F-> 2 -B-> 1"
    code, text = run(["reach", "--model", "ms", "--from", "2", "--to", "7"])
    assert code == 1
    assert "unreachable" in text


def test_cycles():
    code, text = run(["cycles", "--model", "m0", "--max", "1000"])
    assert code == 0
    assert text == "1 4 2\n"


def test_stats():
    code, text = run(["stats", "--range", "27..27"])
    assert code == 0
    assert text.splitlines() == ["n,steps,peak", "27,111,9232"]


def test_dot():
    code, text = run(["dot", "--model", "ms", "--max", "8"])
    assert code == 0
    assert text.startswith("digraph collatz {")
    assert '4 -> 1 [label="F", color="red"];' in text


def test_deloop():
    code, text = run(["deloop", "--max", "100"])
    assert code == 0
    data = json.loads(text)
    assert data["phase3_matches_m0"] is True
    assert "wall_ms" not in data


def test_cluster():
    code, text = run(["cluster", "--kind", "five", "--k", "1..5"])
    assert code == 0
    assert json.loads(text)["fail"] == 0


def test_bad_usage():
    code, _ = run(["verify", "--range", "10..2"])
    assert code == 2
    code, _ = run(["traj", "-3"])
    assert code == 2
    code, _ = run(["nope"])
    assert code == 2
