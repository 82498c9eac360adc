import json
import random
import subprocess
import sys
from pathlib import Path

from holantcsp import (CspInstance, Scalar, Signature, from_sym, make_named,
                       verdict)
from holantcsp import rewrite as R
from holantcsp import sampling as smp
from holantcsp import serialize as J
from holantcsp.cli import main, run

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def test_scalar_json():
    assert J.scalar_to_json(Scalar(3)) == "3"
    assert J.scalar_to_json(Scalar(3), prefer_int=True) == 3
    for s in (Scalar(0, 1), Scalar(1, -2) / 3):
        assert J.scalar_from_json(J.scalar_to_json(s)) == s


def test_signature_json_round_trip():
    rng = random.Random(51)
    for _ in range(20):
        f = smp.random_signature(rng, 3)
        assert J.signature_from_json(J.signature_to_json(f)) == f
    assert J.signature_to_json(from_sym([4, 2, 1, 1]), symmetric=True) == {"sym": [4, 2, 1, 1]}
    assert J.signature_from_json("ONE_3") == make_named("ONE_3")
    assert J.signature_from_json([1, 0, 0, 1]) == make_named("EQ_2")


def test_grid_csp_recipe_round_trips():
    rng = random.Random(52)
    g = smp.random_bipartite_grid(rng, 8)
    assert J.grid_from_json(json.loads(J.dumps(J.grid_to_json(g)))) == g
    inst = CspInstance(2, [(make_named("OR"), (0, 1))])
    assert J.csp_from_json(J.csp_to_json(inst)) == inst
    rec = R.h_recipe()
    back = J.recipe_from_json(json.loads(J.dumps(J.recipe_to_json(rec))))
    assert R.replay(back) == R.replay(rec)


def test_verdict_json_shapes():
    out = J.verdict_to_json(verdict(from_sym([0, 1, 1, 1])))
    assert out["verdict"] == "Hard" and "failing_sigma" in out["evidence"]
    out = J.verdict_to_json(verdict(Signature([0, 0, 0, 0, 1, 2, 3, 4])))
    assert out["verdict"] == "Tractable" and "dup" in out["evidence"]
    out = J.verdict_to_json(verdict(make_named("EQ_3")))
    assert out["verdict"] == "Unresolved" and "membership" in out["evidence"]


def test_cli_examples():
    r = run(["classify", "--sig", '{"sym":[0,1,1,1]}'])
    assert r.exit_code == 0 and r.payload["verdict"] == "Hard"
    assert "failing_sigma" in r.payload["evidence"]
    assert run(["sym", "--sig", "ONE_3"]).payload == {"sym": [4, 2, 1, 1]}
    assert run(["sym", "--sig", "ONE_3", "--closed"]).payload == {"sym": [4, 2, 1, 1]}
    assert run(["eval", "--csp", str(DATA / "or.json")]).payload == "3"
    assert run(["eval", "--csp", str(DATA / "or.json"), "--direct"]).payload == "3"


def test_cli_subcommands():
    assert run(["syml", "--sig", "[0,0,0,0,1,2,3,4]", "--cap", "[0,1]"]).payload == {"sym": [5, 11, 25]}
    r = run(["syml", "--sig", "ONE_3", "--eps", "1", "--sigma", "2,1,3"])
    assert r.exit_code == 0
    r = run(["witness", "--sig", "[0,-1,0,1,-1,0,-1,0]"])
    assert r.payload == {"sigma": [1, 2, 3], "epsilon": 2, "g": {"sym": [5, 3, 5]}}
    r = run(["solve", "--grid", J.dumps(J.grid_to_json(smp.chain_grid(50))), "--trace"])
    assert r.payload["value"] == "50" and r.payload["trace"]
    r = run(["transform", "--sig", "EQ_2", "--matrix", "[[1,1],[1,-1]]"])
    assert r.payload == {"arity": 2, "values": [2, 0, 0, 2]}
    assert run(["gadget", "replay", "--recipe", "h"]).payload == {"arity": 2, "values": [0, 5, 5, 6]}
    assert run(["gadget", "verify", "--recipe", "sym"]).payload["ok"] is True


def test_cli_verify_suite():
    r = run(["verify", "closed-forms", "--samples", "5"])
    assert r.exit_code == 0 and r.payload["failed"] == 0 and r.payload["passed"] == 5


def test_cli_errors():
    assert run([]).exit_code == 2
    assert run(["frobnicate"]).exit_code == 2
    assert run(["syml", "--sig", "ONE_3", "--eps", "1", "--sigma", "1,1,2"]).exit_code == 2
    assert run(["eval", "--grid", "/no/such/file.json"]).exit_code == 2
    r = run(["sym", "--sig", "EQ_2"])
    assert r.exit_code == 1 and r.payload["error"] == "ArityMismatch"
    r = run(["witness", "--sig", "EQ_3"])
    assert r.exit_code == 1 and r.payload["error"] == "PreconditionViolated"
    r = run(["transform", "--sig", "EQ_2", "--matrix", "[[1,2],[2,4]]"])
    assert r.exit_code == 0     # signature transforms do not need an inverse
    bad_grid = '{"nodes":[{"id":0,"sig":"EQ_2"}],"edges":[]}'
    assert run(["eval", "--grid", bad_grid]).payload["error"] == "MalformedGrid"
    assert run(["--help"]).exit_code == 0


def test_cli_is_deterministic():
    args = ["classify", "--sig", "[1,2,3,4,5,6,7,8]"]
    assert J.dumps(run(args).payload) == J.dumps(run(args).payload)


def test_cli_output_feeds_back_in():
    grid = J.dumps(J.grid_to_json(smp.random_bipartite_grid(random.Random(53), 6)))
    moved = run(["transform", "--grid", grid, "--matrix", "[[1,1],[1,-1]]"]).payload
    a = run(["eval", "--grid", grid]).payload
    b = run(["eval", "--grid", J.dumps(moved)]).payload
    assert Scalar.parse(a) == Scalar.parse(b)


def test_main_streams(capsys):
    assert main(["sym", "--sig", "ONE_3"]) == 0
    assert json.loads(capsys.readouterr().out) == {"sym": [4, 2, 1, 1]}
    assert main(["sym", "--sig", "EQ_2"]) == 1
    err = capsys.readouterr().err
    assert json.loads(err)["error"] == "ArityMismatch"


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "holantcsp.cli", "sym", "--sig", "ONE_3"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout) == {"sym": [4, 2, 1, 1]}
