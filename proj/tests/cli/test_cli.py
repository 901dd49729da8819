import json
import subprocess

import pytest


def run(pjp_bin, *args, stdin=None):
    return subprocess.run([pjp_bin, *args], capture_output=True, text=True, input=stdin, timeout=300)


def test_help_lists_flags(pjp_bin):
    r = run(pjp_bin, "jacobi", "--help")
    assert r.returncode == 0
    for flag in ["--rs", "--scale", "--I", "--k", "--lambda", "--method", "--format", "--out"]:
        assert flag in r.stdout
    r = run(pjp_bin, "verify", "--help")
    for flag in ["--suite", "--kset", "--jobs", "--box"]:
        assert flag in r.stdout


@pytest.mark.parametrize(
    "args, code, fragment",
    [
        (["jacobi", "--rs", "Z9"], "UnsupportedType", "unsupported root system"),
        (["jacobi", "--rs", "A2", "--k", "1/0", "--lambda", "0,0"], "InvalidInput", "malformed rational"),
        (["jacobi", "--rs", "A2", "--lambda", "1"], "InvalidInput", "coordinates"),
        (["jacobi", "--rs", "A2", "--I", "3", "--lambda", "0,0"], "InvalidInput", "out of range"),
        (["jacobi", "--rs", "A2", "--I", "2", "--lambda", "0,-1"], "NotIDominant", ""),
        (["jacobi", "--rs", "A2", "--lambda", "0,0", "--format", "pdf"], "InvalidInput", "format"),
        (["jacobi", "--rs", "A2", "--lambda", "0,0", "--method", "gs", "--k", "1/2"], "NonIntegerMultiplicity", ""),
        (["verify", "--suite", "nope"], "InvalidInput", "unknown suite"),
        (["frobnicate"], "InvalidInput", ""),
    ],
)
def test_malformed_input_exits_2(pjp_bin, args, code, fragment):
    r = run(pjp_bin, *args)
    assert r.returncode == 2
    assert r.stdout == ""
    err = json.loads(r.stderr)
    assert err["error"] == code
    assert fragment in err["detail"]


def test_gens_text(pjp_bin):
    r = run(pjp_bin, "gens", "--rs", "A2", "--I", "2", "--format", "text")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[:3] == ["phi_e = 1", "phi_s1 = e^(-w1+w2) + e^(-w2)", "phi_s2*s1 = e^(-w1)"]


def test_jacobi_a1(pjp_bin):
    r = run(pjp_bin, "jacobi", "--rs", "A1", "--I", "1", "--k", "1", "--lambda", "2", "--format", "text")
    assert r.returncode == 0
    assert r.stdout == "p_I(2w1) = e^(-2w1) + 1 + e^(2w1)\n"
    r = run(pjp_bin, "jacobi", "--rs", "A1", "--I", "1", "--k", "1", "--lambda", "2", "--method", "both")
    doc = json.loads(r.stdout)
    assert {t["coeff"] for t in doc["terms"]} == {"1/1"}


def test_deterministic_output(pjp_bin):
    args = ["jacobi", "--rs", "A2", "--I", "2", "--k", "5/3", "--lambda", "-1,1"]
    assert run(pjp_bin, *args).stdout == run(pjp_bin, *args).stdout
    v1 = run(pjp_bin, "verify", "--suite", "1,2,11", "--box", "2", "--jobs", "1")
    v3 = run(pjp_bin, "verify", "--suite", "1,2,11", "--box", "2", "--jobs", "3")
    assert v1.returncode == v3.returncode == 0
    assert v1.stdout == v3.stdout


def test_out_file(pjp_bin, tmp_path):
    target = tmp_path / "e.json"
    r = run(pjp_bin, "epoly", "--rs", "A1", "--k", "2", "--lambda", "-1", "--out", str(target))
    assert r.returncode == 0 and r.stdout == ""
    doc = json.loads(target.read_text())
    assert {t["coeff"] for t in doc["terms"]} == {"1/1", "2/3"}


def test_opapply_reads_vec_output(pjp_bin, tmp_path):
    target = tmp_path / "v.json"
    common = ["--rs", "A2", "--scale", "2", "--I", "2", "--k", "2"]
    assert run(pjp_bin, "vec", *common, "--lambda", "1,0", "--out", str(target)).returncode == 0
    r = run(pjp_bin, "opapply", *common, "--op", "M2", "--input", str(target), "--check")
    assert r.returncode == 0
    via_stdin = run(pjp_bin, "opapply", *common, "--op", "M2", "--input", "-", stdin=target.read_text())
    assert via_stdin.stdout == r.stdout
    # P_I is an eigenvector: the result is a scalar multiple of the input
    v = json.loads(target.read_text())
    out = json.loads(r.stdout)
    assert [[t["exp"] for t in c["terms"]] for c in out["components"]] == [
        [t["exp"] for t in c["terms"]] for c in v["components"]
    ]


def test_mvop_json(pjp_bin):
    r = run(pjp_bin, "mvop", "--rs", "A2", "--I", "2", "--k", "1", "--lambda", "-1,0", "--sigma", "0")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert [c[0]["terms"] for c in doc["script_p"]][1] == []
    assert len(doc["mvop"]) == 3 and len(doc["labels"]) == 3


def test_verify_exit_codes(pjp_bin):
    assert run(pjp_bin, "verify", "--suite", "steinberg", "--box", "3").returncode == 0
    r = run(pjp_bin, "verify", "--suite", "operators", "--kset", "1,2", "--box", "2", "--format", "json")
    assert r.returncode == 1
    doc = json.loads(r.stdout)
    by_id = {c["id"]: c["pass"] for c in doc["criteria"]}
    assert by_id == {7: True, 8: False}
