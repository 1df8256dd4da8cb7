#!/usr/bin/env python3
# Runs the eaqecc binary through its commands and checks exit codes,
# CSV headers, determinism and the JSON schemas.
#   cli_test.py <eaqecc> <schema dir>

import csv
import io
import json
import os
import subprocess
import sys
import tempfile

BINARY = sys.argv[1]
SCHEMAS = sys.argv[2]
SKIP_SCHEMA = os.environ.get("EAQECC_SKIP_SCHEMA") == "1"

if not SKIP_SCHEMA:
    import jsonschema

failures = []


def run(*args):
    p = subprocess.run([BINARY, *args], capture_output=True, text=True, timeout=60)
    return p.returncode, p.stdout, p.stderr


def check(ok, what):
    print(("ok   " if ok else "FAIL ") + what)
    if not ok:
        failures.append(what)


def validate(doc, schema_name, what):
    if SKIP_SCHEMA:
        return
    with open(os.path.join(SCHEMAS, schema_name + ".schema.json")) as f:
        schema = json.load(f)
    try:
        jsonschema.validate(doc, schema)
        check(True, what + " matches " + schema_name)
    except jsonschema.ValidationError as e:
        check(False, what + " matches " + schema_name + ": " + e.message)


def json_command(args, schema):
    code, out, err = run(*args, "--format", "json")
    what = " ".join(args)
    check(code == 0, what + " exits 0 (" + err.strip() + ")")
    doc = json.loads(out) if code == 0 else {}
    validate(doc, schema, what)
    return doc.get("payload", {})


def csv_header(args, header):
    code, out, _ = run(*args, "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    check(code == 0 and rows and rows[0] == header, " ".join(args) + " csv header " + ",".join(header))
    return rows


def error_case(args, exit_code, kind):
    code, out, err = run(*args)
    what = " ".join(args)
    check(code == exit_code, f"{what} exits {exit_code} (got {code})")
    try:
        doc = json.loads(err)
    except json.JSONDecodeError:
        check(False, what + " writes error JSON to stderr")
        return {}
    check(doc["error"]["kind"] == kind, f"{what} error kind {kind}")
    check(out == "", what + " writes nothing to stdout")
    validate(doc, "error", what)
    return doc["error"]


def statuses(payload):
    return {b["name"]: b["status"] for b in payload["report"]["bounds"]}


# check
p = json_command(["check", "[[12,2,6;2]]"], "check")
check(statuses(p).get("ea_griesmer") == "saturated", "[[12,2,6;2]] saturates ea_griesmer")
p = json_command(["check", "[[8,1,5;1]]", "--degenerate"], "check")
check(statuses(p).get("ea_hamming") == "violated", "degenerate [[8,1,5;1]] violates ea_hamming")
json_command(["check", "[6,3,4]_4"], "check")
csv_header(["check", "[[12,2,6;2]]"], ["bound", "status", "slack"])

# concat
p = json_command(["concat", "[[6,3,3;2]]", "[[7,3,3;1]]", "--both-orders"], "concat")
check(p["forward"]["code"]["notation"] == "[[14,3,≥3;4]]", "[[6,3,3;2]] ▷ [[7,3,3;1]] = [[14,3,≥3;4]]")
check(p["backward"]["code"]["notation"] == "[[42,9,≥9;17]]", "reverse order = [[42,9,≥9;17]]")
p = json_command(["concat", "[[5,1,3;0]]", "[[5,1,3;0]]", "--force", "2"], "concat")
check(p["forward"]["procedure"] == "non_divisible", "--force 2 selects the non-divisible procedure")
p = json_command(["concat", "[[4,2,2;1]]", "[[3,2,2;2]]", "--both-orders", "--parameters-only"], "concat")
check((p["forward"]["parameters"]["c"], p["backward"]["parameters"]["c"]) == (5, 7), "parameter-level ebits (5, 7)")
check(p["inputs"][1]["broken_invariants"] != [], "[[3,2,2;2]] reports a broken invariant")
csv_header(["concat", "[[6,3,3;2]]", "[[7,3,3;1]]"],
           ["direction", "outer", "inner", "result", "procedure", "n", "k", "d", "c"])

# pseudothreshold
p = json_command(["pseudothreshold", "--outer", "rep3132", "--inner", "five13"], "pseudothreshold")
check(abs(p["pseudothreshold"] - 0.2284) <= 5e-4, "rep3132 ▷ five13 pseudothreshold near 0.2284")
p = json_command(["pseudothreshold", "--outer", "five13", "--inner", "four131"], "pseudothreshold")
check(abs(p["pseudothreshold"] - 0.1877) <= 5e-4, "five13 ▷ four131 pseudothreshold near 0.1877")
p = json_command(["pseudothreshold", "--outer", "rep3132"], "pseudothreshold")
check(p["pseudothreshold"] is None, "rep3132 alone has no pseudothreshold below 1/2")
with tempfile.TemporaryDirectory() as tmp:
    poly = os.path.join(tmp, "poly.json")
    with open(poly, "w") as f:
        json.dump([0, 0, 10, -20, 15, "-4/1"], f)
    p = json_command(["pseudothreshold", "--poly-file", poly], "pseudothreshold")
    check(abs(p["pseudothreshold"] - 0.1311231479) <= 1e-6, "poly-file five13 pseudothreshold")
    with open(poly, "w") as f:
        f.write("[0, 1,")
    error_case(["pseudothreshold", "--poly-file", poly], 1, "parse_error")
csv_header(["pseudothreshold", "--outer", "five13"], ["polynomial", "pseudothreshold"])

# scan-eahb
p = json_command(["scan-eahb", "--outer-family", "rep_even", "--inner", "C4"], "scan-eahb")
check(p["onset"] == 52, "rep_even ▷ C4 onset 52")
p = json_command(["scan-eahb", "--outer-family", "rep_odd", "--inner", "C1", "--reversed"], "scan-eahb")
check(p["onset"] is None and all(r["status"] == "satisfied" for r in p["rows"]), "reversed scan never violates")
csv_header(["scan-eahb", "--outer-family", "rep_odd", "--inner", "C1", "--n-max", "9"],
           ["n", "notation", "sphere_count", "budget", "verdict", "phi"])

# family
p = json_command(["family", "rep_odd", "--n-max", "9"], "family")
check([m["code"]["notation"] for m in p["members"]][:2] == ["[[3,1,3;2]]", "[[5,1,5;4]]"], "rep_odd members")
json_command(["family", "C1"], "family")
csv_header(["family", "rep_even", "--n-max", "8"], ["n", "notation", "degeneracy"])

# table1
p = json_command(["table1"], "table1")
check([r["code"] for r in p["rows"]][0] == "[[9,1,≥9;8]]", "table1 first row")
check(any(r["note"] for r in p["rows"]), "table1 carries the r_n note")
csv_header(["table1"], ["code", "construction", "r", "r_e", "r_n", "delta", "note"])

# curve
p = json_command(["curve", "--outer", "five13", "--steps", "11"], "curve")
check(len(p["points"]) == 11, "curve has 11 points")
csv_header(["curve", "--outer", "five13", "--steps", "3"], ["p", "p_L"])

# errors
e = error_case(["check", "[[12,2,6;2"], 1, "parse_error")
check("position" in e, "parse error carries a position")
error_case(["check", "[[4,2,2;3]]"], 1, "invariant_violation")
error_case(["concat", "[[4,2,2;1]]", "[[3,2,2;2]]"], 1, "invariant_violation")
error_case(["check"], 2, "usage_error")
error_case(["frobnicate"], 2, "usage_error")
error_case(["pseudothreshold"], 2, "usage_error")
error_case(["concat", "[[5,1,3;0]]", "[[5,1,3;0]]", "--force", "3"], 2, "usage_error")
error_case(["family", "no_such_family"], 1, "precondition_failure")
code, out, _ = run("--help")
check(code == 0 and "Usage" in out, "--help exits 0")

# determinism
for args in (["scan-eahb", "--outer-family", "rep_even", "--inner", "C2", "--format", "json"],
             ["table1", "--format", "csv"],
             ["pseudothreshold", "--outer", "four131", "--inner", "five13"]):
    first, second = run(*args), run(*args)
    check(first == second, " ".join(args) + " is byte-identical across runs")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
