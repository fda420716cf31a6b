"""End-to-end checks of the rank2km CLI: exit codes, documented examples,
schema validity of every JSON record, and the roots -> classify round trip.

usage: cli_contract.py <rank2km binary> <schema dir>
"""

import csv
import io
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BIN, SCHEMA_DIR = sys.argv[1], sys.argv[2]

failures = []


def expect(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL:", what, file=sys.stderr)


def load_schema(name):
    with open(os.path.join(SCHEMA_DIR, name + ".schema.json")) as f:
        schema = json.load(f)
    jsonschema.Draft7Validator.check_schema(schema)
    return jsonschema.Draft7Validator(schema)


VALIDATORS = {n: load_schema(n) for n in
              ("root", "classify", "commutator", "subsystem", "verify", "signs")}


def run(*args):
    p = subprocess.run([BIN, *map(str, args)], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def valid(kind, record, ctx):
    errs = list(VALIDATORS[kind].iter_errors(record))
    expect(not errs, f"{ctx}: {kind} schema: {errs[0].message if errs else ''}")


def json_cmd(kind, *args, code=0):
    rc, out, err = run(*args)
    expect(rc == code, f"{args}: exit {rc} (want {code}) {err.strip()}")
    if rc not in (0, 1):
        return None
    rec = json.loads(out)
    valid(kind, rec, args)
    expect(rec.get("schema") == f"rank2km.{kind}/1", f"{args}: schema tag")
    return rec


def ab(a, b):
    return ["--a", a, "--b", b]


# roots, schema, and the round trip through classify
for a, b in [(5, 1), (4, 1), (2, 2), (3, 2), (1, 5), (5, 5), (9, 1)]:
    rc, out, err = run("roots", *ab(a, b), "--max-index", 5)
    expect(rc == 0, f"roots {a},{b}: exit {rc}")
    lines = out.splitlines()
    expect(len(lines) == 4 * 11, f"roots {a},{b}: {len(lines)} lines")
    for line in lines:
        rec = json.loads(line)
        valid("root", rec, f"roots {a},{b}")
        expect(rec["a"] == a and rec["b"] == b, "roots carry a, b")
        c = json_cmd("classify", "classify", *ab(a, b), "--x", rec["x"], "--y", rec["y"])
        expect(c is not None and c["class"] == "real" and c["family"] == rec["family"]
               and c["j"] == rec["j"], f"round trip {a},{b} {rec['family']}:{rec['j']}")

rc, out, _ = run("roots", *ab(5, 1), "--max-index", 1)
expect({"family": "LL", "j": 1, "x": "4", "y": "5"}.items()
       <= json.loads([l for l in out.splitlines() if '"LL","j":1' in l][0]).items(),
       "roots 5 1 contains LL 1 = (4,5)")
rc, out, _ = run("roots", *ab(4, 1), "--max-index", 0, "--format", "csv")
rows = list(csv.DictReader(io.StringIO(out)))
expect(any(r["family"] == "LL" and r["x"] == "1" and r["y"] == "0" for r in rows),
       "csv roots 4 1 contain LL 0 = (1,0)")
rc, out, _ = run("roots", *ab(5, 1), "--max-index", 60, "--family", "SU", "--format", "csv")
expect(len(list(csv.DictReader(io.StringIO(out)))[-1]["x"]) > 20, "csv keeps full decimals")
rc, out, err = run("roots", *ab(1, 1), "--max-index", 2)
expect(rc == 2 and "ab" in err and out == "", "roots 1 1 rejected with exit 2")
rc, _, _ = run("roots", *ab(5, 1))
expect(rc == 2, "missing --max-index is a usage error")
rc, _, _ = run("roots", *ab(5, 1), "--max-index", 1, "--family", "QQ")
expect(rc == 2, "bad family is a usage error")

# classify examples
expect(json_cmd("classify", "classify", *ab(5, 1), "--x", 1, "--y", 1)["family"] == "SL",
       "classify 5 1 1 1")
expect(json_cmd("classify", "classify", *ab(5, 1), "--x", 1, "--y", 2)["class"] == "imaginary",
       "classify 5 1 1 2")
expect(json_cmd("classify", "classify", *ab(5, 1), "--x", 0, "--y", 0)["class"] == "zero",
       "classify 5 1 0 0")
expect(json_cmd("classify", "classify", *ab(5, 1), "--x=-1", "--y=-1")["j"] == -1,
       "classify negative coordinates")
json_cmd("classify", "classify", *ab(5, 1), "--x", "1e3", "--y", 1, code=2)

# commutators
r = json_cmd("commutator", "commutator", *ab(5, 1), "--alpha", "SU:0", "--beta", "SU:1")
expect(r["result"] == "real" and r["n"] == 5 and r["root"] == "LU:0", "commutator 5 1")
r = json_cmd("commutator", "commutator", *ab(4, 1), "--alpha", "SU:0", "--beta", "SU:1")
expect(r["result"] == "real" and r["n"] == 4 and r["root"] == "LU:0", "commutator 4 1")
r = json_cmd("commutator", "commutator", *ab(3, 2), "--alpha", "SU:0", "--beta", "LL:0")
expect(r["result"] in ("imaginary_space", "zero"), "commutator 3 2")
r = json_cmd("commutator", "commutator", *ab(5, 1), "--alpha", "SU:0", "--beta", "SL:-1")
expect(r["result"] == "coroot", "commutator with the negative root")
json_cmd("commutator", "commutator", *ab(5, 1), "--alpha", "SU", "--beta", "SU:1", code=2)

with tempfile.TemporaryDirectory() as tmp:
    def sign_file(name, obj):
        path = os.path.join(tmp, name)
        with open(path, "w") as f:
            f.write(obj if isinstance(obj, str) else json.dumps(obj))
        return path

    flip = {"type": "Ha1", "overrides": [{"key": "U:0", "sign": -1}]}
    valid("signs", flip, "sign file")
    r = json_cmd("commutator", "commutator", *ab(5, 1), "--alpha", "SU:0", "--beta", "SU:1",
                 "--signs", sign_file("flip.json", flip))
    expect(r["n"] == -5 and r["sign"] == -1, "sign file flips the extraspecial sign")
    h41 = {"type": "H41", "overrides": [{"key": "LU:0", "sign": -1}]}
    valid("signs", h41, "sign file")
    r = json_cmd("commutator", "commutator", *ab(4, 1), "--alpha", "SU:0", "--beta", "SU:1",
                 "--signs", sign_file("h41.json", h41))
    expect(r["n"] == -4, "H41 sign file")
    json_cmd("commutator", "commutator", *ab(4, 1), "--alpha", "SU:0", "--beta", "SU:1",
             "--signs", sign_file("wrong.json", flip), code=2)
    json_cmd("commutator", "commutator", *ab(4, 1), "--alpha", "SU:0", "--beta", "SU:1",
             "--signs", sign_file("broken.json", "{"), code=2)
    json_cmd("commutator", "commutator", *ab(4, 1), "--alpha", "SU:0", "--beta", "SU:1",
             "--signs", os.path.join(tmp, "missing.json"), code=2)
    r = json_cmd("verify", "verify", *ab(5, 1), "--suite", "signs", "--window", 6,
                 "--signs", sign_file("flip2.json", flip))
    expect(r["passed"], "signs suite passes under a flipped assignment")

# subsystems
r = json_cmd("subsystem", "subsystem", *ab(5, 1), "--generators", "SU:0,SL:0", "--mode", "phi")
expect(r["cartan"] == [[2, -3], [-3, 2]], "phi subsystem Cartan matrix")
r = json_cmd("subsystem", "subsystem", *ab(5, 1), "--generators", "SU:0,SL:0", "--mode", "delta")
expect(r["shape"] == "II_LS" and r["r"] == 0 and r["d"] == 0, "delta subsystem is everything")
r = json_cmd("subsystem", "subsystem", *ab(5, 1), "--generators", "SU:0")
expect(r["shape"] == "I_S", "single generator")
r = json_cmd("subsystem", "subsystem", *ab(5, 1), "--generators", "SU:1,SL:0,LL:2", "--mode", "delta")
expect(r is not None, "mixed generators")
json_cmd("subsystem", "subsystem", *ab(5, 1), "--generators", "", code=2)

# verify
for a, b in [(5, 1), (4, 1), (2, 2), (3, 2), (5, 5)]:
    r = json_cmd("verify", "verify", *ab(a, b), "--suite", "all", "--window", 10)
    expect(r["passed"] and r["total_failed"] == 0, f"verify all {a},{b}")
r = json_cmd("verify", "verify", *ab(4, 1), "--suite", "oracle", "--window", 8)
expect(r["passed"], "oracle suite")
r = json_cmd("verify", "verify", *ab(5, 1), "--suite", "sums", "--window", 15)
expect(r["passed"], "sums suite window 15")
r = json_cmd("verify", "verify", *ab(3, 2), "--suite", "signs")
expect(r["passed"] and r["total_checked"] == 0, "trivial signs suite")
json_cmd("verify", "verify", *ab(5, 1), "--suite", "oracle", code=2)
json_cmd("verify", "verify", *ab(5, 1), "--suite", "everything", code=2)


# plot data
def plot(*args):
    rc, out, err = run("plot-data", *args)
    expect(rc == 0, f"plot-data {args}: exit {rc} {err}")
    return list(csv.DictReader(io.StringIO(out)))


rows = plot(*ab(5, 1), "--max-index", 2)
expect({"x": "4", "y": "5", "kind": "long_root"} in rows, "plot 5 1 has 4,5,long_root")
kinds = {r["kind"] for r in rows}
expect(kinds == {"long_root", "short_root", "imaginary_root", "long_curve", "short_curve"},
       f"plot kinds {kinds}")
rows = plot(*ab(5, 1), "--max-index", 0)
expect({"x": "1", "y": "0", "kind": "long_root"} in rows, "plot 1,0,long_root")
expect({"x": "0", "y": "1", "kind": "short_root"} in rows, "plot 0,1,short_root")
rows = plot(*ab(4, 1), "--max-index", 4, "--hyperbola-samples", 50)
imag = [r for r in rows if r["kind"] == "imaginary_root"]
expect(imag and all(int(r["y"]) == 2 * int(r["x"]) for r in imag),
       "H(4,1) imaginary rows are multiples of (1,2)")
expect(sum(r["kind"] == "long_curve" for r in rows) == 50, "curve sample count")
for r in rows:
    if r["kind"] == "short_curve":
        x, y = float(r["x"]), float(r["y"])
        expect(abs(4 * x * x - 4 * x * y + y * y - 1) < 1e-6 * max(1, x * x), "short curve on Q=b")

# usage
rc, _, _ = run()
expect(rc == 2, "no subcommand")
rc, out, _ = run("--help")
expect(rc == 0 and "roots" in out, "--help")

if failures:
    print(f"{len(failures)} failure(s)", file=sys.stderr)
    sys.exit(1)
print("cli contract: all checks passed")
