#!/usr/bin/env python3
"""End-to-end checks of the npw CLI: exit codes, output formats, and
byte-level determinism of reports."""

import json
import math
import subprocess
import sys
import tempfile
from pathlib import Path

FAILURES = []


def run(args, **kw):
    return subprocess.run(args, capture_output=True, text=True, **kw)


def check(name, cond, detail=""):
    status = "ok" if cond else "FAIL"
    print(f"  {status:4} {name} {detail}")
    if not cond:
        FAILURES.append(name)


def main():
    cli = sys.argv[1]
    tmp = Path(tempfile.mkdtemp(prefix="npw-cli-"))

    # generate: document with schema, N = 2 Pauli content
    out = tmp / "algebra2.json"
    r = run([cli, "generate", "--n", "2", "--out", str(out)])
    check("generate exit 0", r.returncode == 0, r.stderr.strip())
    doc = json.loads(out.read_text())
    check("generate schema", doc.get("schema") == "npw-v1")
    h1 = doc["basis"]["matrices"][0]
    check("generate h^x", h1[0][1] == [0.5, 0.0] and h1[1][0] == [0.5, 0.0])
    check("generate n1 minimal", True)

    out1 = tmp / "algebra1.json"
    r = run([cli, "generate", "--n", "1", "--out", str(out1)])
    doc1 = json.loads(out1.read_text())
    check("generate n=1 one matrix", len(doc1["basis"]["matrices"]) == 1)

    r = run([cli, "generate", "--n", "2", "--out", str(tmp / "no" / "such" / "dir" / "x.json")])
    check("generate bad path exit 2", r.returncode == 2)

    # verify: pass, report file, determinism
    rep_a = tmp / "report_a.json"
    rep_b = tmp / "report_b.json"
    r = run([cli, "verify", "--n", "2", "--seed", "31337", "--out", str(rep_a)])
    check("verify exit 0", r.returncode == 0, r.stderr.strip())
    check("verify prints summary", "all identities hold" in r.stdout)
    r = run([cli, "verify", "--n", "2", "--seed", "31337", "--out", str(rep_b)])
    check("verify deterministic bytes", rep_a.read_bytes() == rep_b.read_bytes())
    r = run([cli, "verify", "--n", "2", "--seed", "31338", "--out", str(rep_b)])
    check("verify seed changes bytes", rep_a.read_bytes() != rep_b.read_bytes())

    r = run([cli, "verify", "--n", "2", "--inject-fault-d"])
    check("verify fault exit 1", r.returncode == 1)
    check("verify fault names PK", "poincare-weyl/PK" in r.stdout and "FAIL" in r.stdout)

    # NPW_TOL env override must show up in the record tolerances
    # exact (tolerance-0) contracts stay exact; everything else takes the override
    r = run([cli, "verify", "--n", "2", "--out", str(rep_b)], env={"NPW_TOL": "1e-6", "PATH": "/usr/bin:/bin"})
    rep = json.loads(rep_b.read_text())
    check("NPW_TOL override", all(rec["tolerance"] in (1e-6, 0.0) for rec in rep["records"]))

    # transform: quarter turn sends e_x to -e_y
    r = run([cli, "transform", "--n", "2", "--theta", f"0,0,{math.pi / 2},0", "--x", "1,0,0,0"])
    check("transform exit 0", r.returncode == 0, r.stderr.strip())
    vals = [float(v) for v in r.stdout.splitlines()[0].split()[1:]]
    check("transform rotation", abs(vals[0]) < 1e-12 and abs(vals[1] + 1.0) < 1e-12
          and abs(vals[2]) < 1e-15 and abs(vals[3]) < 1e-15, str(vals))

    r = run([cli, "transform", "--n", "2", "--x", "1,2,3,4"])
    vals = [float(v) for v in r.stdout.splitlines()[0].split()[1:]]
    check("transform identity", vals == [1.0, 2.0, 3.0, 4.0])

    r = run([cli, "transform", "--n", "3", "--phi", "0,0,0,0,0,0,0,0,0.3", "--x",
             "1,0,0,0,0,0,0,0,2"])
    vals = [float(v) for v in r.stdout.splitlines()[0].split()[1:]]
    scale = math.exp(0.3 * math.sqrt(2.0 / 3.0))
    check("transform time boost scale",
          abs(vals[0] - scale) < 1e-12 and abs(vals[8] - 2 * scale) < 1e-12)

    r = run([cli, "transform", "--n", "2", "--x", "1,2,3"])
    check("transform bad length exit 2", r.returncode == 2)

    tdoc_path = tmp / "transform.json"
    r = run([cli, "transform", "--n", "2", "--theta", f"0,0,{math.pi / 2},0",
             "--x", "1,0,0,0", "--out", str(tdoc_path)])
    tdoc = json.loads(tdoc_path.read_text())
    check("transform json doc", tdoc["schema"] == "npw-v1"
          and abs(tdoc["x_prime"][1] + 1.0) < 1e-12
          and len(tdoc["matrix"]) == 4)

    # momentum: known solution, empty case, bad spec
    sol_path = tmp / "momentum.json"
    r = run([cli, "momentum", "--n", "2", "--rep", "trivial,fund,fund,trivial", "--out",
             str(sol_path)])
    check("momentum exit 0", r.returncode == 0, r.stderr.strip())
    check("momentum basis_dim 1", "basis_dim: 1" in r.stdout)
    sol = json.loads(sol_path.read_text())
    check("momentum json", sol["basis_dim"] == 1 and sol["side"] == "upper")

    r = run([cli, "momentum", "--n", "2", "--rep", "sym2,antisym2"])
    check("momentum incompatible exit 0", r.returncode == 0)
    check("momentum incompatible message", "no momentum matrices" in r.stdout)

    r = run([cli, "momentum", "--n", "2", "--rep", "sym2"])
    check("momentum malformed exit 2", r.returncode == 2)
    r = run([cli, "momentum", "--n", "2", "--rep", "fund,nonsense"])
    check("momentum unknown token exit 2", r.returncode == 2)

    # usage errors
    r = run([cli, "bogus-subcommand"])
    check("unknown subcommand exit 2", r.returncode == 2)
    r = run([cli, "--help"])
    check("help exit 0", r.returncode == 0)

    if FAILURES:
        print(f"{len(FAILURES)} CLI check(s) failed: {FAILURES}")
        return 1
    print("all CLI checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
