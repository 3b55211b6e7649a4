#!/usr/bin/env python3
"""End-to-end checks of the gwf command-line tool."""

import json
import subprocess
import sys
import tempfile
import os

BIN = sys.argv[1]
FAILURES = []


def run(*args, expect=0):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        FAILURES.append(f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n"
                        f"stderr: {proc.stderr.strip()}")
    return proc


def check(cond, msg):
    if not cond:
        FAILURES.append(msg)


def parse_csv(text):
    meta, header, rows = {}, None, []
    for line in text.splitlines():
        if line.startswith("#"):
            k, _, v = line[1:].partition("=")
            meta[k.strip()] = v.strip()
        elif header is None:
            header = line.split(",")
        else:
            rows.append(dict(zip(header, line.split(","))))
    return meta, rows


base = ["--d", "3", "--alpha", "1", "--mu", "4", "--eps", "1"]

# coeffs: 11 rows, positive, m=0 equals the prefactor
p = run("coeffs", *base, "--max-m", "10", "--format", "csv")
meta, rows = parse_csv(p.stdout)
check(len(rows) == 11, f"coeffs: expected 11 rows, got {len(rows)}")
check(all(float(r["value"]) > 0 for r in rows), "coeffs: nonpositive value")
check(rows[0]["value"] == meta["prefactor"],
      f"coeffs: m=0 row {rows[0]['value']} != prefactor {meta['prefactor']}")

# CSV/JSON round trip is bit-exact
pj = run("coeffs", *base, "--max-m", "10", "--format", "json")
doc = json.loads(pj.stdout)
check(len(doc["records"]) == 11, "json: expected 11 records")
for r_csv, r_json in zip(rows, doc["records"]):
    csv_v = float(r_csv["value"])
    check(csv_v == r_json["value"],
          f"round-trip mismatch at m={r_csv['m']}: {csv_v!r} != {r_json['value']!r}")
    check(float(r_csv["abs_error_estimate"]) == r_json["abs_error_estimate"],
          f"round-trip error-estimate mismatch at m={r_csv['m']}")

# verify exits 0 on the reference bundle
run("verify", *base, "--max-m", "10")

# eval outside the support is exactly zero
p = run("eval", *base, "--r", "1.5")
_, rows = parse_csv(p.stdout)
check(rows[0]["value"] == "0", f"eval r=1.5: expected 0, got {rows[0]['value']}")

# reconstruct has small errors at a coarse degree
p = run("reconstruct", *base, "--max-m", "40", "--grid", "-1:1:21")
_, rows = parse_csv(p.stdout)
check(all(float(r["abs_err"]) < 1e-3 for r in rows), "reconstruct: large error")

# asymptotics (spherical branch) ratio near 1 at high degree
p = run("asymptotics", *base, "--max-m", "400", "--format", "json")
doc = json.loads(p.stdout)
last = doc["records"][-1]
check(abs(last["ratio"] - 1.0) < 0.05, f"asymptotics ratio {last['ratio']}")

# config file + flag override
with tempfile.NamedTemporaryFile("w", suffix=".cfg", delete=False) as fh:
    fh.write("d = 3\nalpha = 1\nmu = 4\neps = 1\nmax-m = 5\n# comment line\n")
    cfg_path = fh.name
try:
    p = run("coeffs", "--config", cfg_path, "--max-m", "2")
    _, rows = parse_csv(p.stdout)
    check(len(rows) == 3, f"config override: expected 3 rows, got {len(rows)}")
finally:
    os.unlink(cfg_path)

# determinism across thread counts
a = run("coeffs", *base, "--max-m", "30", "--threads", "1").stdout
b = run("coeffs", *base, "--max-m", "30", "--threads", "4").stdout
check(a == b, "thread count changed the output")

# exit codes: config errors -> 2, numerical/domain failures -> 3
run("nonsense", expect=2)
run("ft", "--grid", "bad", expect=2)
run("eval", "--alpha", "-1", expect=2)
run("coeffs", "--d", "1", "--alpha", "1", "--mu", "2", "--eps", "1", expect=3)

if FAILURES:
    print("FAIL")
    for f in FAILURES:
        print(" -", f)
    sys.exit(1)
print("cli: all checks passed")
