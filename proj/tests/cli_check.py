#!/usr/bin/env python3
"""Black-box checks of the command-line interface: exit codes, JSON shapes,
determinism, and the documented example outputs."""

import json
import os
import subprocess
import sys
import tempfile


def run(binary, *args, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run([binary, *args], capture_output=True, text=True, env=full_env)


def check(condition, message):
    if not condition:
        print(f"FAIL: {message}", file=sys.stderr)
        sys.exit(1)


def main():
    binary = sys.argv[1]

    # No arguments: usage error on stderr, exit 2.
    r = run(binary)
    check(r.returncode == 2, f"no-arg run should exit 2, got {r.returncode}")
    check(r.stderr.strip() != "", "usage text should go to the diagnostic stream")

    # Unknown flag: exit 2.
    r = run(binary, "count", "--m", "2", "--p", "2", "--bogus")
    check(r.returncode == 2, f"unknown flag should exit 2, got {r.returncode}")

    # count: all four values agree at 14.
    r = run(binary, "count", "--m", "2", "--p", "2")
    check(r.returncode == 0, f"count failed: {r.stderr}")
    doc = json.loads(r.stdout)
    check(doc["m"] == 2 and doc["p"] == 2, "count echoes m and p")
    for key in ("enumeration", "vesztergombi", "polyBernoulli", "hspecFormula"):
        check(doc[key] == "14", f"count field {key} should be '14', got {doc[key]!r}")
    check(doc["agree"] is True, "count agree flag")

    # Determinism: byte-identical output on a second run.
    r2 = run(binary, "count", "--m", "2", "--p", "2")
    check(r.stdout == r2.stdout, "count output must be byte-identical across runs")

    # enumerate with stratum filter: exactly the maximum element.
    r = run(binary, "enumerate", "--m", "2", "--p", "2", "--t", "2")
    check(r.returncode == 0, f"enumerate failed: {r.stderr}")
    check(r.stdout.strip() == "[3,4,1,2]", f"stratum 2 should be [3,4,1,2], got {r.stdout!r}")

    r = run(binary, "enumerate", "--m", "2", "--p", "2")
    lines = [json.loads(line) for line in r.stdout.splitlines()]
    check(len(lines) == 14, f"expected 14 permutations, got {len(lines)}")
    check(lines == sorted(lines), "enumeration must be in lexicographic order")

    # Stratum filter outside the square case is a usage error.
    r = run(binary, "enumerate", "--m", "2", "--p", "3", "--t", "1")
    check(r.returncode == 2, "stratum filter with m != p should exit 2")

    # hasse: JSON and DOT exports.
    with tempfile.TemporaryDirectory() as tmp:
        json_path = os.path.join(tmp, "g.json")
        r = run(binary, "hasse", "--m", "2", "--p", "2", "--format", "json", "--out", json_path)
        check(r.returncode == 0, f"hasse json failed: {r.stderr}")
        with open(json_path, encoding="utf-8") as handle:
            graph = json.load(handle)
        check(len(graph["nodes"]) == 14, "hasse node count")
        check(len(graph["edges"]) == 27, "hasse edge count")

        dot_path = os.path.join(tmp, "g.dot")
        r = run(binary, "hasse", "--m", "2", "--p", "2", "--format", "dot", "--out", dot_path)
        check(r.returncode == 0, f"hasse dot failed: {r.stderr}")
        with open(dot_path, encoding="utf-8") as handle:
            dot = handle.read()
        check(dot.startswith("digraph hasse {"), "dot header")
        check(dot.count("label=") == 14, "dot labels")

    # xi: full catalog and a single entry.
    r = run(binary, "xi", "--m", "2", "--p", "2")
    doc = json.loads(r.stdout)
    check(len(doc["entries"]) == 14, "catalog entry count")
    ranks = sorted(e["rank"] for e in doc["entries"])
    check(ranks.count(0) == 1 and ranks.count(1) == 9 and ranks.count(2) == 4,
          "catalog rank distribution")

    r = run(binary, "xi", "--m", "2", "--p", "2", "--sigma", "3,4,1,2")
    doc = json.loads(r.stdout)
    check(len(doc["entries"]) == 1, "single-entry request")
    entry = doc["entries"][0]
    check(entry["rank"] == 0, "sigma0 has rank 0")
    check(entry["wMinus"] == [2, 1, 4, 3], "wMinus of sigma0")
    check(all(g["sign"] == "minus" for g in entry["generators"]), "plus side is empty")
    rows1 = sorted(tuple(g["rows"]) for g in entry["generators"] if g["j"] == 1)
    check(rows1 == [(1, 2, 3), (1, 2, 4)], f"level-1 row sets, got {rows1}")

    # xi outside the restricted set: usage error.
    r = run(binary, "xi", "--m", "2", "--p", "2", "--sigma", "4,1,2,3")
    check(r.returncode == 2, "sigma outside the set should exit 2")

    # verification subcommands.
    r = run(binary, "verify-relations", "--n", "3")
    check(r.returncode == 0 and json.loads(r.stdout)["ok"] is True, "verify-relations")
    r = run(binary, "verify-delta-central", "--n", "2")
    check(r.returncode == 0 and json.loads(r.stdout)["ok"] is True, "verify-delta-central")
    r = run(binary, "verify-catalog", "--m", "2", "--p", "2")
    check(r.returncode == 0, f"verify-catalog failed: {r.stderr or r.stdout}")
    doc = json.loads(r.stdout)
    check(doc["allPassed"] is True, "verify-catalog allPassed")
    names = {c["check"] for c in doc["checks"]}
    check({"gens_plus_w0_empty", "catalog_size", "criterion_check", "lemma_conditions",
           "nesting", "stratification"} <= names, f"verify-catalog checks present: {names}")

    # dd-run: determinant identity and trace file.
    with tempfile.TemporaryDirectory() as tmp:
        trace_path = os.path.join(tmp, "trace.json")
        r = run(binary, "dd-run", "--n", "4", "--m", "2", "--seed", "7", "--trace", trace_path)
        check(r.returncode == 0, f"dd-run failed: {r.stderr}")
        doc = json.loads(r.stdout)
        check(doc["identityHolds"] is True, "dd-run identity")
        check(doc["target"] == [1, 4], "default target is the full run")
        frac = doc["final"][0][0]
        check("/" in frac, "rationals serialize as num/den")
        with open(trace_path, encoding="utf-8") as handle:
            trace = json.load(handle)
        check(isinstance(trace, list) and trace[0]["step"] == [4, 5], "trace starts at the input")
        check(len(trace) == 16, f"full run should log 16 states, got {len(trace)}")

        r2 = run(binary, "dd-run", "--n", "4", "--m", "2", "--seed", "7")
        check(json.loads(r2.stdout)["initial"] == doc["initial"],
              "same seed, same sampled matrix")

    # dd-run with explicit target (m,m).
    r = run(binary, "dd-run", "--n", "5", "--m", "2", "--seed", "3", "--target", "2,2")
    doc = json.loads(r.stdout)
    check(doc["identityHolds"] is True, "dd-run identity at (m,m)")

    # size bound from the environment and from the flag.
    r = run(binary, "enumerate", "--m", "5", "--p", "5", env={"QMATRIX_SIZE_BOUND": "8"})
    check(r.returncode == 2, "size bound from the environment should reject n=10")
    r = run(binary, "count", "--m", "2", "--p", "2", env={"QMATRIX_SIZE_BOUND": "8"})
    check(r.returncode == 0, "size bound from the environment should allow n=4")
    r = run(binary, "--size-bound", "8", "enumerate", "--m", "5", "--p", "5")
    check(r.returncode == 2, "size bound before the subcommand should reject n=10")
    r = run(binary, "enumerate", "--m", "5", "--p", "5", "--size-bound", "8")
    check(r.returncode == 2, "size bound after the subcommand should reject n=10")
    r = run(binary, "enumerate", "--m", "2", "--p", "2", "--size-bound", "8")
    check(r.returncode == 0, "size bound after the subcommand should allow n=4")

    print("cli checks passed")


if __name__ == "__main__":
    main()
