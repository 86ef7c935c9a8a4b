"""Runs the CLI on a fixed set of argument lists and checks exit codes,
schema validity and byte-identical reruns."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BIN, SCHEMA = sys.argv[1], sys.argv[2]

CASES = [
    (["poly", "--family", "k", "--n", "2"], 0),
    (["poly", "--family", "f", "--n=-3"], 0),
    (["poly", "--family", "nope", "--n", "2"], 2),
    (["identities", "--range", "-4..4"], 0),
    (["identities", "--range", "4..-4"], 2),
    (["roots", "--n", "2"], 0),
    (["roots", "--n=-1", "--alpha", "1"], 0),
    (["roots", "--n", "3", "--l", "2"], 0),
    (["roots", "--n", "2", "--alpha", "0.5"], 3),
    (["roots-modp", "--n=-3", "--p", "5"], 0),
    (["roots-modp", "--n", "2", "--p", "9"], 2),
    (["survey", "--p", "13"], 0),
    (["riley", "--n", "2", "--l", "1"], 0),
    (["riley", "--n", "2", "--p", "11", "--alpha", "5"], 0),
    (["riley", "--n", "2", "--p", "11", "--alpha", "5", "--variant", "repU"], 0),
    (["riley", "--n", "2", "--p", "11", "--alpha", "3"], 3),
    (["lfun", "--n", "2", "--p", "11", "--alpha", "5"], 0),
    (["lfun", "--n=-3", "--p", "5", "--alpha=-2", "--prec-digits", "24"], 0),
    (["lfun", "--n=-1", "--p", "7", "--alpha", "1", "--direction", "y-of-x"], 3),
    (["lfun", "--n", "2", "--p", "11", "--alpha", "4"], 3),
    (["lfun-parabolic", "--n=-1", "--p", "7"], 0),
    (["lfun-parabolic", "--n=-1", "--p", "5"], 3),
    (["torsion-check", "--range", "-1..1", "--count", "5", "--seed", "7"], 0),
    (["frobnicate"], 2),
    ([], 2),
]


def main():
    with open(SCHEMA) as f:
        schema = json.load(f)
    validator = jsonschema.Draft7Validator(schema)
    failures = 0
    for args, want in CASES:
        first = subprocess.run([BIN, *args], capture_output=True)
        second = subprocess.run([BIN, *args], capture_output=True)
        label = " ".join(args) or "(no arguments)"
        problems = []
        if first.returncode != want:
            problems.append(f"exit {first.returncode}, expected {want}: {first.stderr.decode().strip()}")
        if first.stdout != second.stdout:
            problems.append("output differs between identical runs")
        if want in (0, 1):
            try:
                doc = json.loads(first.stdout)
                errors = sorted(validator.iter_errors(doc), key=str)
                if errors:
                    problems.append(f"schema: {errors[0].message}")
            except json.JSONDecodeError as e:
                problems.append(f"not JSON: {e}")
        elif first.stdout.strip():
            problems.append("document printed despite an error")
        print(("FAIL " if problems else "ok   ") + label)
        for p in problems:
            print("     " + p)
        failures += bool(problems)

    with tempfile.TemporaryDirectory() as tmp:
        svg = os.path.join(tmp, "f2.svg")
        r = subprocess.run([BIN, "plot", "--n", "2", "--resolution", "96", "--out", svg], capture_output=True)
        ok = r.returncode == 0 and not list(validator.iter_errors(json.loads(r.stdout)))
        with open(svg) as f:
            ok = ok and f.read().startswith("<?xml")
        print(("ok   " if ok else "FAIL ") + "plot --out")
        failures += not ok

    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
