#!/usr/bin/env python3
"""Validate CLI JSON reports against schemas/, check determinism and exit codes.

usage: validate_schemas.py TORICGM_BINARY SCHEMA_DIR
"""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

RUNS = [
    ("classify", ["--graph", "fig1"]),
    ("classify", ["--graph", "fig2"]),
    ("classify", ["--graph", "ex14"]),
    ("ci", ["--graph", "fig1"]),
    ("ci", ["--graph", "ex14", "--max-c", "1"]),
    ("verify", ["--graph", "fig1"]),
    ("verify", ["--graph", "fig2"]),
    ("verify", ["--graph", "k4", "--seed", "7", "--trials", "4"]),
    ("counterexamples", []),
    ("adjugate", ["--graph", "fig1"]),
    ("adjugate", ["--graph", "cycle4"]),
    ("maps", ["--graph", "fig1"]),
    ("maps", ["--graph", "k2"]),
    ("sagbi", ["--graph", "ex14"]),
    ("sagbi", ["--graph", "k2"]),
]


def run(binary, args):
    return subprocess.run([binary, *args], capture_output=True, text=True, timeout=300)


def main():
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = []

    for command, args in RUNS:
        label = " ".join([command, *args])
        schema = json.loads((schema_dir / f"{command}.schema.json").read_text())
        first = run(binary, [command, *args, "--output", "json"])
        second = run(binary, [command, *args, "--output", "json"])
        if first.returncode != 0:
            failures.append(f"{label}: exit {first.returncode}: {first.stderr.strip()}")
            continue
        if first.stdout != second.stdout:
            failures.append(f"{label}: output differs between runs")
        try:
            jsonschema.validate(json.loads(first.stdout), schema)
        except jsonschema.ValidationError as err:
            failures.append(f"{label}: {err.message}")
        human = run(binary, [command, *args])
        if human.returncode != 0 or not human.stdout.strip():
            failures.append(f"{label}: human output missing")

    with tempfile.TemporaryDirectory() as tmp:
        split = pathlib.Path(tmp) / "split.json"
        split.write_text(json.dumps({"n": 4, "edges": [[1, 2], [3, 4]]}))
        loop = pathlib.Path(tmp) / "loop.json"
        loop.write_text(json.dumps({"n": 3, "edges": [[1, 1]]}))
        garbage = pathlib.Path(tmp) / "garbage.json"
        garbage.write_text("{ not json")
        expected_codes = [
            (["--help"], 0),
            ([], 2),
            (["classify", "--graph", "no_such_fixture"], 2),
            (["classify", "--graph", str(garbage)], 2),
            (["classify", "--graph", str(loop)], 2),
            (["verify", "--graph", str(split)], 2),
            (["maps", "--graph", "cycle4"], 2),
            (["classify", "--graph", "fig1", "--output", "xml"], 2),
            (["adjugate", "--graph", "k9"], 3),
        ]
        for args, code in expected_codes:
            got = run(binary, args).returncode
            if got != code:
                failures.append(f"{' '.join(args) or '(no arguments)'}: exit {got}, expected {code}")

    for f in failures:
        print("FAIL", f)
    print(f"{len(RUNS)} reports, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
