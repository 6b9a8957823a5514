#!/usr/bin/env python3
"""Run each CLI command twice, validate its JSON against the shipped schema,
and check that output is byte-identical and survives a parse/dump round trip."""

import json
import subprocess
import sys
from pathlib import Path

from jsonschema import Draft202012Validator

CASES = [
    ("info", ["--type", "A2", "--ell", "5", "info"]),
    ("info", ["--type", "A1", "--rank", "1", "info"]),
    ("linkage", ["--type", "A1", "--ell", "5", "linkage", "--from", "[0]", "--to", "[1]"]),
    ("strong-linkage", ["--type", "A1", "--ell", "5", "strong-linkage", "--from", "[-2]", "--to", "[8]", "--chain"]),
    ("strong-linkage", ["--type", "A2", "--ell", "5", "strong-linkage", "--from", "[0,0]", "--to", "[1,0]", "--chain"]),
    ("block", ["--type", "A1", "--ell", "5", "block", "--box", "12"]),
    ("alcove", ["--type", "A1", "--ell", "5", "alcove", "--weight", "[8]"]),
    ("alcove", ["--type", "A2", "--ell", "5", "alcove", "--weight", "[-1,0]"]),
    ("bwb", ["--type", "A2", "bwb", "--weight", "[-2,1]"]),
    ("bwb", ["--type", "A2", "bwb", "--weight", "[-1,0]"]),
    ("char", ["--type", "G2", "char", "--highest", "[1,0]"]),
    ("euler", ["--type", "A1", "euler", "--weight", "[-2]"]),
    ("euler", ["--type", "A1", "euler", "--weight", "[-1]"]),
    ("kostant", ["--type", "B2", "kostant", "--root", "r[2,2]"]),
    ("kostant", ["--type", "A1", "kostant", "--root", "r[2]", "--parts", "2"]),
    ("stabilize", ["--type", "A1", "stabilize", "--mu", "[0]", "--tau", "[-4]"]),
    ("ext-dim", ["--type", "A1", "--ell", "5", "ext-dim", "--zeta", "[2]", "--eta", "[0]", "--n", "2"]),
    ("translate-analyze",
     ["--type", "A2", "--ell", "5", "translate", "analyze", "--lambda", "[0,0]", "--mu", "[-1,1]", "--word", "s0,s1"]),
    ("translate-word", ["--type", "A2", "--ell", "5", "translate", "word", "--nu", "r[1,1]"]),
    ("quantum-qbinom", ["quantum", "qbinom", "--n", "-3", "--t", "2", "--d", "2"]),
    ("quantum-qbinom", ["quantum", "qbinom", "--n", "7", "--t", "1", "--d", "1", "--ell", "7"]),
    ("verify-check", ["verify", "prop-aff", "--types", "A2,B2,G2", "--ell-range", "2..12"]),
    ("verify-check", ["verify", "bwb-grid"]),
    ("verify-check", ["verify", "quantum-integrality"]),
    ("verify-check", ["verify", "alcove-walls"]),
    ("verify-check", ["verify", "triangle", "--grid", "small"]),
    ("verify-all", ["verify", "all"]),
]


def main() -> int:
    binary, schema_dir = sys.argv[1], Path(sys.argv[2])
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        schema = json.loads(path.read_text())
        Draft202012Validator.check_schema(schema)
        schemas[path.name.removesuffix(".schema.json")] = Draft202012Validator(schema)

    failures = 0
    for name, args in CASES:
        runs = [subprocess.run([binary, *args], capture_output=True, text=True) for _ in range(2)]
        label = " ".join(args)
        problems = []
        if runs[0].returncode != 0:
            problems.append(f"exit {runs[0].returncode}: {runs[0].stderr.strip()}")
        elif runs[0].stdout != runs[1].stdout:
            problems.append("output differs between runs")
        else:
            doc = json.loads(runs[0].stdout)
            if json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n" != runs[0].stdout:
                problems.append("not in sorted canonical form")
            problems += [e.message for e in schemas[name].iter_errors(doc)]
        status = "ok" if not problems else "FAIL"
        print(f"{status:4} {name:18} {label}")
        for p in problems:
            print(f"     {p}")
        failures += bool(problems)

    unused = set(schemas) - {n for n, _ in CASES} - {"error"}
    if unused:
        print(f"FAIL schemas with no case: {sorted(unused)}")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
