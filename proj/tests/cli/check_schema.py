#!/usr/bin/env python3
"""Run vizing-lab commands and validate every JSON document against docs/schema.

usage: check_schema.py VIZING_LAB SCHEMA_DIR
"""
import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource


def load(schema_dir):
    resources = {}
    for path in schema_dir.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        Draft202012Validator.check_schema(doc)
        resources[path.name] = Resource.from_contents(doc)
    return Registry().with_resources(resources.items()), resources


def run(tool, args, stdin=None):
    proc = subprocess.run([tool, *args], input=stdin, capture_output=True, text=True)
    return proc.returncode, proc.stdout


CASES = [
    # (schema, args, stdin, expected exit code)
    ("invariants", ["invariants", "--gen", "wagner", "--json"], None, 0),
    ("invariants", ["invariants", "--g6", "-", "--json"], "A_\n", 0),
    ("invariants", ["--budget", "1", "invariants", "--gen", "circulant:20:1,5", "--json"], None, 3),
    ("classify", ["classify", "--gen", "cycle:5", "--json"], None, 0),
    ("classify", ["classify", "--gen", "wagner", "--json"], None, 0),
    ("classify", ["--budget", "5", "classify", "--gen", "wagner", "--json"], None, 3),
    ("product", ["product", "--g", "k66mc4", "--h", "path:2", "--json"], None, 0),
    ("product", ["product", "--g", "wagner", "--h", "cycle:4", "--json"], None, 0),
    ("product", ["product", "--g", "path:3", "--h", "g6:A_", "--json"], None, 0),
    ("product", ["--budget", "2", "product", "--g", "wagner", "--h", "cycle:5", "--json"], None, 3),
    ("scan-record", ["scan", "-", "--format", "jsonl", "--h", "path:2", "--h", "cycle:3"],
     "A_\nGhdHKc\nnot-graph6\nDhc\n", 2),
    ("lemma-record", ["verify-lemmas", "-", "--json"], "A_\nGhdHKc\n???\n", 2),
]


def main():
    tool, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    registry, resources = load(schema_dir)
    failures = 0
    for name, args, stdin, expected in CASES:
        schema = resources[f"{name}.schema.json"].contents
        validator = Draft202012Validator(schema, registry=registry)
        code, out = run(tool, args, stdin)
        docs = [json.loads(line) for line in out.splitlines() if line.strip()]
        errors = [e.message for d in docs for e in validator.iter_errors(d)]
        ok = code == expected and docs and not errors
        print(f"{'ok  ' if ok else 'FAIL'} {name}: {' '.join(args)} (exit {code}, {len(docs)} documents)")
        for e in errors[:5]:
            print(f"     {e}")
        failures += not ok
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
