"""Validate CLI JSON reports against docs/schema."""
import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = [
    ("dem", ["dem", "--gen", "cycle:5"]),
    ("dem", ["dem", "--gen", "grid:3,3", "--method", "both"]),
    ("dem", ["dem", "--gen", "petersen", "--method", "greedy"]),
    ("em", ["em", "--gen", "cycle:4", "--vertex", "0"]),
    ("em", ["em", "--gen", "petersen", "--vertex", "3", "--naive"]),
    ("pset", ["pset", "--gen", "doublestar:3,3", "--monitors", "all", "--edge", "centers"]),
    ("verify", ["verify", "--gen", "complete:4", "--monitors", "0,1"]),
    ("verify", ["verify", "--gen", "cycle:6", "--monitors", "0,3"]),
    ("bounds", ["bounds", "--gen", "petersen"]),
    ("bounds", ["bounds", "--gen", "path:4"]),
    ("char", ["char", "--gen", "path:4", "--target", "1"]),
    ("char", ["char", "--gen", "cycle:4", "--target", "2"]),
    ("char", ["char", "--gen", "cycle:4", "--target", "2", "--reading", "repaired"]),
    ("char", ["char", "--gen", "cycle:6", "--target", "3"]),
    ("char", ["char", "--gen", "complete:5", "--target", "3"]),
]


def main(binary, schema_dir):
    schema_dir = pathlib.Path(schema_dir)
    failures = 0
    for name, args in CASES:
        schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
        out = subprocess.run([binary, *args], capture_output=True, text=True, check=True).stdout
        try:
            jsonschema.validate(json.loads(out), schema)
            print("ok  ", " ".join(args))
        except jsonschema.ValidationError as err:
            failures += 1
            print("FAIL", " ".join(args), "-", err.message)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
