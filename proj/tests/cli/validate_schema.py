"""Validates opf verify JSON output against the shipped schema."""
import json
import subprocess
import sys
import tempfile

import jsonschema


def main() -> int:
    opf, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    runs = [
        ["verify", "thm1", "--range", "37..200", "--format", "json"],
        ["verify", "cor1", "--range", "1..30", "--format", "json", "--full"],
        ["verify", "thm2", "--range", "27..60", "--format", "json"],
        ["verify", "bridges", "--range", "1..300", "--format", "json"],
        ["verify", "y-bound", "--range", "184..200", "--m", "4", "--format", "json"],
    ]
    bad = 0
    with tempfile.TemporaryDirectory() as cache:
        for args in runs:
            proc = subprocess.run([opf, *args, "--cache-dir", cache], capture_output=True, text=True)
            if proc.returncode not in (0, 1):
                print("FAIL", args, "exit", proc.returncode, proc.stderr)
                bad += 1
                continue
            errors = list(validator.iter_errors(json.loads(proc.stdout)))
            for e in errors:
                print("FAIL", args, e.message)
            bad += bool(errors)
            if not errors:
                print("ok", " ".join(args))
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
