"""Validate hyperlab reports against docs/report.schema.json."""
import json
import subprocess
import sys

try:
    import jsonschema
except ImportError:
    sys.exit(77)

binary, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)

tasks = [
    ["check-axioms", "q=3", "n=1"],
    ["check-axioms", "q=2", "n=1"],
    ["factor-hyperfield", "q=9", "subfield=3"],
    ["projective-hypergroup", "q=4", "n=1"],
    ["desargues", "q=3", "n=2"],
    ["collineations", "q=3", "n=1"],
    ["incidence-group", "q=3", "n=1"],
    ["kdim", "q=5", "n=1"],
    ["krasner", "p=5", "f=-5,0,1", "g=-2,0,1"],
    ["quad-extensions", "q=3"],
    ["fraction-check", "q=3", "cap=1"],
]
failures = 0
for task in tasks:
    for flags in (["--json"], [], ["--json", "--timings"]):
        out = subprocess.run([binary, *flags, *task], capture_output=True, text=True, env={})
        try:
            jsonschema.validate(json.loads(out.stdout), schema)
        except Exception as e:  # noqa: BLE001
            failures += 1
            print("FAIL", " ".join(flags + task), e)
print(f"{failures} failure(s)")
sys.exit(1 if failures else 0)
