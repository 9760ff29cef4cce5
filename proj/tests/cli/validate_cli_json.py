"""Validates sympres JSON output against the published schemas with python-jsonschema."""
import json
import pathlib
import subprocess
import sys

try:
    import jsonschema
    from referencing import Registry, Resource
except ImportError:
    print("jsonschema not available")
    sys.exit(77)

binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())

CASES = [
    (["catalog"], "catalog.schema.json", 0),
    (["build", "H"], "bundle.schema.json", 0),
    (["build", "B(m=2,l=1,r=1)"], "bundle.schema.json", 0),
    (["verify-tables", "--max-m", "2", "--max-l", "2"], "verify_tables.schema.json", None),
    (["mckay", "O/T"], "mckay.schema.json", 0),
    (["mckay", "D3/C2"], "mckay.schema.json", 0),
    (["classify", "A(m=2)"], "verdict.schema.json", 0),
    (["classify", "B(m=1,l=1,r=1)"], "verdict.schema.json", 0),
    (["classify", "D(m=3)"], "verdict.schema.json", 0),
    (["classify", "K"], "verdict.schema.json", 0),
    (["classify", "G_3(D2,C2)"], "verdict.schema.json", 0),
    (["classify-all", "--max-m", "2", "--max-l", "2"], "classify_report.schema.json", None),
    (["verify-lemma71"], "three_factor.schema.json", 0),
    (["check-prop57", "--m", "6", "--a", "5", "--i", "3"], "charpoly_check.schema.json", 0),
]

failures = 0
for args, name, code in CASES:
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    label = " ".join(args)
    if code is not None and proc.returncode != code:
        print(f"FAIL {label}: exit {proc.returncode}\n{proc.stderr}")
        failures += 1
        continue
    validator = jsonschema.Draft202012Validator(schemas[name], registry=registry)
    errors = list(validator.iter_errors(json.loads(proc.stdout)))
    if errors:
        print(f"FAIL {label}: {errors[0].json_path}: {errors[0].message}")
        failures += 1
    else:
        print(f"ok   {label}")

proc = subprocess.run([binary, "build", "F(m=1,r=0)"], capture_output=True, text=True)
errors = list(jsonschema.Draft202012Validator(schemas["error.schema.json"]).iter_errors(json.loads(proc.stderr)))
if proc.returncode != 1 or errors:
    print(f"FAIL structured error: exit {proc.returncode} {proc.stderr}")
    failures += 1

sys.exit(1 if failures else 0)
