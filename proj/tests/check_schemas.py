"""Runs the CLI and validates every JSON it writes against schemas/."""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

cli, schema_dir, work = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
work.mkdir(parents=True, exist_ok=True)

schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.json")}
registry = Registry().with_resources((s["$id"], Resource.from_contents(s)) for s in schemas.values())

quartic = ["--preset", "kameyama-quartic", "--a", "0+3i"]
runs = {
    "report": [
        ["classify", *quartic],
        ["recursion", *quartic],
        ["monodromy", *quartic],
        ["verify-claims"],
    ],
    "certificate": [
        ["figure1", "--preset", "kameyama-quartic", "--a", "0+1.665i"],
        ["t-cantor", *quartic],
        ["t-cantor", "--preset", "quadratic", "--c", "4"],
        ["certify-scantor", "--preset", "quadratic", "--c", "4", "--n", "1", "--family", "disc", "--disc", "0+0i,3"],
    ],
}

failures = 0
for kind, commands in runs.items():
    validator = jsonschema.Draft202012Validator(schemas[f"{kind}.schema.json"], registry=registry)
    for k, args in enumerate(commands):
        out = work / f"{kind}{k}.json"
        subprocess.run([cli, *args, "--out", str(out)], check=True)
        doc = json.loads(out.read_text())
        errors = list(validator.iter_errors(doc))
        for e in errors:
            print(f"{args[0]}: {e.json_path}: {e.message}")
        failures += len(errors)
        if kind == "certificate":
            replayed = work / f"replay{k}.json"
            subprocess.run([cli, "replay", "--certificate", str(out), "--out", str(replayed)], check=True)
            errors = list(jsonschema.Draft202012Validator(schemas["report.schema.json"], registry=registry).iter_errors(json.loads(replayed.read_text())))
            failures += len(errors)
        print(f"ok {args[0]}" if not errors else f"FAIL {args[0]}")

sys.exit(1 if failures else 0)
