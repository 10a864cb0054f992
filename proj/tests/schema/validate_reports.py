"""Runs each edgebal subcommand and validates its JSON output against the shipped schema."""

import json
import subprocess
import sys

import jsonschema


def run(binary, args, stdin=""):
    proc = subprocess.run([binary, *args], input=stdin, capture_output=True, text=True, check=False)
    if proc.returncode != 0:
        raise SystemExit(f"{args}: exit {proc.returncode}: {proc.stderr}")
    return proc.stdout


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    envelope = jsonschema.Draft202012Validator(schema)
    catalog = jsonschema.Draft202012Validator(
        {"$schema": schema["$schema"], "$defs": schema["$defs"], "$ref": "#/$defs/catalog_line"}
    )

    k24 = run(binary, ["generate", "complete_bipartite", "2", "4"])
    reports = [
        run(binary, ["generate", "hypercube", "3", "--json"]),
        run(binary, ["classify"], k24),
        run(binary, ["classify", "--convention", "strict"], "Cl\nBw\n"),
        run(binary, ["index"], k24),
        run(binary, ["index", "--szeged"], k24),
        run(binary, ["product", "--lexicographic", "cycle(4)", "path(3)", "--json"]),
        run(binary, ["verify"]),
    ]
    checked = 0
    for text in reports:
        try:
            documents = [json.loads(text)]
        except json.JSONDecodeError:
            documents = [json.loads(line) for line in text.splitlines() if line.strip()]
        for doc in documents:
            envelope.validate(doc)
            checked += 1
    for line in run(binary, ["enumerate", "--n", "5"]).splitlines():
        catalog.validate(json.loads(line))
        checked += 1
    print(f"validated {checked} documents")


if __name__ == "__main__":
    main()
