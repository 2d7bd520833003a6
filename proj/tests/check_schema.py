#!/usr/bin/env python3
"""Validate JSON goldens and data files against the published schemas.

usage: check_schema.py SCHEMA_DIR GOLDEN_DIR [SCHEMA_NAME=FILE ...]

Golden *.json files are matched to SCHEMA_DIR/<command>.schema.json through
their "command" field. Extra arguments name a schema explicitly.
"""
import json
import pathlib
import sys

import jsonschema
from referencing import Registry, Resource


def load_registry(schema_dir):
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        schemas[path.name] = doc
    registry = Registry().with_resources(
        (name, Resource.from_contents(doc)) for name, doc in schemas.items())
    return schemas, registry


def check(doc, schema, registry, label):
    validator = jsonschema.Draft202012Validator(schema, registry=registry)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
    for e in errors:
        print(f"FAIL {label}: {'/'.join(map(str, e.path))}: {e.message}")
    if not errors:
        print(f"ok   {label}")
    return not errors


def main(argv):
    if len(argv) < 3:
        print(__doc__)
        return 2
    schema_dir, golden_dir = pathlib.Path(argv[1]), pathlib.Path(argv[2])
    schemas, registry = load_registry(schema_dir)
    for doc in schemas.values():
        jsonschema.Draft202012Validator.check_schema(doc)
    ok = True
    goldens = sorted(golden_dir.glob("*.json"))
    if not goldens:
        print(f"no JSON goldens in {golden_dir}")
        return 1
    for path in goldens:
        doc = json.loads(path.read_text())
        name = f"{doc.get('command')}.schema.json"
        if name not in schemas:
            print(f"FAIL {path.name}: no schema {name}")
            ok = False
            continue
        ok &= check(doc, schemas[name], registry, path.name)
    for extra in argv[3:]:
        schema_name, _, file_name = extra.partition("=")
        path = pathlib.Path(file_name)
        ok &= check(json.loads(path.read_text()), schemas[f"{schema_name}.schema.json"], registry, path.name)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv))
