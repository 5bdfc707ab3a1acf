#!/usr/bin/env python3
"""Validate CLI JSON output against the schemas shipped in schemas/.

The schema is picked from the document itself: error reports, fixtures
(including generated ones), or the report of the named command.
"""
import argparse
import json
import pathlib
import sys

import jsonschema

SCHEMA_DIR = pathlib.Path(__file__).resolve().parent.parent / "schemas"


def schema_name(doc):
    if "error" in doc:
        return "error"
    if "kind" in doc:
        return "fixture"
    return doc["command"]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("files", nargs="+", type=pathlib.Path)
    args = ap.parse_args()
    failed = 0
    for path in args.files:
        try:
            doc = json.loads(path.read_text())
            name = schema_name(doc)
            schema = json.loads((SCHEMA_DIR / f"{name}.schema.json").read_text())
            jsonschema.Draft202012Validator(schema).validate(doc)
        except (OSError, KeyError, ValueError, jsonschema.ValidationError) as exc:
            failed += 1
            print(f"{path}: invalid ({type(exc).__name__}: {exc})", file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
