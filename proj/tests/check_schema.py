"""Validate a report.json against the published schema."""
import json
import sys

import jsonschema

with open(sys.argv[1]) as f:
    schema = json.load(f)
with open(sys.argv[2]) as f:
    report = json.load(f)
jsonschema.validate(report, schema)
print("report.json conforms")
