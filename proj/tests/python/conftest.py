import json
import os
import pathlib

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

SCHEMA_DIR = pathlib.Path(os.environ.get("TOTVAL_SCHEMA_DIR", pathlib.Path(__file__).parents[2] / "schema"))


@pytest.fixture(scope="session")
def validator():
    resources = []
    for path in SCHEMA_DIR.glob("*.schema.json"):
        schema = json.loads(path.read_text())
        resources.append((path.name, Resource.from_contents(schema)))
    registry = Registry().with_resources(resources)

    def make(name):
        schema = json.loads((SCHEMA_DIR / name).read_text())
        return Draft202012Validator(schema, registry=registry)

    return make
