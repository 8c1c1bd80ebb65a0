import json

import pytest

import totval


def run(*args):
    return totval.run_cli(list(args))


def test_examples():
    assert run("hnp", "--n", "8", "--p", "1") == (0, "[3,8; 1/8 + 1/8 + 3/4]\n", "")
    assert run("power", "--tv", "[1,6; 1/6 + 1/3 + 1/2]", "--k", "2")[1] == "[1,3; 1/3 + 1/3 + 1/3]\n"
    assert run("oracle", "--n", "8", "--p", "1", "--k", "1", "--compare")[:2] == (0, "MATCH\n")
    code, out, _ = run("verify", "irr1")
    assert code == 0 and "PASS" in out


def test_invalid_input():
    code, out, err = run("power", "--tv", "garbage", "--k", "2")
    assert code == 2 and out == ""
    assert err.count("\n") == 1


@pytest.mark.parametrize(
    "schema,args",
    [
        ("total_valency.schema.json", ["hnp", "--n", "12", "--p", "2"]),
        ("total_valency.schema.json", ["power", "--tv", "[1,6; 1/6 + 1/3 + 1/2]", "--k", "6"]),
        ("quotient.schema.json", ["quotient", "--tv", "[3,8; 1/8 + 1/8 + 3/4]"]),
        ("check.schema.json", ["check", "harvey", "--n", "8", "--quotient-genus", "0", "--indices", "8,8,4"]),
        ("check.schema.json", ["check", "involution", "--tv", "[2,2; 1/2 + 1/2]"]),
        ("oracle.schema.json", ["oracle", "--n", "6", "--p", "3", "--k", "2", "--compare"]),
        ("centralizer.schema.json", ["centralizer", "--tv", "[2,6; 1/6 + 1/6 + 2/3]"]),
        ("centralizer.schema.json", ["centralizer", "--tv", "[3,8; 1/8 + 5/8 + 1/4]"]),
        ("verify.schema.json", ["verify", "brto"]),
        ("verify.schema.json", ["verify", "irr1"]),
        ("verify.schema.json", ["verify", "lemma-inv", "--max-genus", "5"]),
        ("verify.schema.json", ["verify", "centralizer", "--max-genus", "4"]),
    ],
)
def test_json_output_matches_schema(validator, schema, args):
    code, out, _ = run("--format", "json", *args)
    assert code == 0
    validator(schema).validate(json.loads(out))


def test_enumerate_lines_match_schema(validator):
    code, out, _ = run("--format", "json", "enumerate", "--genus", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines
    v = validator("census_entry.schema.json")
    for line in lines:
        v.validate(json.loads(line))


def test_meta_is_outside_payload():
    plain = run("--format", "json", "hnp", "--n", "8", "--p", "1")
    meta = run("--format", "json", "--meta", "hnp", "--n", "8", "--p", "1")
    assert plain[1] == meta[1]
    assert json.loads(meta[2])["tool"] == "totval"
