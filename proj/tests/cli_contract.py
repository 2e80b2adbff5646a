#!/usr/bin/env python3
"""Exit codes and JSON report shape of the amalgam CLI."""

import json
import subprocess
import sys

import jsonschema

BOOLEAN3 = "amalg(zmod(2), prod(zmod(2), zmod(2), zmod(2)), diag, full)"
SQUARE_ZERO = "amalg(zmod(2), triv(zmod(2), coset(zero)), canon, ideal((0,1)))"

failures = []


def run(cli, *args):
    return subprocess.run([cli, *args], capture_output=True, text=True, timeout=240)


def check(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + (": " + detail if detail and not cond else ""))
    if not cond:
        failures.append(name)


def report(cli, validator, name, *args):
    p = run(cli, *args, "--format", "json")
    check(name + " exits 0", p.returncode == 0, p.stderr.strip())
    try:
        doc = json.loads(p.stdout)
    except json.JSONDecodeError as e:
        check(name + " emits json", False, str(e))
        return None
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
    check(name + " matches schema", not errors, "; ".join(e.message for e in errors[:3]))
    return doc


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    doc = report(cli, validator, "analyze", "analyze", "zmod(6)")
    if doc:
        check("analyze spec_size", doc["spec_size"] == 2)
        check("analyze vnr", doc["properties"]["vnr"]["holds"] is True)

    doc = report(cli, validator, "check vnr", "check", "vnr", "dupl(zmod(4), ideal(2))")
    if doc:
        r = doc["report"]
        check("check vnr lhs", r["lhs"] is False)
        check("check vnr condition 1", r["conditions"][0]["holds"] is False)
        check("check vnr verdict", r["verdict"] == "agree")

    doc = report(cli, validator, "falsifier", "check", "vnr", SQUARE_ZERO)
    if doc:
        c = doc["report"]["conditions"][1]
        check("falsifier condition 2", c["holds"] is False and c["witness"] == "(0,1)")

    report(cli, validator, "spectrum", "spectrum", "dupl(zmod(12), ideal(2))")

    doc = report(cli, validator, "check sft", "check", "sft", BOOLEAN3, "--inject-exponents", "2,1,1")
    if doc:
        check("check sft certified", doc["report"]["all_primes_certified"] is True)

    doc = report(cli, validator, "cert b", "cert", BOOLEAN3, "--prime", "ideal((1,0,0),(0,1,0))", "--side", "b")
    if doc:
        check("cert b exponent", doc["trace"]["combined"]["exponent"] == 3)
    report(cli, validator, "cert a", "cert", "dupl(zmod(4), ideal(2))", "--prime", "ideal(2)", "--side", "a")

    doc = report(cli, validator, "corpus", "corpus", "--max-order", "16", "--sample", "12", "--seed", "5")
    if doc:
        check("corpus sample size", len(doc["instances"]) == 12)
        check("corpus ok", doc["summary"]["ok"] is True)
    args = ["corpus", "--max-order", "16", "--sample", "12", "--seed", "5", "--format", "json"]
    check("corpus deterministic", run(cli, *args).stdout == run(cli, *args).stdout)

    doc = report(cli, validator, "timing", "analyze", "zmod(4)", "--timing")
    if doc:
        check("timing present", "timing" in doc)
    p = run(cli, "analyze", "zmod(4)", "--format", "json")
    check("timing absent by default", "timing" not in json.loads(p.stdout))

    p = run(cli, "analyze", "zmod(")
    check("parse error exits 2", p.returncode == 2, str(p.returncode))
    check("parse error position", "1:6" in p.stderr, p.stderr)
    check("bad family exits 2", run(cli, "corpus", "--families", "bogus").returncode == 2)
    check("elaboration error exits 2", run(cli, "analyze", "zmod(1)").returncode == 2)
    check("unknown subcommand exits 2", run(cli, "frobnicate").returncode == 2)
    check("ceiling exits 2", run(cli, "spectrum", "zmod(600)", "--ceiling", "100").returncode == 2)
    check("help exits 0", run(cli, "--help").returncode == 0)

    if failures:
        print(f"{len(failures)} contract check(s) failed")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
