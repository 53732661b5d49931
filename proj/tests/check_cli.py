"""Runs the grcodes CLI, checks exit codes and validates every JSON report
against the schemas in schemas/."""

import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

CLI = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])

registry = Registry()
for path in SCHEMAS.glob("*.schema.json"):
    registry = registry.with_resource(path.name, Resource.from_contents(json.loads(path.read_text())))


def validator(name):
    schema = json.loads((SCHEMAS / name).read_text())
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema, registry=registry)


failures = []


def run(args, schema, exit_code=0, lines=False, check=None):
    proc = subprocess.run([CLI, "--json-only", *args], capture_output=True, text=True, timeout=300)
    label = " ".join(args)
    if proc.returncode != exit_code:
        failures.append(f"{label}: exit {proc.returncode}, expected {exit_code}\n{proc.stderr}")
        return None
    docs = [json.loads(l) for l in proc.stdout.splitlines() if l.strip()] if lines else [json.loads(proc.stdout)]
    v = validator(schema)
    for doc in docs:
        for err in v.iter_errors(doc):
            failures.append(f"{label}: {err.message} at {list(err.absolute_path)}")
    if check:
        try:
            check(docs if lines else docs[0])
        except AssertionError as e:
            failures.append(f"{label}: {e}")
    return docs


EUCLID = "e + y2 + x2 + x2y2 + x3y + x3y2 + x4y + x4y2"
HERM = "1 + w5*b + 2*b2 + w6*b3 + w3*b4 + w2*a + w6*ab + w7*ab2 + w7*ab3 + w7*ab4"
SYMP = ("b2 + 2b4 + b5 + 2b6 + 2b7 + 2b8 + 2b9 + 2b10 + 2a + 2ab + 2ab2 + 2ab3 + 2ab4 + "
        "2ab5 + 2ab6 + 2ab7 + 2ab8 + 2ab9 + 2ab10")
G2D = "x4y4 + x4y2 + x4 + x3y4 + x3y2 + x3 + y4 + y2 + 1"


def expect(cond, msg):
    assert cond, msg


def qparams(d):
    return (d["n"], d["k"], d["d"], d["base_q"])


run(["code", "--group", "C5xC3:inner=2", "--element", EUCLID, "--matrix"], "code.schema.json",
    check=lambda d: expect((d["n"], d["k"], d["d"]) == (15, 4, 8) and len(d["generator"]) == 15, d))
run(["qecc", "--group", "C5xC3:inner=2", "--element", EUCLID, "--kind", "euclidean"], "qecc.schema.json",
    check=lambda d: expect(qparams(d) == (15, 7, 3, 2), d))
run(["qecc", "--field", "GF(9)", "--group", "D5:gens=b,a", "--element", HERM, "--kind", "hermitian"],
    "qecc.schema.json", check=lambda d: expect(qparams(d) == (10, 2, 4, 3), d))
run(["qecc", "--field", "GF(3)", "--group", "D11:gens=b,a", "--element", SYMP, "--kind", "symplectic"],
    "qecc.schema.json",
    check=lambda d: expect(qparams(d) == (11, 0, 5, 3) and d["degenerate_dual_gap"], d))
run(["qecc", "--group", "D5:gens=b,a", "--element", "1 + b + b2 + b3 + ab + ab2",
     "--element-b", "1 + a + ab + ab3", "--kind", "symplectic-pair"], "qecc.schema.json",
    check=lambda d: expect(qparams(d) == (10, 1, 4, 2), d))
run(["qecc", "--group", "C4", "--element", "e + x", "--kind", "euclidean"], "qecc.schema.json", exit_code=3,
    check=lambda d: expect(not d["certificate"]["holds"], d))

run(["twod", "--q", "2", "--l", "15", "--m", "12", "--g", G2D, "--seed", "1", "--samples", "1000000",
     "--target", "6"], "twod.schema.json",
    check=lambda d: expect(d["C"] == [180, 88] and d["Cstar"] == [180, 16, 32] and d["dual_containing"]
                           and d["C_d_upper_bound"] == 6, d))
run(["twod", "--q", "2", "--l", "2", "--m", "2", "--g", "x + y + 1"], "twod.schema.json",
    check=lambda d: expect(d["divides"] is False, d))
run(["twod", "--q", "3", "--l", "2", "--m", "1", "--g", "1"], "twod.schema.json",
    check=lambda d: expect(d["dual_containing"] is True, d))

run(["search", "--group", "C5xC3:inner=2", "--max-weight", "8", "--budget", "30000"], "search-record.schema.json",
    lines=True, check=lambda ds: expect(any(r["element"] == EUCLID and r["qecc"]["k"] == 7 for r in ds), "missing example"))
run(["search", "--group", "D5:gens=b,a", "--kind", "symplectic-pair", "--mode", "random", "--seed", "42",
     "--max-weight", "4", "--budget", "300", "--timestamp"], "search-record.schema.json", lines=True,
    check=lambda ds: expect(ds and all("element_b" in r and "timestamp" in r for r in ds), "pair records"))
run(["search", "--group", "C5xC3:inner=2", "--max-weight", "8"], "error.schema.json", exit_code=4)

run(["field-table", "--field", "GF(9)"], "field-table.schema.json",
    check=lambda d: expect(d["modulus"] == [2, 2, 1] and len(d["mul"]) == 9, d))
run(["field-table", "--field", "GF(2^7)"], "field-table.schema.json",
    check=lambda d: expect("mul" not in d and len(d["elements"]) == 128, d))
run(["group-table", "--group", "D5:gens=b,a"], "group-table.schema.json",
    check=lambda d: expect(d["elements"][:2] == ["e", "b"] and d["identity"] == 1, d))

run(["code", "--group", "D3", "--element", "b + a +"], "error.schema.json", exit_code=2,
    check=lambda d: expect(d["kind"] == "parse" and d["position"] == 7, d))
run(["code", "--group", "C5sd2C3", "--element", "e"], "error.schema.json", exit_code=2,
    check=lambda d: expect(d["kind"] == "input", d))
run(["code", "--field", "GF(6)", "--group", "C3", "--element", "e"], "error.schema.json", exit_code=2)

for f in failures:
    print("FAIL", f)
print(f"{'all CLI checks passed' if not failures else str(len(failures)) + ' CLI checks failed'}")
sys.exit(1 if failures else 0)
