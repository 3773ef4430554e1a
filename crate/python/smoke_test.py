"""Smoke test for the pyhopfgc extension module.

Build and install first:  pip install --no-build-isolation -e crates/python
"""

import json
import sys

import pyhopfgc as h


def check(cond, what):
    if not cond:
        print(f"FAIL {what}")
        sys.exit(1)
    print(f"ok   {what}")


a = h.Matrix([[2, 1], [1, 1]])
check((a @ a.inverse()) == h.Matrix.identity(2), "inverse over Q")
check(h.Matrix([[1, 1], [1, 1]], field="gf:2").rank() == 1, "rank over GF(2)")
check(a.kron(h.Matrix.identity(3)).shape == (6, 6), "kron shape")
check(h.Matrix([["1/2", 0]]).to_list() == [["1/2", "0"]], "rational entries")

corpus = h.corpus("q")
check(len(corpus) > 30, f"{len(corpus)} corpus bundles")

for name, bundle in corpus.items():
    reports = bundle.verify()
    recorded = json.loads(bundle.to_json())["entries"][name].get("expected_failures", [])
    failed = reports[name].failed_laws
    check(failed == sorted(recorded), f"verify {name}")

rep = corpus["graded-S3-sign"].verify(field="gf:3")["graded-S3-sign"]
check(rep.all_passed, "field override gf:3")
dual = corpus["graded-S3-sign"].dualize("graded-S3-sign")
check(all(dual.verify().values()), "dual of graded S3 passes")

fthm = corpus["induced-regular-const-kC2-S3"].fthm("induced-regular-const-kC2-S3")
laws = {c[0] for r in fthm.values() for c in r.checks()}
check("component projection injective" in laws, "fthm component projection")

yd = corpus["yd-classical-kC2"].yd_check("yd-classical-kC2")
check(all(yd.values()), "classical YD module is a center object")
lift = corpus["lift-S3-(12)-trivial"].yd_check("lift-S3-(12)-trivial")
check(all(lift.values()), "lift at (12)")
refused = corpus["lift-dual-S3-1-section"].yd_check("lift-dual-S3-1-section")
check(any("refused" in r.failed_laws for r in refused.values()), "ill-defined lift refused")

demo = h.set_demo()
check(sorted(demo) == ["C2", "C3", "C4", "S3"] and all(demo.values()), "set demo")
check(h.render(demo, "json").startswith("{"), "render json")

try:
    h.Bundle.from_json("{}")
    check(False, "malformed bundle rejected")
except h.HopfgcError as e:
    check("schema_version" in str(e), "malformed bundle rejected")

print("all smoke checks passed")
