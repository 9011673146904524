# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import json
import os
import pathlib

import pytest

import latkit

DATA = pathlib.Path(
    os.environ.get("LATKIT_DATA_DIR", pathlib.Path(__file__).parents[2] / "data"))


def test_poset_queries():
    p = latkit.b2()
    assert p.labels == ["0", "a", "b", "1"]
    assert p.join(["a", "b"]) == "1"
    assert p.meet(["a", "b"]) == "0"
    assert p.top == "1" and p.bottom == "0"
    assert p.upper_bounds(["a"]) == ["a", "1"]
    v = latkit.v4()
    assert v.meet(["a", "b"]) is None
    assert v.lower_bounds(["a", "b"]) == ["c", "d"]


def test_bad_posets_raise():
    with pytest.raises(latkit.LatkitError, match="CycleDetected"):
        latkit.Poset(["x", "y"], [("x", "y"), ("y", "x")])
    with pytest.raises(latkit.LatkitError, match="UnknownLabel"):
        latkit.Poset(["x"], [("x", "z")])


def test_counts():
    assert len(latkit.closure_systems(latkit.chain(2))) == 2
    assert len(latkit.closure_systems(latkit.chain(3))) == 4
    assert len(latkit.closure_systems(latkit.b2())) == 7
    assert len(latkit.nuclei(latkit.b2())) == 4
    assert len(latkit.filters(latkit.b2())) == 4


def test_generate_and_tarski():
    c3 = latkit.chain(3)
    g = latkit.Map(c3, {"0": "1", "1": "2", "2": "2"}, name="g")
    op = latkit.generate_closure(c3, [g])
    assert op.table == {"0": "2", "1": "2", "2": "2"}
    assert op.fix == ["2"]
    assert latkit.kleene_generate(c3, [g]) == op
    assert latkit.classify(op)["closure_operator"]
    assert latkit.tarski(g) == "2"
    with pytest.raises(latkit.LatkitError, match="table not total"):
        latkit.Map(c3, {"0": "1"})


def test_frames_and_hmj():
    b2 = latkit.b2()
    assert latkit.validate_structure(b2)[0] == "frame"
    assert latkit.heyting_implication(b2, "a", "0") == "b"
    gamma = latkit.Map(b2, {"0": "0", "a": "1", "b": "1", "1": "1"})
    assert latkit.nuclear_core(gamma) == latkit.identity(b2)
    assert latkit.least_nucleus_above(gamma).fix == ["1"]
    r = latkit.hmj(b2)
    assert r["antiisomorphism_verified"]
    assert len(r["pairs"]) == 4
    with pytest.raises(latkit.LatkitError, match="NotAFrame"):
        latkit.heyting_implication(latkit.m3(), "a", "b")


def test_rules_and_convexity():
    c3 = latkit.chain(3)
    rules = latkit.default_rules(c3)
    for subset in (["0"], ["1"], ["0", "2"]):
        assert latkit.rule_closure(c3, rules, subset) == latkit.clsys(c3, subset)
    assert latkit.dcclsys(c3, ["0"]) == latkit.clsys(c3, ["0"])
    report = latkit.convexity(latkit.b2())
    assert report["anti_exchange"] and report["cas"] and report["witness"] is None


def test_caps():
    with pytest.raises(latkit.CapExceeded):
        latkit.closure_systems(latkit.chain(3), cap=2)
    assert len(latkit.closure_systems(latkit.chain(3), cap=2, force=True)) == 4
    assert issubclass(latkit.CapExceeded, latkit.LatkitError)


def test_run_matches_cli():
    code, out, err = latkit.run("closure-systems", str(DATA / "c3.json"))
    assert code == 0 and err == ""
    assert json.loads(out)["count"] == 4
    code, _, _ = latkit.run("closure-systems", str(DATA / "c3.json"), cap=2)
    assert code == 2
    code, _, err = latkit.run("validate", str(DATA / "cycle.json"))
    assert code == 1 and "CycleDetected" in err
