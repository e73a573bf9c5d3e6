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

import pytest

import fairdiv

# Six goods: a partition-matroid agent (one good from {0,1}, one from {2,3},
# two from {4,5}) and an agent who counts everything. The reference
# allocation is envy-free but leaves agent 0 below her pairwise share of 3.
SIX_GOODS = {
    "schema": 1,
    "m": 6,
    "agents": [
        {
            "kind": "partition",
            "blocks": [[0, 1], [2, 3], [4, 5]],
            "caps": [1, 1, 2],
        },
        {"kind": "uniform", "k": 6},
    ],
}

REFERENCE = {"schema": 1, "m": 6, "bundles": [[4, 5], [0, 1, 2, 3]]}

# Two binary XOS agents on four goods whose shares cannot both be met.
XOS_FOUR = {
    "schema": 1,
    "m": 4,
    "agents": [
        {"kind": "binary-xos", "family": [[0, 1], [2, 3]]},
        {"kind": "binary-xos", "family": [[0, 2], [1, 3]]},
    ],
}


def test_solve_mms_reaches_full_shares():
    report = fairdiv.solve(SIX_GOODS, "mms")
    assert report["fairness"] == "mms"
    assert report["welfare"] == 6
    assert report["agent_values"] == [3, 3]
    assert sorted(g for b in report["allocation"]["bundles"] for g in b) == \
        list(range(6))
    assert all(entry["mu"] == 3 for entry in report["shares"])


def test_solve_pmms_decreases_potential():
    report = fairdiv.solve(SIX_GOODS, "pmms")
    assert report["welfare"] == 6
    trace = report["potential_trace"]
    assert all(a > b for a, b in zip(trace, trace[1:]))


def test_shares_match_documented_values():
    report = fairdiv.shares(SIX_GOODS, 2)
    assert [entry["mu"] for entry in report["shares"]] == [3, 3]
    xos = fairdiv.shares(XOS_FOUR, 2)
    assert [entry["mu"] for entry in xos["shares"]] == [2, 2]


def test_check_reference_allocation():
    assert fairdiv.check(SIX_GOODS, REFERENCE, "ef")["holds"]
    assert fairdiv.check(SIX_GOODS, REFERENCE, "ef1")["holds"]
    verdict = fairdiv.check(SIX_GOODS, REFERENCE, "pmms")
    assert not verdict["holds"]
    assert verdict["witness_agent"] == 0
    assert verdict["witness_bound"] == 3
    # At a third of the share the same allocation passes.
    assert fairdiv.check(SIX_GOODS, REFERENCE, "pmms", alpha=(1, 3))["holds"]


def test_certify_no_mms():
    verdict = fairdiv.certify_no_mms(XOS_FOUR)
    assert verdict["certified"]
    refuted = fairdiv.certify_no_mms(SIX_GOODS)
    assert not refuted["certified"]
    assert refuted["witness_allocation"] is not None


def test_generate_is_deterministic():
    first = fairdiv.generate(99, "graphic", 2, 7)
    second = fairdiv.generate(99, "graphic", 2, 7)
    assert first == second
    assert fairdiv.generate(100, "graphic", 2, 7) != first
    assert fairdiv.validate(first) == first


def test_errors_surface_as_python_exceptions():
    with pytest.raises(fairdiv.CapabilityError):
        fairdiv.solve(XOS_FOUR, "mms")
    with pytest.raises(fairdiv.ParseError):
        fairdiv.validate({"schema": 1, "m": 4, "agents": "nope"})
    with pytest.raises(ValueError):
        fairdiv.solve(SIX_GOODS, "fairest")
