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

"""Fair division of indivisible goods under matroid-rank valuations.

Instances, allocations, and reports are plain dicts mirroring the JSON file
schemas; the heavy lifting happens in the C++ extension module.
"""

import json as _json

from ._core import CapabilityError
from ._core import ContractViolation
from ._core import ParseError
from ._core import VerificationError
from . import _core

__all__ = [
    "CapabilityError",
    "ContractViolation",
    "ParseError",
    "VerificationError",
    "solve",
    "shares",
    "check",
    "certify_no_mms",
    "generate",
    "validate",
]


def solve(instance, fairness="mms"):
    """Allocation meeting the fairness notion ("mms" or "pmms"), as a dict
    report with bundles, per-agent values, welfare, shares, and traces."""
    return _json.loads(_core.solve(_json.dumps(instance), fairness))


def shares(instance, k):
    """Per-agent maximin shares over all goods split into k parts."""
    return _json.loads(_core.shares(_json.dumps(instance), k))


def check(instance, allocation, prop, alpha=(1, 1)):
    """Verdict dict for a fairness property: "ef", "ef1", "mms", or "pmms".

    alpha is a (numerator, denominator) pair scaling the share bound.
    """
    num, den = alpha
    return _json.loads(
        _core.check(_json.dumps(instance), _json.dumps(allocation), prop,
                    num, den))


def certify_no_mms(instance):
    """Certificate that no allocation meets every agent's full maximin
    share, or the first refuting allocation."""
    return _json.loads(_core.certify_no_mms(_json.dumps(instance)))


def generate(seed, family, agents, goods, *, blocks=-1, vertices=-1,
             slots=-1, dim=-1, sets=-1):
    """Deterministic seeded instance from the named valuation family."""
    return _json.loads(
        _core.generate(seed, family, agents, goods, blocks, vertices, slots,
                       dim, sets))


def validate(instance):
    """Round-trips the instance through exhaustive axiom checking and
    returns its canonical form."""
    return _json.loads(_core.validate(_json.dumps(instance)))
