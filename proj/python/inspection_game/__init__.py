# Copyright 2026 The Inspection Game Authors.
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

"""Zero-sum inspection game solvers."""

import json

from ._core import (
    DEFAULT_ENUMERATION_CAP,
    Instance,
    InspectionError,
    best_response,
    generate,
    parse_instance,
    project,
    run_cli,
    solve_json,
)
from . import _core

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "Instance",
    "InspectionError",
    "best_response",
    "certify",
    "generate",
    "load_instance",
    "parse_instance",
    "project",
    "run_cli",
    "solve",
    "solve_json",
]


def load_instance(path):
    with open(path, encoding="utf-8") as handle:
        return parse_instance(handle.read())


def solve(instance, method="cg-exact", epsilon=None, max_iterations=None,
          enumeration_cap=DEFAULT_ENUMERATION_CAP):
    """Solves the game and returns the result document as a dict."""
    return json.loads(solve_json(instance, method, epsilon, max_iterations,
                                 enumeration_cap))


def certify(instance, strategy, enumeration_cap=DEFAULT_ENUMERATION_CAP):
    """Certificates for a result dict or JSON string holding sigma_D."""
    text = strategy if isinstance(strategy, str) else json.dumps(strategy)
    attacker, defender, exact = _core.certify(instance, text, enumeration_cap)
    return {
        "attacker_best_response": attacker,
        "defender_best_response": defender,
        "defender_best_response_kind": "exact" if exact else "bound",
    }
