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

import math
import os

import pytest

import inspection_game as ig

DATA = os.environ.get(
    "INSPECTION_TEST_DATA",
    os.path.join(os.path.dirname(__file__), os.pardir, "data"))


@pytest.fixture
def network():
    return ig.load_instance(os.path.join(DATA, "sample_network.json"))


def test_instance_properties(network):
    assert network.num_locations == 4
    assert network.num_components == 7
    assert (network.r_d, network.r_a) == (2, 2)
    again = ig.parse_instance(network.to_json())
    assert again.to_json() == network.to_json()


def test_single_location_value():
    text = ('{"locations": ["v"], "components": ["e"], '
            '"monitoring": {"v": ["e"]}, "p": {"v": 0.6}, '
            '"r_D": 1, "r_A": 1}')
    result = ig.solve(ig.parse_instance(text))
    assert math.isclose(result["value"], 0.4, abs_tol=1e-9)


def test_methods_agree(network):
    exact = ig.solve(network)
    mwu = ig.solve(network, method="mwu-exact", epsilon=0.1)
    assert exact["method"] == "cg-exact"
    worst = mwu["certificates"]["attacker_best_response"]
    assert exact["value"] - 1e-9 <= worst <= exact["value"] + 0.1 + 1e-6
    cert = ig.certify(network, exact)
    assert math.isclose(cert["attacker_best_response"], exact["value"],
                        abs_tol=1e-6)
    assert cert["defender_best_response_kind"] == "exact"


def test_project():
    assert ig.project([2.0, 1.0, 1.0], 1) == pytest.approx([0.5, 0.25, 0.25])
    assert ig.project([2.0, 1.0, 1.0], 1, "linear") == pytest.approx(
        [0.5, 0.25, 0.25])


def test_best_response(network):
    names, value = ig.best_response(network, [0.2] * 7, "fg")
    assert len(names) == 2
    assert 0.0 <= value <= 2.0


def test_errors(network):
    with pytest.raises(ig.InspectionError) as info:
        ig.project([1.0, 0.0], 1)
    assert info.value.code == "domain"
    with pytest.raises(ig.InspectionError) as info:
        ig.parse_instance("{")
    assert info.value.code == "validation"
    with pytest.raises(ig.InspectionError) as info:
        ig.best_response(network, [0.2] * 7, "exact", enumeration_cap=2)
    assert info.value.code == "size-limit"


def test_generate_is_deterministic():
    a = ig.generate(n=10, m=25, seed=3, r_d=2)
    b = ig.generate(n=10, m=25, seed=3, r_d=2)
    assert a.to_json() == b.to_json()
    assert (a.num_locations, a.num_components, a.r_d) == (10, 25, 2)


def test_run_cli():
    status, out, _ = ig.run_cli(["--help"])
    assert status == 0
    assert "solve" in out
