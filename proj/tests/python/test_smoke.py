# Copyright 2026 The qwalk Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math
import os
import pathlib

import numpy as np
import pytest

import qwalk

DATA = pathlib.Path(os.environ.get("QWALK_DATA_DIR", pathlib.Path(__file__).parents[2] / "data"))


def test_coin_matrix_is_a_reflection():
    c = qwalk.coin_matrix(math.pi / 8)
    np.testing.assert_allclose(c @ c, np.eye(2), atol=1e-15)
    np.testing.assert_allclose(c, np.array([[1, 1], [1, -1]]) / math.sqrt(2), atol=1e-15)


def test_discriminate_matches_success_law():
    p = qwalk.UsdParams.from_alpha(0.707)
    out = qwalk.discriminate(p, qwalk.prepare_coin(p, "plus"))
    assert out[1] + out[-1] == pytest.approx(0.293, abs=1e-12)
    assert out[-1] < 1e-12
    assert qwalk.success_probability(p) == pytest.approx(0.293, abs=1e-15)


def test_superposition_at_45_degrees():
    p = qwalk.UsdParams.from_phi(math.pi / 4)
    out = qwalk.discriminate(p, qwalk.prepare_superposition(p, 1, 1))
    assert out[1] == pytest.approx((3 - 2 * math.sqrt(2)) / 2, abs=1e-12)
    assert out[-1] == pytest.approx(out[1], abs=1e-12)


def test_povm_elements_agree_and_sum_to_identity():
    p = qwalk.UsdParams.from_alpha(0.454)
    els = qwalk.povm_elements(p)
    for a, b in zip(els["walk"], els["closed_form"]):
        np.testing.assert_allclose(a, b, atol=1e-12)
    np.testing.assert_allclose(sum(els["walk"]), np.eye(2), atol=1e-12)


def test_compile_and_run_protocol():
    p = qwalk.UsdParams.from_phi(math.pi / 4)
    protocol, angles = qwalk.compile(p)
    assert len(protocol) == 3
    assert math.degrees(angles["theta_0_3"]) == pytest.approx(22.5)
    steps = qwalk.run(protocol, qwalk.prepare_coin(p, "plus"), per_step=True)
    assert steps[0][1] == pytest.approx(math.cos(math.pi / 8) ** 2, abs=1e-12)
    assert steps[-1][3] == pytest.approx(math.sqrt(0.5), abs=1e-12)


def test_protocol_text_round_trip():
    text = (DATA / "protocols" / "usd_45.walk").read_text()
    p = qwalk.Protocol(text)
    again = qwalk.Protocol(p.format())
    assert qwalk.run(p, (1, 0)) == pytest.approx(qwalk.run(again, (1, 0)))
    assert qwalk.run(qwalk.Protocol("identity\n-\nidentity\n"), (1, 0)) == {3: 1.0}


def test_kraus_from_walk():
    p = qwalk.UsdParams.from_phi(math.pi / 3)
    protocol, _ = qwalk.compile(p)
    k = qwalk.kraus_from_walk(protocol, 3)
    t = math.tan(math.pi / 6)
    np.testing.assert_allclose(k.conj().T @ k, np.diag([1 - t * t, 0]), atol=1e-12)


def test_sampling_is_reproducible():
    d = {1: 0.25, 3: 0.75}
    a = qwalk.sample_counts(d, 1000, 42)
    assert a == qwalk.sample_counts(d, 1000, 42)
    assert sum(a.values()) == 1000
    hat = {x: n / 1000 for x, n in a.items()}
    assert 0 <= qwalk.l1_distance(hat, d) < 0.1


def test_report_matches_cli_structure():
    r = qwalk.report("discriminate", alpha=0.5, shots=500, seed=3)
    assert r["command"] == "discriminate"
    assert r["sampling"]["seed"] == 3
    assert [o["position"] for o in r["outcomes"]] == [1, -1, 3]
    rows = qwalk.report("table1", shots=200)["rows"]
    assert len(rows) == 12
    w = qwalk.report("walk", protocol_file=str(DATA / "protocols" / "identity3.walk"), state="H")
    assert w["steps"][-1]["distribution"] == [{"position": 3, "probability": 1.0}]


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        qwalk.UsdParams.from_alpha(1.0)
    with pytest.raises(qwalk.DomainError):
        qwalk.Protocol("0:50\n")
    with pytest.raises(OSError):
        qwalk.report("walk", protocol_file="/nonexistent/none.walk")
    with pytest.raises(ValueError):
        qwalk.prepare_coin(qwalk.UsdParams.from_alpha(0.5), "sideways")
