# Copyright 2026 The snakevqe Authors
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
import math

import numpy as np
import pytest

import snakevqe as sv


def test_h2_ucc_closed_form():
    h = sv.synth_h2_family().hamiltonian(0)
    c = {w: h.coeff(w) for w in ("II", "ZI", "IZ", "ZZ", "XX", "YY")}
    a = sv.builtin_ansatz("h2_ucc")
    for theta in np.linspace(-3, 3, 13):
        expected = (c["II"] - c["ZZ"] + (c["ZI"] - c["IZ"]) * math.cos(2 * theta)
                    - (c["XX"] + c["YY"]) * math.sin(2 * theta))
        assert sv.energy(a, h, [theta]) == pytest.approx(expected, abs=1e-12)


def test_shift_rule_matches_finite_differences():
    rng = np.random.default_rng(0)
    h = sv.Hamiltonian(2, [(float(c), w) for c, w in zip(rng.uniform(-1, 1, 4), ["XY", "ZZ", "YX", "IZ"])])
    a = sv.builtin_ansatz("h2_nonconvex")
    theta = list(rng.uniform(-math.pi, math.pi, 2))
    assert np.allclose(sv.gradient(a, h, theta), sv.gradient_fd(a, h, theta), atol=1e-7)


def test_snake_reaches_exact_energies():
    fam = sv.synth_h2_family()
    family = sv.VQEFamily(fam, sv.builtin_ansatz("h2_ucc"))
    cfg = sv.SnakeConfig()
    cfg.alpha, cfg.beta, cfg.eta, cfg.gamma = 0.1, 3.0, 0.5, 0.01
    report = sv.snake_run(family, cfg, sv.random_init(len(fam), 1, -math.pi, math.pi, 0))
    assert report.converged
    assert report.theta.shape == (54, 1)
    exact = [sv.ground_energy(fam.hamiltonian(i)) for i in range(len(fam))]
    assert np.max(np.abs(np.array(report.values) - exact)) < 1e-6


def test_zero_stiffness_is_gradient_descent():
    st = sv.STFamily.uniform()
    init = sv.random_init(61, 1, -4, 4, 3)
    cfg = sv.SnakeConfig()
    cfg.alpha, cfg.beta, cfg.eta, cfg.max_iters = 0.0, 0.0, 0.01, 100
    gd = sv.GdConfig()
    gd.eta, gd.max_iters = 0.01, 100
    np.testing.assert_array_equal(sv.snake_run(st, cfg, init).theta, sv.gd_run(st, gd, init).theta)


def test_stiffness_matrix():
    A = sv.build_A(0.1, 3.0, 54)
    assert A[0, 0] == pytest.approx(18.2)
    assert A[0, 1] == pytest.approx(-12.1)
    assert A[0, 53] == pytest.approx(-12.1)
    assert A[0, 2] == 3.0
    assert np.allclose(A.sum(axis=1), 0.0)
    assert np.linalg.eigvalsh(A).min() > -1e-10
    with pytest.raises(sv.InputError):
        sv.build_A(1.0, 1.0, 4)


def test_st_minima():
    x_global, x_local, x_barrier = sv.st_minima(3.0)
    assert x_global < x_barrier < x_local
    assert sv.st_basin(-2.8, 3.0) == "global"
    assert sv.st_basin(2.8, 0.0) == "tie"


def test_invalid_input_raises():
    with pytest.raises(sv.InputError):
        sv.builtin_ansatz("nope")
    with pytest.raises(sv.InputError):
        sv.load_family("missing.json")
    cfg = sv.SnakeConfig()
    cfg.eta = 0.0
    with pytest.raises(sv.InputError):
        cfg.validate()


def test_family_round_trip(tmp_path):
    fam = sv.HamiltonianFamily("x", [(0.0, sv.Hamiltonian(1, [(1.0, "Z")])),
                                     (1.0, sv.Hamiltonian(1, [(0.5, "X")]))])
    sv.save_family(fam, tmp_path / "f.json")
    back = sv.load_family(tmp_path / "f.json")
    assert back.lambdas == [0.0, 1.0]
    assert [sv.ground_energy(back.hamiltonian(i)) for i in range(2)] == pytest.approx([-1.0, -0.5])


def test_cli_in_process(tmp_path):
    code, out, err = sv.run_cli(["oracle", "--synthetic", "h2", "--out", str(tmp_path)])
    assert code == 0, err
    rows = (tmp_path / "oracle.csv").read_text().splitlines()
    assert rows[0] == "lambda,exact_energy" and len(rows) == 55
    code, _, err = sv.run_cli(["solve", "--family", "missing.json"])
    assert code == 1 and err.count("\n") == 1

    code, _, err = sv.run_cli(["benchmark-st", "--seed", "7", "--out", str(tmp_path / "st")])
    assert code == 0, err
    summary = json.loads((tmp_path / "st" / "summary.json").read_text())
    assert summary["snake_global_fraction"] >= summary["gd_global_fraction"]
