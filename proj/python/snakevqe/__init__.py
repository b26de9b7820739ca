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


"""Collective VQE: jointly optimize a family of variational problems with the
snake (active contour) algorithm."""

from ._core import (
    Ansatz,
    GdConfig,
    Hamiltonian,
    HamiltonianFamily,
    InputError,
    NonFiniteError,
    ObjectiveFamily,
    QuadraticFamily,
    RunReport,
    SnakeConfig,
    STFamily,
    VQEFamily,
    build_A,
    builtin_ansatz,
    builtin_ansatz_names,
    eigenvalues,
    energy,
    gd_run,
    gradient,
    gradient_fd,
    grid_scan_min,
    ground_energy,
    load_family,
    random_init,
    resolve_ansatz,
    run_cli,
    save_family,
    snake_run,
    st_basin,
    st_minima,
    synth_h2_family,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
