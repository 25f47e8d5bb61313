# Copyright 2026 The rmtlab Authors
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

"""Random-matrix laboratory: ensembles, states, dynamics, observables, theory
curves and the Monte Carlo experiment harness."""

import json as _json

from . import _core
from ._core import (  # noqa: F401
    EigenSystem,
    EnsembleKind,
    StateVector,
    autocorrelation,
    b2_goe,
    B2,
    bloch_state,
    bloch_vector,
    build_coupled_model,
    diagonalize,
    evolve,
    fidelity,
    fidelity_amplitude,
    gamma_of_state,
    heisenberg_time,
    ipr,
    partial_trace_qubit,
    ping_state,
    product_state,
    purity,
    purity_series,
    random_complex_state,
    random_real_state,
    sample_coe,
    sample_cue,
    sample_goe,
    sample_gue,
    sample_orthogonal,
    theory,
    vn_entropy,
    apply_orthogonal,
)


def _config_json(config):
    return _json.dumps(dict(config or {}))


def run_experiment(experiment, config=None):
    """Run one experiment ("ipr", "autocorr", "ping", "fidelity", "purity",
    "theory"). `config` is a dict whose keys mirror the CLI flags."""
    return _core._run_experiment(experiment, _config_json(config))


def sigma_scan(config=None):
    return _core._sigma_scan(_config_json(config))


def run_to_csv(experiment, path, config=None):
    """Run an experiment and write the standard CSV to `path`."""
    _core._run_to_csv(experiment, _config_json(config), str(path))


__all__ = [name for name in dir() if not name.startswith("_")]
