// Copyright 2026 The rmtlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rmtlab/config.hpp"
#include "rmtlab/dynamics.hpp"
#include "rmtlab/ensembles.hpp"
#include "rmtlab/harness.hpp"
#include "rmtlab/observables.hpp"
#include "rmtlab/states.hpp"
#include "rmtlab/theory.hpp"

namespace py = pybind11;
using namespace rmtlab;

namespace {

TimeGrid grid_from(const std::vector<double>& times, double tau_h) {
  TimeGrid g;
  g.times = times;
  g.tau_h = tau_h;
  g.validate();
  return g;
}

ExperimentConfig config_from(const std::string& experiment, const std::string& json) {
  ExperimentConfig cfg;
  cfg.experiment = experiment_from_string(experiment);
  cfg = apply_config_json(nlohmann::json::parse(json), cfg);
  cfg.experiment = experiment_from_string(experiment);
  if (cfg.experiment == Experiment::Ping) cfg.state = StateChoice::Ping;
  return cfg;
}

py::dict stats_dict(const SeriesStats& s) {
  py::dict d;
  d["mean"] = s.mean;
  d["std"] = s.std;
  d["env_lo"] = s.env_lo;
  d["env_hi"] = s.env_hi;
  d["count"] = s.count;
  return d;
}

py::dict result_dict(const RunResult& r) {
  py::dict d;
  d["t_abs"] = r.grid.times;
  d["tau_h"] = r.grid.tau_h;
  py::dict obs;
  for (const auto& o : r.observables) obs[py::str(o.name)] = stats_dict(o.stats);
  d["observables"] = obs;
  py::list theory;
  for (const auto& t : r.theory) {
    if (t) {
      theory.append(*t);
    } else {
      theory.append(py::none());
    }
  }
  d["theory"] = theory;
  d["wall_seconds"] = r.wall_seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "C++ core of rmtlab";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

  py::enum_<EnsembleKind>(m, "EnsembleKind")
      .value("GOE", EnsembleKind::GOE)
      .value("GUE", EnsembleKind::GUE)
      .value("CUE", EnsembleKind::CUE)
      .value("COE", EnsembleKind::COE);

  auto spec = [](EnsembleKind k, std::size_t n, std::uint64_t seed) {
    return EnsembleSpec{k, n, seed};
  };
  m.def("sample_goe", [=](std::size_t n, std::uint64_t seed) {
    return sample_goe(spec(EnsembleKind::GOE, n, seed)).entries.real().eval();
  }, py::arg("n"), py::arg("seed"), "Real symmetric GOE sample, semicircle on [-1, 1].");
  m.def("sample_gue", [=](std::size_t n, std::uint64_t seed) {
    return sample_gue(spec(EnsembleKind::GUE, n, seed)).entries;
  }, py::arg("n"), py::arg("seed"));
  m.def("sample_cue", [=](std::size_t n, std::uint64_t seed) {
    return sample_cue(spec(EnsembleKind::CUE, n, seed)).entries;
  }, py::arg("n"), py::arg("seed"));
  m.def("sample_coe", [=](std::size_t n, std::uint64_t seed) {
    return sample_coe(spec(EnsembleKind::COE, n, seed)).entries;
  }, py::arg("n"), py::arg("seed"));
  m.def("sample_orthogonal", &sample_orthogonal, py::arg("n"), py::arg("seed"));
  m.def("heisenberg_time", &heisenberg_time, py::arg("n"));

  py::class_<StateVector>(m, "StateVector")
      .def(py::init([](const CVector& amp) { return StateVector{amp, {StateKind::Other}}; }),
           py::arg("amplitudes"))
      .def_readonly("amplitudes", &StateVector::amplitudes)
      .def_property_readonly("kind", [](const StateVector& s) { return to_string(s.provenance.kind); })
      .def_property_readonly("dim", &StateVector::dim)
      .def("__len__", &StateVector::dim);

  m.def("random_complex_state", &random_complex_state, py::arg("dim"), py::arg("seed"));
  m.def("random_real_state", &random_real_state, py::arg("dim"), py::arg("seed"));
  m.def("bloch_state", &bloch_state, py::arg("gamma"), py::arg("phi") = 0.0);
  m.def("bloch_vector", [](const StateVector& s) {
    const BlochVector b = bloch_vector(s);
    return py::make_tuple(b.x, b.y, b.z);
  });
  m.def("gamma_of_state", &gamma_of_state);
  m.def("ping_state", &ping_state, py::arg("pings"), py::arg("dim"), py::arg("seed"));
  m.def("product_state", &product_state, py::arg("qubit"), py::arg("env"));
  m.def("apply_orthogonal", &apply_orthogonal, py::arg("psi"), py::arg("orthogonal"));

  py::class_<EigenSystem>(m, "EigenSystem")
      .def_property_readonly("eigenvalues", &EigenSystem::eigenvalues)
      .def_property_readonly("eigenvectors", &EigenSystem::eigenvectors)
      .def_property_readonly("dim", &EigenSystem::dim);
  m.def("diagonalize", py::overload_cast<const CMatrix&>(&diagonalize), py::arg("h"));
  m.def("evolve", &evolve, py::arg("eig"), py::arg("psi"), py::arg("t"));

  py::class_<CoupledModel>(m, "CoupledModel")
      .def_readonly("n_env", &CoupledModel::n_env)
      .def_readonly("lambda_", &CoupledModel::lambda)
      .def_readonly("h_env", &CoupledModel::h_env)
      .def_readonly("coupling", &CoupledModel::coupling)
      .def_readonly("eigensystem", &CoupledModel::eigensystem)
      .def_property_readonly("tau_h", &CoupledModel::tau_h);
  m.def("build_coupled_model", &build_coupled_model, py::arg("n_env"), py::arg("lam"),
        py::arg("seed"));

  m.def("autocorrelation", [](const EigenSystem& eig, const StateVector& psi,
                              const std::vector<double>& times) {
    return autocorrelation(eig, psi, grid_from(times, heisenberg_time(eig.dim()))).values;
  }, py::arg("eig"), py::arg("psi"), py::arg("times"));
  m.def("ipr", py::overload_cast<const StateVector&, const EigenSystem&>(&ipr), py::arg("psi"),
        py::arg("basis"));
  m.def("ipr", py::overload_cast<const StateVector&>(&ipr), py::arg("psi"));
  m.def("fidelity_amplitude", [](const EigenSystem& e0, const EigenSystem& e1,
                                 const StateVector& psi, const std::vector<double>& times) {
    return fidelity_amplitude(e0, e1, psi, grid_from(times, heisenberg_time(e0.dim())));
  }, py::arg("unperturbed"), py::arg("perturbed"), py::arg("psi"), py::arg("times"));
  m.def("fidelity", [](const std::vector<Complex>& f) {
    std::vector<double> out;
    for (const auto& z : f) out.push_back(std::norm(z));
    return out;
  });
  m.def("partial_trace_qubit", [](const StateVector& psi) {
    return Eigen::Matrix2cd(partial_trace_qubit(psi).rho);
  });
  m.def("purity", [](const Eigen::Matrix2cd& rho) { return purity(DensityMatrix2{rho}); });
  m.def("vn_entropy", [](const Eigen::Matrix2cd& rho) { return vn_entropy(DensityMatrix2{rho}); });
  m.def("purity_series", [](const CoupledModel& model, const StateVector& psi0,
                            const std::vector<double>& times) {
    return purity_series(model, psi0, grid_from(times, model.tau_h())).values;
  }, py::arg("model"), py::arg("psi0"), py::arg("times"));

  m.def("b2_goe", &theory::b2_goe, py::arg("x"));
  m.def("B2", &theory::B2, py::arg("t"), py::arg("tau_h"));

  auto th = m.def_submodule("theory", "closed-form predictions");
  th.def("b2_goe", &theory::b2_goe, py::arg("x"));
  th.def("B2", &theory::B2, py::arg("t"), py::arg("tau_h"));
  th.def("autocorr", [](double t, std::size_t n, bool real) {
    return theory::autocorr(t, n, real ? theory::InitialState::Real : theory::InitialState::Complex);
  }, py::arg("t"), py::arg("n"), py::arg("real"));
  th.def("ipr", [](std::size_t n, bool real) {
    return theory::ipr(n, real ? theory::InitialState::Real : theory::InitialState::Complex);
  }, py::arg("n"), py::arg("real"));
  th.def("ping", [](int m_, std::size_t n, bool long_time) {
    return theory::ping(m_, n, long_time ? theory::PingRegime::LongTime
                                         : theory::PingRegime::ShortTime);
  }, py::arg("pings"), py::arg("n"), py::arg("long_time") = true);
  th.def("fidelity_variance", [](double eps, int beta_v, double ipr_, double t) {
    return theory::fidelity_variance(eps, theory::beta_from_int(beta_v), ipr_, t);
  }, py::arg("epsilon"), py::arg("beta_v"), py::arg("ipr"), py::arg("t"));
  th.def("fidelity_exponentiated", &theory::fidelity_exponentiated, py::arg("deficit"));
  th.def("purity", &theory::purity, py::arg("t"), py::arg("lam"), py::arg("gamma"),
         py::arg("tau_h"));
  th.def("sigma_p", &theory::sigma_p, py::arg("lam"), py::arg("t"));

  m.def("_run_experiment", [](const std::string& experiment, const std::string& json) {
    return result_dict(run_experiment(config_from(experiment, json)));
  });
  m.def("_run_to_csv", [](const std::string& experiment, const std::string& json,
                          const std::string& path) {
    emit_csv(run_experiment(config_from(experiment, json)), path);
  });
  m.def("_sigma_scan", [](const std::string& json) {
    const SigmaScanResult r = sigma_scan(config_from("sigma-scan", json));
    py::list rows;
    for (const auto& row : r.rows) {
      py::dict d;
      d["n_env"] = row.n_env;
      d["lambda"] = row.lambda;
      d["t_abs"] = row.t_abs;
      d["sigma_gamma0"] = row.sigma_gamma0;
      d["sigma_half_pi"] = row.sigma_half_pi;
      d["sigma_sphere"] = row.sigma_sphere;
      d["mean_gamma0"] = row.mean_gamma0;
      d["mean_half_pi"] = row.mean_half_pi;
      d["mean_sphere"] = row.mean_sphere;
      d["theory_sigma"] = row.theory_sigma;
      rows.append(d);
    }
    py::dict out;
    out["rows"] = rows;
    out["slope_gamma0"] = r.slope_gamma0;
    out["slope_half_pi"] = r.slope_half_pi;
    out["plateau_sigma"] = r.plateau_sigma;
    out["gamma_gap"] = r.gamma_gap;
    out["plateau_ratio"] = r.plateau_ratio;
    out["last_ratio"] = r.last_ratio;
    return out;
  });
}
