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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rmtlab/config.hpp"
#include "rmtlab/harness.hpp"

namespace {

// Raw flag values; only the ones the user actually passed override the
// config file.
struct Flags {
  std::size_t n = 0;
  std::size_t n_env = 0;
  double lambda = 0.0;
  double epsilon = 0.0;
  std::string gamma;
  std::string state;
  int pings = 0;
  std::string ensemble;
  int beta_v = 0;
  std::size_t realizations = 0;
  std::uint64_t seed = 0;
  double t_max_tau_h = 0.0;
  std::size_t t_steps = 0;
  std::string out;
  std::string config;
  std::vector<std::size_t> n_env_list;
  double t_sigma_tau_h = 0.0;
  std::string curve;
  std::size_t workers = 0;
};

struct Bound {
  CLI::App* app = nullptr;
  std::vector<std::pair<std::string, CLI::Option*>> options;

  bool given(const std::string& name) const {
    for (const auto& [n, opt] : options) {
      if (n == name) return opt->count() > 0;
    }
    return false;
  }
};

Bound add_flags(CLI::App* sub, Flags& f) {
  Bound b{sub, {}};
  auto add = [&](const std::string& name, auto& target, const std::string& help) {
    b.options.emplace_back(name, sub->add_option("--" + name, target, help));
  };
  add("n", f.n, "Hilbert-space dimension N");
  add("n-env", f.n_env, "environment dimension N_e (sigma-scan: lambda reference size)");
  add("lambda", f.lambda, "qubit-environment coupling strength");
  add("epsilon", f.epsilon, "perturbation strength for fidelity");
  add("gamma", f.gamma, "Bloch angle gamma in radians, or 'sphere'");
  add("state", f.state, "initial state family: real, complex, bloch, ping");
  add("pings", f.pings, "number of pings M");
  add("ensemble", f.ensemble, "Hamiltonian ensemble: goe or gue");
  add("beta-v", f.beta_v, "perturbation ensemble index: 1 (GOE) or 2 (GUE)");
  add("realizations", f.realizations, "number of Monte Carlo realizations");
  add("seed", f.seed, "master seed");
  add("t-max-tauh", f.t_max_tau_h, "end of the time grid in units of tau_H");
  add("t-steps", f.t_steps, "number of time points");
  add("out", f.out, "output CSV path (stdout when omitted)");
  add("config", f.config, "flat JSON config file; flags override it");
  add("n-env-list", f.n_env_list, "sigma-scan environment sizes, ascending");
  add("t-sigma-tauh", f.t_sigma_tau_h, "sigma-scan evaluation time in units of tau_H");
  add("curve", f.curve, "theory curve: b2, B2, purity, sigma-p, autocorr, fidelity-variance");
  add("workers", f.workers, "worker threads (0 = all cores); output does not depend on it");
  return b;
}

rmtlab::ExperimentConfig resolve(rmtlab::Experiment experiment, const Bound& b, const Flags& f) {
  rmtlab::ExperimentConfig cfg;
  cfg.experiment = experiment;
  if (b.given("config")) cfg = rmtlab::load_config_file(f.config, cfg);
  cfg.experiment = experiment;
  if (b.given("n")) cfg.n = f.n;
  if (b.given("n-env")) cfg.n_env = f.n_env;
  if (b.given("lambda")) cfg.lambda = f.lambda;
  if (b.given("epsilon")) cfg.epsilon = f.epsilon;
  if (b.given("gamma")) cfg.gamma = rmtlab::gamma_policy_from_string(f.gamma);
  if (b.given("state")) cfg.state = rmtlab::state_choice_from_string(f.state);
  if (b.given("pings")) cfg.pings = f.pings;
  if (b.given("ensemble")) cfg.ensemble = rmtlab::ensemble_from_string(f.ensemble);
  if (b.given("beta-v")) cfg.beta_v = f.beta_v;
  if (b.given("realizations")) cfg.realizations = f.realizations;
  if (b.given("seed")) cfg.seed = f.seed;
  if (b.given("t-max-tauh")) cfg.t_max_tau_h = f.t_max_tau_h;
  if (b.given("t-steps")) cfg.t_steps = f.t_steps;
  if (b.given("out")) cfg.out = f.out;
  if (b.given("n-env-list")) cfg.n_env_list = f.n_env_list;
  if (b.given("t-sigma-tauh")) cfg.t_sigma_tau_h = f.t_sigma_tau_h;
  if (b.given("curve")) cfg.curve = f.curve;
  if (b.given("workers")) cfg.workers = f.workers;
  if (experiment == rmtlab::Experiment::Ping) cfg.state = rmtlab::StateChoice::Ping;
  return cfg;
}

int run(const rmtlab::ExperimentConfig& cfg) {
  if (cfg.experiment == rmtlab::Experiment::SigmaScan) {
    const auto result = rmtlab::sigma_scan(cfg);
    if (cfg.out.empty()) {
      rmtlab::emit_sigma_scan_csv(result, std::cout);
    } else {
      rmtlab::emit_sigma_scan_csv(result, cfg.out);
    }
    std::cerr << "slope(gamma=0) = " << result.slope_gamma0
              << "  slope(gamma=pi/2) = " << result.slope_half_pi
              << "  plateau / (P0 - P_pi/2) = " << result.plateau_ratio
              << "  (largest N_e alone: " << result.last_ratio << ")\n";
    return 0;
  }
  if (cfg.experiment != rmtlab::Experiment::Theory) cfg.validate();
  const auto result = rmtlab::run_experiment(cfg);
  if (cfg.out.empty()) {
    rmtlab::emit_csv(result, std::cout);
  } else {
    rmtlab::emit_csv(result, cfg.out);
    std::cerr << rmtlab::to_string(cfg.experiment) << ": " << cfg.realizations
              << " realizations in " << result.wall_seconds << " s -> " << cfg.out << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-matrix experiments on time-reversal-invariant ensembles"};
  app.require_subcommand(1);

  const std::vector<std::pair<rmtlab::Experiment, std::string>> commands{
      {rmtlab::Experiment::Ipr, "inverse participation ratio of random states"},
      {rmtlab::Experiment::Autocorr, "ensemble-averaged autocorrelation A(t)"},
      {rmtlab::Experiment::Ping, "IPR of M-ping superpositions"},
      {rmtlab::Experiment::Fidelity, "fidelity decay under a random perturbation"},
      {rmtlab::Experiment::Purity, "qubit purity decay in a GOE environment"},
      {rmtlab::Experiment::SigmaScan, "purity standard deviation versus environment size"},
      {rmtlab::Experiment::Theory, "closed-form prediction curves"},
  };

  std::vector<Flags> flags(commands.size());
  std::vector<Bound> bound;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    auto* sub = app.add_subcommand(rmtlab::to_string(commands[i].first), commands[i].second);
    bound.push_back(add_flags(sub, flags[i]));
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (std::size_t i = 0; i < commands.size(); ++i) {
      if (bound[i].app->parsed()) return run(resolve(commands[i].first, bound[i], flags[i]));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
