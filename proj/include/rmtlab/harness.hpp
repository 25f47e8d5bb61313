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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rmtlab/dynamics.hpp"
#include "rmtlab/ensembles.hpp"
#include "rmtlab/stats.hpp"

namespace rmtlab {

enum class Experiment { Ipr, Autocorr, Ping, Fidelity, Purity, SigmaScan, Theory };

std::string to_string(Experiment e);
Experiment experiment_from_string(const std::string& name);

/// Initial-state family. For `purity` it selects the environment state (real
/// or complex); the qubit comes from the gamma policy.
enum class StateChoice { Real, Complex, Bloch, Ping };

std::string to_string(StateChoice s);
StateChoice state_choice_from_string(const std::string& name);

/// Either a fixed Bloch angle (qubit placed at a random point of its O(2)
/// ring) or a Haar-random qubit over the whole sphere.
struct GammaPolicy {
  bool sphere = false;
  double value = 0.0;

  static GammaPolicy fixed(double gamma) { return {false, gamma}; }
  static GammaPolicy whole_sphere() { return {true, 0.0}; }
};

std::string to_string(const GammaPolicy& g);
GammaPolicy gamma_policy_from_string(const std::string& text);

struct ExperimentConfig {
  Experiment experiment = Experiment::Purity;
  std::size_t n = 256;
  std::size_t n_env = 128;
  double lambda = 1e-3;
  double epsilon = 1e-3;
  GammaPolicy gamma;
  StateChoice state = StateChoice::Real;
  int pings = 1;
  EnsembleKind ensemble = EnsembleKind::GOE;
  int beta_v = 1;
  std::size_t realizations = 100;
  std::uint64_t seed = 1;
  double t_max_tau_h = 0.5;
  std::size_t t_steps = 64;
  std::string out;
  // sigma-scan
  std::vector<std::size_t> n_env_list{32, 64, 128, 256};
  double t_sigma_tau_h = 0.25;
  // theory
  std::string curve = "purity";
  // 0 = hardware concurrency; never changes the output.
  std::size_t workers = 0;

  void validate() const;
};

struct NamedStats {
  std::string name;
  SeriesStats stats;
};

struct RunResult {
  ExperimentConfig config;
  TimeGrid grid;
  /// observables.front() is the one written to CSV.
  std::vector<NamedStats> observables;
  std::vector<std::optional<double>> theory;
  double wall_seconds = 0.0;

  const SeriesStats& primary() const { return observables.front().stats; }
  const SeriesStats* find(const std::string& name) const;
};

/// Per-realization failure; carries the realization index.
class RealizationError : public std::runtime_error {
 public:
  RealizationError(std::size_t index, const std::string& what)
      : std::runtime_error("realization " + std::to_string(index) + ": " + what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

RunResult run_experiment(const ExperimentConfig& cfg);

/// Coupling for environment size n_env in a scan referenced to cfg.n_env:
/// lambda * sqrt(cfg.n_env / n_env). Keeps lambda^2 tau_H^2 / (8 N_e), and
/// hence the mean purity at fixed t / tau_H, independent of N_e.
double scan_lambda(const ExperimentConfig& cfg, std::size_t n_env);

/// Coupling strength in the units of the linear-response purity formula
/// (unit-variance coupling elements): lambda / sqrt(8 N_e).
double effective_lambda(double lambda, std::size_t n_env);

struct SigmaScanRow {
  std::size_t n_env = 0;
  double lambda = 0.0;
  double t_abs = 0.0;
  double t_over_tau_h = 0.0;
  double sigma_gamma0 = 0.0;
  double sigma_half_pi = 0.0;
  double sigma_sphere = 0.0;
  double mean_gamma0 = 0.0;
  double mean_half_pi = 0.0;
  double mean_sphere = 0.0;
  std::size_t realizations = 0;
  double theory_sigma = 0.0;
};

struct SigmaScanResult {
  ExperimentConfig config;
  std::vector<SigmaScanRow> rows;
  double slope_gamma0 = 0.0;
  double slope_half_pi = 0.0;
  /// sigma_sphere with the fixed-gamma variance subtracted, averaged over the
  /// scanned sizes: the large-N_e plateau.
  double plateau_sigma = 0.0;
  /// mean P(0) - mean P(pi/2), averaged over the scanned sizes.
  double gamma_gap = 0.0;
  double plateau_ratio = 0.0;  // plateau_sigma / gamma_gap
  /// sigma_sphere / (mean P(0) - mean P(pi/2)) at the largest N_e alone.
  double last_ratio = 0.0;
};

/// Purity at one time for three qubit policies (gamma = 0, gamma = pi/2,
/// whole sphere) sharing each realization's model and environment state.
SigmaScanResult sigma_scan(const ExperimentConfig& cfg);

/// Closed-form curve selected by cfg.curve on the cfg time grid.
RunResult theory_curve(const ExperimentConfig& cfg);

/// Columns: t_abs,t_over_tauH,mean,std,env_lo,env_hi,n_real,theory
void emit_csv(const RunResult& result, std::ostream& os);
void emit_csv(const RunResult& result, const std::string& path);

void emit_sigma_scan_csv(const SigmaScanResult& result, std::ostream& os);
void emit_sigma_scan_csv(const SigmaScanResult& result, const std::string& path);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> rows;
};

CsvTable read_csv(std::istream& is);
CsvTable read_csv(const std::string& path);

}  // namespace rmtlab
