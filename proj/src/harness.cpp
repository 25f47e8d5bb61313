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

#include "rmtlab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "rmtlab/observables.hpp"
#include "rmtlab/rng.hpp"
#include "rmtlab/states.hpp"
#include "rmtlab/theory.hpp"

namespace rmtlab {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

struct Rows {
  std::vector<std::vector<double>> values;
  explicit Rows(std::size_t r) : values(r) {}
};

// Runs body for every realization and tags failures with the index.
void for_each_realization(const ExperimentConfig& cfg,
                          const std::function<void(std::size_t)>& body) {
  parallel_for(cfg.realizations, cfg.workers, [&](std::size_t r) {
    try {
      body(r);
    } catch (const RealizationError&) {
      throw;
    } catch (const std::exception& e) {
      throw RealizationError(r, e.what());
    }
  });
}

StateVector draw_state(StateChoice choice, std::size_t dim, int pings, const GammaPolicy& gamma,
                       std::uint64_t seed) {
  switch (choice) {
    case StateChoice::Real: return random_real_state(dim, seed);
    case StateChoice::Complex: return random_complex_state(dim, seed);
    case StateChoice::Ping: return ping_state(pings, dim, seed);
    case StateChoice::Bloch: {
      if (dim != 2) throw InvalidArgument("bloch states need n = 2");
      if (gamma.sphere) return random_complex_state(2, seed);
      Rng rng = make_rng(seed);
      std::uniform_real_distribution<double> ring(0.0, 2.0 * std::numbers::pi);
      return bloch_state(gamma.value, ring(rng));
    }
  }
  throw InvalidArgument("unknown state choice");
}

StateVector draw_qubit(const GammaPolicy& gamma, std::uint64_t seed) {
  return draw_state(StateChoice::Bloch, 2, 1, gamma, seed);
}

EigenSystem draw_eigensystem(EnsembleKind kind, std::size_t n, std::uint64_t seed) {
  return diagonalize(sample_hamiltonian({kind, n, seed}));
}

std::optional<theory::InitialState> theory_kind(StateChoice s) {
  if (s == StateChoice::Real) return theory::InitialState::Real;
  if (s == StateChoice::Complex) return theory::InitialState::Complex;
  return std::nullopt;
}

// Long-time plateau of N <A> for the chosen state family. Real and ping
// states interpolate as 2 + 1/M; complex is the M -> infinity limit.
std::optional<double> plateau(const ExperimentConfig& cfg) {
  switch (cfg.state) {
    case StateChoice::Real: return 3.0;
    case StateChoice::Complex: return 2.0;
    case StateChoice::Ping: return 2.0 + 1.0 / cfg.pings;
    case StateChoice::Bloch: return std::nullopt;
  }
  return std::nullopt;
}

TimeGrid grid_for(const ExperimentConfig& cfg, std::size_t dim) {
  return TimeGrid::linear(heisenberg_time(dim), cfg.t_max_tau_h, cfg.t_steps);
}

// Single "long-time" row for time-independent experiments.
TimeGrid long_time_grid(std::size_t dim) {
  TimeGrid g;
  g.tau_h = heisenberg_time(dim);
  g.times = {std::numeric_limits<double>::infinity()};
  return g;
}

RunResult run_ipr(const ExperimentConfig& cfg) {
  Rows rows(cfg.realizations);
  for_each_realization(cfg, [&](std::size_t r) {
    const EigenSystem eig =
        draw_eigensystem(cfg.ensemble, cfg.n, substream_seed(cfg.seed, r, StreamTag::Hamiltonian));
    const StateVector psi = draw_state(cfg.state, cfg.n, cfg.pings, cfg.gamma,
                                       substream_seed(cfg.seed, r, StreamTag::State));
    rows.values[r] = {ipr(psi, eig)};
  });
  RunResult out;
  out.grid = long_time_grid(cfg.n);
  out.observables.push_back({"ipr", summarize(rows.values)});
  std::optional<double> th;
  if (cfg.state == StateChoice::Ping) {
    th = theory::ping(cfg.pings, cfg.n, theory::PingRegime::LongTime);
  } else if (auto kind = theory_kind(cfg.state)) {
    th = theory::ipr(cfg.n, *kind);
  }
  out.theory = {th};
  return out;
}

RunResult run_autocorr(const ExperimentConfig& cfg) {
  const TimeGrid grid = grid_for(cfg, cfg.n);
  Rows rows(cfg.realizations);
  for_each_realization(cfg, [&](std::size_t r) {
    const EigenSystem eig =
        draw_eigensystem(cfg.ensemble, cfg.n, substream_seed(cfg.seed, r, StreamTag::Hamiltonian));
    const StateVector psi = draw_state(cfg.state, cfg.n, cfg.pings, cfg.gamma,
                                       substream_seed(cfg.seed, r, StreamTag::State));
    rows.values[r] = autocorrelation(eig, psi, grid).values;
  });
  RunResult out;
  out.grid = grid;
  out.observables.push_back({"autocorrelation", summarize(rows.values)});
  const auto top = plateau(cfg);
  for (double t : grid.times) {
    if (t > 0.0 && top && cfg.ensemble == EnsembleKind::GOE) {
      out.theory.push_back((*top - theory::b2_goe(t / grid.tau_h)) / static_cast<double>(cfg.n));
    } else {
      out.theory.push_back(std::nullopt);
    }
  }
  return out;
}

RunResult run_fidelity(const ExperimentConfig& cfg) {
  const TimeGrid grid = grid_for(cfg, cfg.n);
  const std::size_t width = grid.size();
  Rows fid(cfg.realizations), re(cfg.realizations), im(cfg.realizations);
  const EnsembleKind perturbation = cfg.beta_v == 1 ? EnsembleKind::GOE : EnsembleKind::GUE;
  for_each_realization(cfg, [&](std::size_t r) {
    const HamiltonianMatrix h0 = sample_hamiltonian(
        {cfg.ensemble, cfg.n, substream_seed(cfg.seed, r, StreamTag::Hamiltonian)});
    const HamiltonianMatrix v = sample_hamiltonian(
        {perturbation, cfg.n, substream_seed(cfg.seed, r, StreamTag::Perturbation)});
    const EigenSystem eig0 = diagonalize(h0);
    const EigenSystem eige = diagonalize(CMatrix(h0.entries + cfg.epsilon * v.entries));
    const StateVector psi = draw_state(cfg.state, cfg.n, cfg.pings, cfg.gamma,
                                       substream_seed(cfg.seed, r, StreamTag::State));
    const auto f = fidelity_amplitude(eig0, eige, psi, grid);
    fid.values[r] = fidelity(f, grid).values;
    re.values[r].resize(width);
    im.values[r].resize(width);
    for (std::size_t k = 0; k < width; ++k) {
      re.values[r][k] = f[k].real();
      im.values[r][k] = f[k].imag();
    }
  });
  RunResult out;
  out.grid = grid;
  out.observables.push_back({"fidelity", summarize(fid.values)});
  out.observables.push_back({"amplitude_re", summarize(re.values)});
  out.observables.push_back({"amplitude_im", summarize(im.values)});
  const SeriesStats& fs = out.observables[0].stats;
  const SeriesStats& rs = out.observables[1].stats;
  const SeriesStats& is = out.observables[2].stats;
  SeriesStats excess;
  excess.count = fs.count;
  for (std::size_t k = 0; k < width; ++k) {
    const double amp2 = rs.mean[k] * rs.mean[k] + is.mean[k] * is.mean[k];
    excess.mean.push_back(fs.mean[k] - amp2);
    excess.std.push_back(0.0);
    excess.env_lo.push_back(excess.mean.back());
    excess.env_hi.push_back(excess.mean.back());
  }
  out.observables.push_back({"fidelity_excess", excess});

  // <F> = |<f>|^2 + (2 pi eps)^2 (2/beta_V) I t^2 with the perturbation
  // variance 1/(4N) folded into eps.
  const auto kind = theory_kind(cfg.state);
  const double eps_eff = cfg.epsilon / (2.0 * std::sqrt(static_cast<double>(cfg.n))) /
                         (2.0 * std::numbers::pi);
  for (std::size_t k = 0; k < width; ++k) {
    if (kind) {
      const double amp2 = fs.mean[k] - excess.mean[k];
      out.theory.push_back(amp2 + theory::fidelity_variance(eps_eff,
                                                            theory::beta_from_int(cfg.beta_v),
                                                            theory::ipr(cfg.n, *kind),
                                                            grid.times[k]));
    } else {
      out.theory.push_back(std::nullopt);
    }
  }
  return out;
}

RunResult run_purity(const ExperimentConfig& cfg) {
  const TimeGrid grid = grid_for(cfg, cfg.n_env);
  Rows pur(cfg.realizations), ent(cfg.realizations);
  if (cfg.state != StateChoice::Real && cfg.state != StateChoice::Complex) {
    throw InvalidArgument("purity: environment state must be real or complex");
  }
  for_each_realization(cfg, [&](std::size_t r) {
    const CoupledModel model = build_coupled_model(
        cfg.n_env, cfg.lambda, substream_seed(cfg.seed, r, StreamTag::Hamiltonian));
    const StateVector env = draw_state(cfg.state, cfg.n_env, 1, cfg.gamma,
                                       substream_seed(cfg.seed, r, StreamTag::EnvState));
    const StateVector qubit =
        draw_qubit(cfg.gamma, substream_seed(cfg.seed, r, StreamTag::QubitState));
    const StateVector psi0 = product_state(qubit, env);
    pur.values[r] = purity_series(model, psi0, grid).values;
    ent.values[r].reserve(grid.size());
    for (double p : pur.values[r]) ent.values[r].push_back(entropy_from_purity(p));
  });
  RunResult out;
  out.grid = grid;
  out.observables.push_back({"purity", summarize(pur.values)});
  out.observables.push_back({"entropy", summarize(ent.values)});
  const double lam = effective_lambda(cfg.lambda, cfg.n_env);
  for (double t : grid.times) {
    out.theory.push_back(cfg.gamma.sphere ? theory::purity_sphere_average(t, lam, grid.tau_h)
                                          : theory::purity(t, lam, cfg.gamma.value, grid.tau_h));
  }
  return out;
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17e", x);
  return buf;
}

void write_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << cells[i];
  }
  os << '\n';
}

template <typename Emit>
void write_file(const std::string& path, Emit&& emit) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  emit(os);
  os.flush();
  if (!os) throw std::runtime_error("error writing '" + path + "'");
}

}  // namespace

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::Ipr: return "ipr";
    case Experiment::Autocorr: return "autocorr";
    case Experiment::Ping: return "ping";
    case Experiment::Fidelity: return "fidelity";
    case Experiment::Purity: return "purity";
    case Experiment::SigmaScan: return "sigma-scan";
    case Experiment::Theory: return "theory";
  }
  return "unknown";
}

Experiment experiment_from_string(const std::string& name) {
  for (Experiment e : {Experiment::Ipr, Experiment::Autocorr, Experiment::Ping,
                       Experiment::Fidelity, Experiment::Purity, Experiment::SigmaScan,
                       Experiment::Theory}) {
    if (to_string(e) == name) return e;
  }
  if (name == "sigma_scan") return Experiment::SigmaScan;
  throw InvalidArgument("unknown experiment '" + name + "'");
}

std::string to_string(StateChoice s) {
  switch (s) {
    case StateChoice::Real: return "real";
    case StateChoice::Complex: return "complex";
    case StateChoice::Bloch: return "bloch";
    case StateChoice::Ping: return "ping";
  }
  return "unknown";
}

StateChoice state_choice_from_string(const std::string& name) {
  for (StateChoice s : {StateChoice::Real, StateChoice::Complex, StateChoice::Bloch,
                        StateChoice::Ping}) {
    if (to_string(s) == name) return s;
  }
  throw InvalidArgument("unknown state kind '" + name + "'");
}

std::string to_string(const GammaPolicy& g) {
  return g.sphere ? std::string("sphere") : format_number(g.value);
}

GammaPolicy gamma_policy_from_string(const std::string& text) {
  if (text == "sphere") return GammaPolicy::whole_sphere();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw InvalidArgument("gamma must be a number or 'sphere', got '" + text + "'");
  }
  return GammaPolicy::fixed(v);
}

void ExperimentConfig::validate() const {
  if (realizations < 1) throw InvalidArgument("realizations must be >= 1");
  if (!(t_max_tau_h >= 0.0) || !std::isfinite(t_max_tau_h)) {
    throw InvalidArgument("t-max-tauh must be finite and >= 0");
  }
  if (t_steps > 1 && t_max_tau_h == 0.0) throw InvalidArgument("t-max-tauh must be > 0");
  if (!gamma.sphere && !(gamma.value >= -kHalfPi && gamma.value <= kHalfPi)) {
    throw InvalidArgument("gamma must lie in [-pi/2, pi/2]");
  }
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw InvalidArgument("lambda must be >= 0");
  if (!std::isfinite(epsilon)) throw InvalidArgument("epsilon must be finite");
  if (beta_v != 1 && beta_v != 2) throw InvalidArgument("beta-v must be 1 or 2");
  if (pings < 1) throw InvalidArgument("pings must be >= 1");
  switch (experiment) {
    case Experiment::Ipr:
    case Experiment::Autocorr:
    case Experiment::Ping:
    case Experiment::Fidelity:
      if (n < 1) throw InvalidArgument("n must be >= 1");
      if (ensemble != EnsembleKind::GOE && ensemble != EnsembleKind::GUE) {
        throw InvalidArgument("ensemble must be goe or gue");
      }
      if (state == StateChoice::Ping && static_cast<std::size_t>(pings) > n) {
        throw InvalidArgument("pings must not exceed n");
      }
      if (state == StateChoice::Bloch && n != 2) throw InvalidArgument("bloch states need n = 2");
      break;
    case Experiment::Purity:
      if (n_env < 2) throw InvalidArgument("n-env must be >= 2");
      if (state != StateChoice::Real && state != StateChoice::Complex) {
        throw InvalidArgument("purity: environment state must be real or complex");
      }
      break;
    case Experiment::SigmaScan:
      if (n_env_list.size() < 2) throw InvalidArgument("sigma-scan needs at least two n-env values");
      for (std::size_t i = 0; i < n_env_list.size(); ++i) {
        if (n_env_list[i] < 2) throw InvalidArgument("n-env values must be >= 2");
        if (i > 0 && n_env_list[i] <= n_env_list[i - 1]) {
          throw InvalidArgument("n-env values must be strictly ascending");
        }
      }
      if (n_env < 2) throw InvalidArgument("n-env must be >= 2");
      if (!(t_sigma_tau_h > 0.0)) throw InvalidArgument("t-sigma-tauh must be > 0");
      if (state != StateChoice::Real && state != StateChoice::Complex) {
        throw InvalidArgument("sigma-scan: environment state must be real or complex");
      }
      if (realizations < 2) throw InvalidArgument("sigma-scan needs at least two realizations");
      break;
    case Experiment::Theory:
      break;
  }
}

const SeriesStats* RunResult::find(const std::string& name) const {
  for (const auto& o : observables) {
    if (o.name == name) return &o.stats;
  }
  return nullptr;
}

double effective_lambda(double lambda, std::size_t n_env) {
  return lambda / std::sqrt(8.0 * static_cast<double>(n_env));
}

double scan_lambda(const ExperimentConfig& cfg, std::size_t n_env) {
  return cfg.lambda * std::sqrt(static_cast<double>(cfg.n_env) / static_cast<double>(n_env));
}

RunResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  RunResult out;
  switch (cfg.experiment) {
    case Experiment::Ipr:
    case Experiment::Ping: {
      ExperimentConfig c = cfg;
      if (cfg.experiment == Experiment::Ping) c.state = StateChoice::Ping;
      out = run_ipr(c);
      break;
    }
    case Experiment::Autocorr: out = run_autocorr(cfg); break;
    case Experiment::Fidelity: out = run_fidelity(cfg); break;
    case Experiment::Purity: out = run_purity(cfg); break;
    case Experiment::Theory: out = theory_curve(cfg); break;
    case Experiment::SigmaScan:
      throw InvalidArgument("sigma-scan produces a table; call sigma_scan()");
  }
  out.config = cfg;
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

SigmaScanResult sigma_scan(const ExperimentConfig& cfg) {
  cfg.validate();
  SigmaScanResult out;
  out.config = cfg;
  const GammaPolicy policies[3] = {GammaPolicy::fixed(0.0), GammaPolicy::fixed(kHalfPi),
                                   GammaPolicy::whole_sphere()};
  for (std::size_t n_env : cfg.n_env_list) {
    const double lambda = scan_lambda(cfg, n_env);
    const double tau_h = heisenberg_time(n_env);
    const double t = cfg.t_sigma_tau_h * tau_h;
    std::vector<std::vector<double>> values(3, std::vector<double>(cfg.realizations));
    // Realization seeds also depend on N_e so different sizes are independent.
    const std::uint64_t seed = substream_seed(cfg.seed, n_env, StreamTag::Generic);
    for_each_realization(cfg, [&](std::size_t r) {
      const CoupledModel model =
          build_coupled_model(n_env, lambda, substream_seed(seed, r, StreamTag::Hamiltonian));
      const StateVector env = draw_state(cfg.state, n_env, 1, cfg.gamma,
                                         substream_seed(seed, r, StreamTag::EnvState));
      for (std::size_t p = 0; p < 3; ++p) {
        const StateVector qubit =
            draw_qubit(policies[p], substream_seed(seed, r, StreamTag::QubitState));
        const Propagator prop(model.eigensystem, product_state(qubit, env).amplitudes);
        values[p][r] = purity(partial_trace_qubit(prop.at(t)));
      }
    });
    SigmaScanRow row;
    row.n_env = n_env;
    row.lambda = lambda;
    row.t_abs = t;
    row.t_over_tau_h = cfg.t_sigma_tau_h;
    row.sigma_gamma0 = sample_std(values[0]);
    row.sigma_half_pi = sample_std(values[1]);
    row.sigma_sphere = sample_std(values[2]);
    row.mean_gamma0 = sample_mean(values[0]);
    row.mean_half_pi = sample_mean(values[1]);
    row.mean_sphere = sample_mean(values[2]);
    row.realizations = cfg.realizations;
    row.theory_sigma = theory::sigma_p(effective_lambda(lambda, n_env), t);
    out.rows.push_back(row);
  }
  std::vector<double> sizes, s0, s1;
  for (const auto& row : out.rows) {
    sizes.push_back(static_cast<double>(row.n_env));
    s0.push_back(row.sigma_gamma0);
    s1.push_back(row.sigma_half_pi);
  }
  out.slope_gamma0 = loglog_slope(sizes, s0);
  out.slope_half_pi = loglog_slope(sizes, s1);
  // Over the sphere, Var P = Var_gamma E[P | gamma] + E_gamma Var(P | gamma).
  // The first term is the N_e-independent plateau. The second is the
  // fixed-gamma noise; with sin^2 gamma averaging to 1/3 on the sphere it is
  // estimated as 2/3 sigma(0)^2 + 1/3 sigma(pi/2)^2 and subtracted per size.
  double plateau_var = 0.0, gap = 0.0;
  for (const auto& row : out.rows) {
    const double fixed_var = (2.0 * row.sigma_gamma0 * row.sigma_gamma0 +
                              row.sigma_half_pi * row.sigma_half_pi) / 3.0;
    plateau_var += row.sigma_sphere * row.sigma_sphere - fixed_var;
    gap += row.mean_gamma0 - row.mean_half_pi;
  }
  const double count = static_cast<double>(out.rows.size());
  out.plateau_sigma = std::sqrt(std::max(plateau_var / count, 0.0));
  out.gamma_gap = gap / count;
  out.plateau_ratio = out.plateau_sigma / out.gamma_gap;
  const SigmaScanRow& last = out.rows.back();
  out.last_ratio = last.sigma_sphere / (last.mean_gamma0 - last.mean_half_pi);
  return out;
}

RunResult theory_curve(const ExperimentConfig& cfg) {
  RunResult out;
  const bool env_curve = cfg.curve == "purity" || cfg.curve == "B2" || cfg.curve == "b2";
  const std::size_t dim = env_curve ? cfg.n_env : cfg.n;
  out.grid = grid_for(cfg, dim);
  const double tau_h = out.grid.tau_h;
  for (double t : out.grid.times) {
    std::optional<double> v;
    if (cfg.curve == "b2") {
      v = theory::b2_goe(t / tau_h);
    } else if (cfg.curve == "B2") {
      v = theory::B2(t, tau_h);
    } else if (cfg.curve == "purity") {
      const double lam = effective_lambda(cfg.lambda, cfg.n_env);
      v = cfg.gamma.sphere ? theory::purity_sphere_average(t, lam, tau_h)
                           : theory::purity(t, lam, cfg.gamma.value, tau_h);
    } else if (cfg.curve == "sigma-p") {
      v = theory::sigma_p(effective_lambda(cfg.lambda, cfg.n_env), t);
    } else if (cfg.curve == "autocorr") {
      if (t > 0.0) {
        if (const auto top = plateau(cfg)) {
          v = (*top - theory::b2_goe(t / tau_h)) / static_cast<double>(cfg.n);
        }
      }
    } else if (cfg.curve == "fidelity-variance") {
      const auto kind = theory_kind(cfg.state).value_or(theory::InitialState::Complex);
      const double eps_eff = cfg.epsilon / (2.0 * std::sqrt(static_cast<double>(cfg.n))) /
                             (2.0 * std::numbers::pi);
      v = theory::fidelity_variance(eps_eff, theory::beta_from_int(cfg.beta_v),
                                    theory::ipr(cfg.n, kind), t);
    } else {
      throw InvalidArgument("unknown theory curve '" + cfg.curve +
                            "' (b2, B2, purity, sigma-p, autocorr, fidelity-variance)");
    }
    out.theory.push_back(v);
  }
  // No Monte Carlo data: empty statistics.
  SeriesStats empty;
  out.observables.push_back({cfg.curve, empty});
  out.config = cfg;
  return out;
}

void emit_csv(const RunResult& result, std::ostream& os) {
  os << "t_abs,t_over_tauH,mean,std,env_lo,env_hi,n_real,theory\n";
  const SeriesStats& s = result.primary();
  const bool has_data = s.size() == result.grid.size();
  for (std::size_t k = 0; k < result.grid.size(); ++k) {
    const double t = result.grid.times[k];
    std::vector<std::string> cells{format_number(t), format_number(t / result.grid.tau_h)};
    if (has_data) {
      cells.push_back(format_number(s.mean[k]));
      cells.push_back(format_number(s.std[k]));
      cells.push_back(format_number(s.env_lo[k]));
      cells.push_back(format_number(s.env_hi[k]));
      cells.push_back(std::to_string(s.count));
    } else {
      cells.insert(cells.end(), {"", "", "", "", "0"});
    }
    const auto& th = k < result.theory.size() ? result.theory[k] : std::nullopt;
    cells.push_back(th ? format_number(*th) : std::string());
    write_row(os, cells);
  }
}

void emit_csv(const RunResult& result, const std::string& path) {
  write_file(path, [&](std::ostream& os) { emit_csv(result, os); });
}

void emit_sigma_scan_csv(const SigmaScanResult& result, std::ostream& os) {
  os << "n_env,lambda,t_abs,t_over_tauH,sigma_gamma0,sigma_half_pi,sigma_sphere,"
        "mean_gamma0,mean_half_pi,mean_sphere,n_real,theory_sigma\n";
  for (const auto& r : result.rows) {
    write_row(os, {std::to_string(r.n_env), format_number(r.lambda), format_number(r.t_abs),
                   format_number(r.t_over_tau_h), format_number(r.sigma_gamma0),
                   format_number(r.sigma_half_pi), format_number(r.sigma_sphere),
                   format_number(r.mean_gamma0), format_number(r.mean_half_pi),
                   format_number(r.mean_sphere), std::to_string(r.realizations),
                   format_number(r.theory_sigma)});
  }
}

void emit_sigma_scan_csv(const SigmaScanResult& result, const std::string& path) {
  write_file(path, [&](std::ostream& os) { emit_sigma_scan_csv(result, os); });
}

CsvTable read_csv(std::istream& is) {
  CsvTable table;
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!s.empty() && s.back() == ',') cells.emplace_back();
    return cells;
  };
  if (!std::getline(is, line)) throw std::runtime_error("read_csv: missing header row");
  table.header = split(line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != table.header.size()) {
      throw std::runtime_error("read_csv: row has " + std::to_string(cells.size()) +
                               " cells, header has " + std::to_string(table.header.size()));
    }
    std::vector<std::optional<double>> row;
    for (const auto& c : cells) {
      if (c.empty()) {
        row.emplace_back();
      } else {
        row.emplace_back(std::strtod(c.c_str(), nullptr));
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open '" + path + "' for reading");
  return read_csv(is);
}

}  // namespace rmtlab
