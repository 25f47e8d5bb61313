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

#include "rmtlab/config.hpp"

#include <fstream>

namespace rmtlab {
namespace {

template <typename T>
T get_as(const nlohmann::json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("config key '" + key + "': " + e.what());
  }
}

std::size_t get_size(const nlohmann::json& value, const std::string& key) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw InvalidArgument("config key '" + key + "' must be a nonnegative integer");
  }
  return value.get<std::size_t>();
}

}  // namespace

ExperimentConfig apply_config_json(const nlohmann::json& j, ExperimentConfig cfg) {
  if (!j.is_object()) throw InvalidArgument("config file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "experiment") {
      cfg.experiment = experiment_from_string(get_as<std::string>(value, key));
    } else if (key == "n") {
      cfg.n = get_size(value, key);
    } else if (key == "n-env") {
      cfg.n_env = get_size(value, key);
    } else if (key == "lambda") {
      cfg.lambda = get_as<double>(value, key);
    } else if (key == "epsilon") {
      cfg.epsilon = get_as<double>(value, key);
    } else if (key == "gamma") {
      cfg.gamma = value.is_string() ? gamma_policy_from_string(value.get<std::string>())
                                    : GammaPolicy::fixed(get_as<double>(value, key));
    } else if (key == "state") {
      cfg.state = state_choice_from_string(get_as<std::string>(value, key));
    } else if (key == "pings") {
      cfg.pings = get_as<int>(value, key);
    } else if (key == "ensemble") {
      cfg.ensemble = ensemble_from_string(get_as<std::string>(value, key));
    } else if (key == "beta-v") {
      cfg.beta_v = get_as<int>(value, key);
    } else if (key == "realizations") {
      cfg.realizations = get_size(value, key);
    } else if (key == "seed") {
      if (!value.is_number_integer()) throw InvalidArgument("config key 'seed' must be an integer");
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "t-max-tauh") {
      cfg.t_max_tau_h = get_as<double>(value, key);
    } else if (key == "t-steps") {
      cfg.t_steps = get_size(value, key);
    } else if (key == "out") {
      cfg.out = get_as<std::string>(value, key);
    } else if (key == "n-env-list") {
      if (!value.is_array()) throw InvalidArgument("config key 'n-env-list' must be an array");
      cfg.n_env_list.clear();
      for (const auto& v : value) cfg.n_env_list.push_back(get_size(v, key));
    } else if (key == "t-sigma-tauh") {
      cfg.t_sigma_tau_h = get_as<double>(value, key);
    } else if (key == "curve") {
      cfg.curve = get_as<std::string>(value, key);
    } else if (key == "workers") {
      cfg.workers = get_size(value, key);
    } else {
      throw InvalidArgument("unknown config key '" + key + "'");
    }
  }
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base) {
  std::ifstream is(path);
  if (!is) throw InvalidArgument("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("config file '" + path + "': " + e.what());
  }
  return apply_config_json(j, std::move(base));
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::json j;
  j["experiment"] = to_string(cfg.experiment);
  j["n"] = cfg.n;
  j["n-env"] = cfg.n_env;
  j["lambda"] = cfg.lambda;
  j["epsilon"] = cfg.epsilon;
  if (cfg.gamma.sphere) {
    j["gamma"] = "sphere";
  } else {
    j["gamma"] = cfg.gamma.value;
  }
  j["state"] = to_string(cfg.state);
  j["pings"] = cfg.pings;
  j["ensemble"] = to_string(cfg.ensemble);
  j["beta-v"] = cfg.beta_v;
  j["realizations"] = cfg.realizations;
  j["seed"] = cfg.seed;
  j["t-max-tauh"] = cfg.t_max_tau_h;
  j["t-steps"] = cfg.t_steps;
  j["out"] = cfg.out;
  j["n-env-list"] = cfg.n_env_list;
  j["t-sigma-tauh"] = cfg.t_sigma_tau_h;
  j["curve"] = cfg.curve;
  j["workers"] = cfg.workers;
  return j;
}

}  // namespace rmtlab
