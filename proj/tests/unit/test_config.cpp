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

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <numbers>

#include "rmtlab/config.hpp"

using namespace rmtlab;
using nlohmann::json;

TEST_CASE("flat JSON mirrors the flags") {
  const json j = {{"experiment", "fidelity"}, {"n", 64},          {"n-env", 32},
                  {"lambda", 0.02},           {"epsilon", 1e-2},  {"gamma", "sphere"},
                  {"state", "complex"},       {"pings", 3},       {"ensemble", "gue"},
                  {"beta-v", 2},              {"realizations", 7}, {"seed", 99},
                  {"t-max-tauh", 2.0},        {"t-steps", 5},     {"out", "x.csv"},
                  {"n-env-list", {16, 32}},   {"t-sigma-tauh", 1.5}, {"curve", "b2"},
                  {"workers", 1}};
  const ExperimentConfig c = apply_config_json(j, ExperimentConfig{});
  CHECK(c.experiment == Experiment::Fidelity);
  CHECK(c.n == 64);
  CHECK(c.n_env == 32);
  CHECK(c.lambda == 0.02);
  CHECK(c.epsilon == 1e-2);
  CHECK(c.gamma.sphere);
  CHECK(c.state == StateChoice::Complex);
  CHECK(c.pings == 3);
  CHECK(c.ensemble == EnsembleKind::GUE);
  CHECK(c.beta_v == 2);
  CHECK(c.realizations == 7);
  CHECK(c.seed == 99);
  CHECK(c.t_max_tau_h == 2.0);
  CHECK(c.t_steps == 5);
  CHECK(c.out == "x.csv");
  CHECK(c.n_env_list == std::vector<std::size_t>{16, 32});
  CHECK(c.t_sigma_tau_h == 1.5);
  CHECK(c.curve == "b2");
  CHECK(c.workers == 1);

  const ExperimentConfig back = apply_config_json(config_to_json(c), ExperimentConfig{});
  CHECK(config_to_json(back) == config_to_json(c));
}

TEST_CASE("numeric gamma and partial overrides") {
  ExperimentConfig base;
  base.n = 12;
  const ExperimentConfig c = apply_config_json(json{{"gamma", std::numbers::pi / 4}}, base);
  CHECK_FALSE(c.gamma.sphere);
  CHECK(c.gamma.value == doctest::Approx(std::numbers::pi / 4));
  CHECK(c.n == 12);
}

TEST_CASE("bad configs") {
  CHECK_THROWS_AS(apply_config_json(json{{"lamda", 0.1}}, {}), InvalidArgument);
  CHECK_THROWS_AS(apply_config_json(json{{"n", "big"}}, {}), InvalidArgument);
  CHECK_THROWS_AS(apply_config_json(json{{"state", "mixed"}}, {}), InvalidArgument);
  CHECK_THROWS_AS(apply_config_json(json::array({1, 2}), {}), InvalidArgument);
  CHECK_THROWS_AS(load_config_file("/nonexistent/rmtlab.json", {}), std::exception);

  const std::string path = "rmtlab_test_config.json";
  {
    std::ofstream os(path);
    os << "{ \"n\": 8, ";
  }
  CHECK_THROWS_AS(load_config_file(path, {}), InvalidArgument);
  {
    std::ofstream os(path);
    os << R"({"n": 8, "seed": 5})";
  }
  const ExperimentConfig c = load_config_file(path, {});
  CHECK(c.n == 8);
  CHECK(c.seed == 5);
  std::remove(path.c_str());
}

TEST_CASE("validation") {
  ExperimentConfig c;
  CHECK_NOTHROW(c.validate());
  c.realizations = 0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = {};
  c.n_env_list = {64, 32};
  c.experiment = Experiment::SigmaScan;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = {};
  c.lambda = -1.0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = {};
  c.gamma = GammaPolicy::fixed(2.0);
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
}
