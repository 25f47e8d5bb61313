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

#include <string>

#include <json.hpp>

#include "rmtlab/harness.hpp"

namespace rmtlab {

/// Applies a flat JSON object whose keys mirror the CLI flags ("n",
/// "n-env", "lambda", "gamma", ...) on top of `base`. Unknown keys and
/// mistyped values throw InvalidArgument.
ExperimentConfig apply_config_json(const nlohmann::json& j, ExperimentConfig base);
ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base);

nlohmann::json config_to_json(const ExperimentConfig& cfg);

}  // namespace rmtlab
