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
#include <functional>
#include <vector>

namespace rmtlab {

/// Per-time-point summary over Monte Carlo realizations.
struct SeriesStats {
  std::vector<double> mean;
  std::vector<double> std;  // unbiased (R - 1) divisor; 0 when R = 1
  std::vector<double> env_lo;
  std::vector<double> env_hi;
  std::size_t count = 0;

  std::size_t size() const { return mean.size(); }
};

/// rows[r][k] is realization r at time point k. Reduction runs over r in
/// ascending order, so the result is bit-reproducible.
SeriesStats summarize(const std::vector<std::vector<double>>& rows);

double sample_mean(const std::vector<double>& x);
/// Unbiased sample standard deviation (0 for fewer than two samples).
double sample_std(const std::vector<double>& x);
double standard_error(const std::vector<double>& x);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Runs body(i) for i in [0, count) on up to `workers` threads (0 = hardware
/// concurrency). Exceptions are collected and the one from the lowest index is
/// rethrown after all workers finish.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace rmtlab
