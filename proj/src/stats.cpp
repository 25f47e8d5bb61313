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

#include "rmtlab/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "rmtlab/types.hpp"

namespace rmtlab {

SeriesStats summarize(const std::vector<std::vector<double>>& rows) {
  SeriesStats out;
  out.count = rows.size();
  if (rows.empty()) return out;
  const std::size_t width = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != width) throw InvalidArgument("summarize: ragged realization rows");
  }
  out.mean.assign(width, 0.0);
  out.std.assign(width, 0.0);
  out.env_lo = rows.front();
  out.env_hi = rows.front();
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < width; ++k) {
      out.mean[k] += row[k];
      out.env_lo[k] = std::min(out.env_lo[k], row[k]);
      out.env_hi[k] = std::max(out.env_hi[k], row[k]);
    }
  }
  const double r = static_cast<double>(rows.size());
  for (double& m : out.mean) m /= r;
  if (rows.size() > 1) {
    for (const auto& row : rows) {
      for (std::size_t k = 0; k < width; ++k) {
        const double d = row[k] - out.mean[k];
        out.std[k] += d * d;
      }
    }
    for (double& s : out.std) s = std::sqrt(s / (r - 1.0));
  }
  // Rounding can push the mean a hair outside [min, max] when all rows agree.
  for (std::size_t k = 0; k < width; ++k) {
    out.mean[k] = std::clamp(out.mean[k], out.env_lo[k], out.env_hi[k]);
  }
  return out;
}

double sample_mean(const std::vector<double>& x) {
  if (x.empty()) throw InvalidArgument("sample_mean: empty sample");
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

double sample_std(const std::vector<double>& x) {
  if (x.size() < 2) return 0.0;
  const double m = sample_mean(x);
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return std::sqrt(s / static_cast<double>(x.size() - 1));
}

double standard_error(const std::vector<double>& x) {
  return sample_std(x) / std::sqrt(static_cast<double>(x.size()));
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InvalidArgument("loglog_slope: need at least two matching points");
  }
  double mx = 0.0, my = 0.0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0 && y[i] > 0.0)) throw InvalidArgument("loglog_slope: values must be positive");
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& body) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(count, 1));
  std::vector<std::exception_ptr> errors(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace rmtlab
