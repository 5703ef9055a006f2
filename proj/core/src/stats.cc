// Copyright 2026 The dpmst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpmst/stats.h"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>

#include "dpmst/errors.h"

namespace dpmst {

double chi_square_critical(double dof, double alpha) {
  if (!(dof > 0.0) || !(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "need dof > 0 and alpha in (0, 1)");
  }
  const boost::math::chi_squared dist(dof);
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

double chi_square_sf(double statistic, double dof) {
  if (!(dof > 0.0)) throw Error(ErrorCode::kInvalidArgument, "need dof > 0");
  if (std::isinf(statistic)) return 0.0;
  if (statistic <= 0.0) return 1.0;
  const boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

double kolmogorov_sf(double lambda) {
  if (lambda <= 0.0) return 1.0;
  // The alternating series converges fast once lambda is moderately large;
  // near zero the sum is 1 to working precision.
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-16) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

KsResult ks_test(std::vector<double> samples,
                 const std::function<double(double)>& cdf, double alpha) {
  if (samples.empty()) throw Error(ErrorCode::kEmpty, "KS test needs samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  KsResult result;
  result.statistic = d;
  const double sqrt_n = std::sqrt(n);
  // Small-sample correction to the asymptotic distribution.
  result.p_value = kolmogorov_sf((sqrt_n + 0.12 + 0.11 / sqrt_n) * d);
  result.passed = result.p_value >= alpha;
  return result;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw Error(ErrorCode::kEmpty, "quantile of empty data");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

Summary summarize(std::span<const double> values) {
  Summary s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.count);
  if (s.count > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(s.count - 1));
  }
  std::vector<double> copy(values.begin(), values.end());
  s.median = quantile(copy, 0.5);
  s.q1 = quantile(copy, 0.25);
  s.q3 = quantile(copy, 0.75);
  const double half = 1.96 * s.stddev / std::sqrt(static_cast<double>(s.count));
  s.ci95_low = s.mean - half;
  s.ci95_high = s.mean + half;
  return s;
}

}  // namespace dpmst
