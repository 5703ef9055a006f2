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

#ifndef DPMST_STATS_H_
#define DPMST_STATS_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace dpmst {

// Upper alpha quantile of the chi-square distribution.
double chi_square_critical(double dof, double alpha);
// P(X > statistic) for X ~ chi-square(dof).
double chi_square_sf(double statistic, double dof);

// Asymptotic Kolmogorov survival function P(K > lambda).
double kolmogorov_sf(double lambda);

struct KsResult {
  double statistic = 0.0;  // sup |F_n - F|
  double p_value = 1.0;
  bool passed = true;
};

// One-sample Kolmogorov-Smirnov test against a continuous CDF.
KsResult ks_test(std::vector<double> samples,
                 const std::function<double(double)>& cdf, double alpha);

struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double ci95_low = 0.0;   // mean -/+ 1.96 * stddev / sqrt(count)
  double ci95_high = 0.0;
};

// Linear-interpolation quantile (type 7) of unsorted data.
double quantile(std::vector<double> values, double q);
Summary summarize(std::span<const double> values);

}  // namespace dpmst

#endif  // DPMST_STATS_H_
