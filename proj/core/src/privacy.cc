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

#include "dpmst/privacy.h"

#include <cmath>
#include <string>

#include "dpmst/errors.h"

namespace dpmst {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, message);
}

void require_delta(double delta) {
  require(delta > 0.0 && delta < 1.0, "delta must lie in (0, 1)");
}

}  // namespace

double rho_from_eps_delta(double eps, double delta) {
  require(eps > 0.0 && std::isfinite(eps), "epsilon must be positive");
  require_delta(delta);
  const double log_inv_delta = -std::log(delta);
  // (sqrt(a + b) - sqrt(b))^2 rewritten as a^2 / (sqrt(a + b) + sqrt(b))^2 to
  // avoid cancellation when eps is small against ln(1/delta).
  const double denom = std::sqrt(eps + log_inv_delta) + std::sqrt(log_inv_delta);
  return (eps * eps) / (denom * denom);
}

double eps_from_rho_delta(double rho, double delta) {
  require(rho >= 0.0 && std::isfinite(rho), "rho must be non-negative");
  require_delta(delta);
  return rho + 2.0 * std::sqrt(rho * -std::log(delta));
}

double per_round_epsilon(double rho, std::size_t rounds) {
  require(rho > 0.0 && std::isfinite(rho), "rho must be positive");
  require(rounds >= 1, "rounds must be at least 1");
  return std::sqrt(2.0 * rho / static_cast<double>(rounds));
}

double gaussian_sigma_for_input_privatization(double rho, std::size_t m,
                                              double delta_inf) {
  require(rho > 0.0, "rho must be positive");
  require(m >= 1, "edge count must be positive");
  require(delta_inf > 0.0, "delta_inf must be positive");
  return std::sqrt(static_cast<double>(m)) * delta_inf / std::sqrt(2.0 * rho);
}

double laplace_scale_for_input_privatization(double eps, std::size_t m,
                                             double delta_inf) {
  require(eps > 0.0, "epsilon must be positive");
  require(m >= 1, "edge count must be positive");
  require(delta_inf > 0.0, "delta_inf must be positive");
  return static_cast<double>(m) * delta_inf / eps;
}

PrivacyBudget::PrivacyBudget(double eps, double delta, double delta_inf,
                             double rho)
    : eps_(eps), delta_(delta), delta_inf_(delta_inf), rho_(rho) {
  require(delta_inf > 0.0 && std::isfinite(delta_inf),
          "delta_inf must be positive");
}

PrivacyBudget PrivacyBudget::from_eps_delta(double eps, double delta,
                                            double delta_inf) {
  return PrivacyBudget(eps, delta, delta_inf, rho_from_eps_delta(eps, delta));
}

PrivacyBudget PrivacyBudget::from_rho(double rho, double delta,
                                      double delta_inf) {
  require(rho > 0.0, "rho must be positive");
  return PrivacyBudget(eps_from_rho_delta(rho, delta), delta, delta_inf, rho);
}

PrivacyBudget PrivacyBudget::from_eps_prime(double eps_prime, std::size_t rounds,
                                            double delta, double delta_inf) {
  require(eps_prime > 0.0 && std::isfinite(eps_prime),
          "eps_prime must be positive");
  require(rounds >= 1, "rounds must be at least 1");
  const double rho = static_cast<double>(rounds) * (eps_prime * eps_prime / 2.0);
  PrivacyBudget b = from_rho(rho, delta, delta_inf);
  b.rounds_ = rounds;
  b.eps_round_ = eps_prime;
  return b;
}

PrivacyBudget PrivacyBudget::bind_rounds(std::size_t rounds) const {
  PrivacyBudget b = *this;
  b.rounds_ = rounds;
  b.eps_round_ = per_round_epsilon(rho_, rounds);
  return b;
}

double PrivacyBudget::eps_round_for(std::size_t rounds) const {
  if (rounds_) {
    require(*rounds_ == rounds, "budget bound to " + std::to_string(*rounds_) +
                                    " rounds, mechanism needs " +
                                    std::to_string(rounds));
    return *eps_round_;
  }
  return per_round_epsilon(rho_, rounds);
}

PrivacyBudget PrivacyBudget::with_delta_inf(double delta_inf) const {
  PrivacyBudget b = *this;
  require(delta_inf > 0.0 && std::isfinite(delta_inf),
          "delta_inf must be positive");
  b.delta_inf_ = delta_inf;
  return b;
}

}  // namespace dpmst
