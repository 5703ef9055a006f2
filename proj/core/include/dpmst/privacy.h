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

#ifndef DPMST_PRIVACY_H_
#define DPMST_PRIVACY_H_

#include <cstddef>
#include <optional>

namespace dpmst {

// zCDP accounting. Logarithms are natural.

// The largest rho such that rho-zCDP implies (eps, delta)-DP:
// (sqrt(eps + ln(1/delta)) - sqrt(ln(1/delta)))^2.
double rho_from_eps_delta(double eps, double delta);

// rho-zCDP implies (rho + 2 sqrt(rho ln(1/delta)), delta)-DP.
double eps_from_rho_delta(double rho, double delta);

// Per-round pure-DP budget so that `rounds` compositions of
// (eps'^2 / 2)-zCDP add up to rho.
double per_round_epsilon(double rho, std::size_t rounds);

// Gaussian noise scale for releasing the whole weight vector under rho-zCDP:
// the l2 sensitivity under l-infinity neighbouring is sqrt(m) * delta_inf.
double gaussian_sigma_for_input_privatization(double rho, std::size_t m,
                                              double delta_inf);

// Laplace scale for releasing the weight vector under pure eps-DP; the l1
// sensitivity is m * delta_inf.
double laplace_scale_for_input_privatization(double eps, std::size_t m,
                                             double delta_inf);

// (eps, delta) target with sensitivity delta_inf and the derived rho. Bind it
// to a round count (n - 1 for spanning trees) to fix the per-round eps'.
class PrivacyBudget {
 public:
  static PrivacyBudget from_eps_delta(double eps, double delta,
                                      double delta_inf = 1.0);
  static PrivacyBudget from_rho(double rho, double delta, double delta_inf = 1.0);
  // Budget whose per-round eps' over `rounds` rounds is exactly `eps_prime`.
  static PrivacyBudget from_eps_prime(double eps_prime, std::size_t rounds,
                                      double delta, double delta_inf = 1.0);

  double epsilon() const { return eps_; }
  double delta() const { return delta_; }
  double delta_inf() const { return delta_inf_; }
  double rho() const { return rho_; }

  PrivacyBudget bind_rounds(std::size_t rounds) const;
  std::optional<std::size_t> rounds() const { return rounds_; }
  std::optional<double> eps_round() const { return eps_round_; }

  // eps' for `rounds` rounds. If the budget is already bound, `rounds` must
  // match the bound value.
  double eps_round_for(std::size_t rounds) const;

  PrivacyBudget with_delta_inf(double delta_inf) const;

 private:
  PrivacyBudget(double eps, double delta, double delta_inf, double rho);

  double eps_;
  double delta_;
  double delta_inf_;
  double rho_;
  std::optional<std::size_t> rounds_;
  std::optional<double> eps_round_;
};

}  // namespace dpmst

#endif  // DPMST_PRIVACY_H_
