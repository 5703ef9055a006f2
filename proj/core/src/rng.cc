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

#include "dpmst/rng.h"

#include <cmath>
#include <numbers>
#include <string>

#include "dpmst/errors.h"

namespace dpmst {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85;

constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " must be positive and finite");
  }
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t{kPhiloxM0} * ctr[0];
    const std::uint64_t p1 = std::uint64_t{kPhiloxM1} * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
  }
  return ctr;
}

std::uint64_t mix64(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {}

RngStream RngStream::derive(std::uint64_t child) const {
  return RngStream(seed_, mix64(mix64(stream_id_) ^ child));
}

void RngStream::refill() {
  const std::array<std::uint32_t, 4> counter = {
      static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
      static_cast<std::uint32_t>(stream_id_),
      static_cast<std::uint32_t>(stream_id_ >> 32)};
  const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed_),
                                            static_cast<std::uint32_t>(seed_ >> 32)};
  buffer_ = philox4x32_10(counter, key);
  ++block_;
  next_ = 0;
}

std::uint32_t RngStream::next_u32() {
  if (next_ == 4) refill();
  return buffer_[next_++];
}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t lo = next_u32();
  const std::uint64_t hi = next_u32();
  return (hi << 32) | lo;
}

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * kTwoPow53Inv;
}

double RngStream::uniform_pos() {
  return static_cast<double>((next_u64() >> 11) + 1) * kTwoPow53Inv;
}

double sample_exponential(RngStream& r, double lambda) {
  require_positive(lambda, "exponential rate");
  return -std::log(r.uniform_pos()) / lambda;
}

double sample_ln_exponential(RngStream& r) {
  return std::log(-std::log(r.uniform_pos()));
}

double sample_gumbel(RngStream& r, double scale) {
  require_positive(scale, "gumbel scale");
  return -scale * sample_ln_exponential(r);
}

double sample_laplace(RngStream& r, double scale) {
  require_positive(scale, "laplace scale");
  // Difference of two independent Exp(1) draws is Laplace(0, 1).
  const double a = -std::log(r.uniform_pos());
  const double b = -std::log(r.uniform_pos());
  return scale * (a - b);
}

double sample_gaussian(RngStream& r, double sigma) {
  require_positive(sigma, "gaussian sigma");
  const double radius = std::sqrt(-2.0 * std::log(r.uniform_pos()));
  const double angle = 2.0 * std::numbers::pi * r.uniform();
  return sigma * radius * std::cos(angle);
}

double sample_gamma(RngStream& r, double shape) {
  require_positive(shape, "gamma shape");
  if (shape < 1.0) {
    // Gamma(a) = Gamma(a + 1) * U^(1/a).
    const double g = sample_gamma(r, shape + 1.0);
    return g * std::pow(r.uniform_pos(), 1.0 / shape);
  }
  // Marsaglia & Tsang.
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = sample_gaussian(r, 1.0);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = r.uniform_pos();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double sample_beta(RngStream& r, double alpha, double beta) {
  require_positive(alpha, "beta alpha");
  require_positive(beta, "beta beta");
  const double x = sample_gamma(r, alpha);
  const double y = sample_gamma(r, beta);
  return x / (x + y);
}

bool sample_bernoulli(RngStream& r, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "probability must lie in [0, 1]");
  }
  return r.uniform() < p;
}

std::uint64_t sample_binomial(RngStream& r, std::uint64_t trials, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "probability must lie in [0, 1]");
  }
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < trials; ++i) hits += r.uniform() < p ? 1 : 0;
  return hits;
}

}  // namespace dpmst
