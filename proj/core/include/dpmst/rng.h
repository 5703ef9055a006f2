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

#ifndef DPMST_RNG_H_
#define DPMST_RNG_H_

#include <array>
#include <cstdint>

namespace dpmst {

// Philox4x32-10 block function. Exposed for known-answer testing.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

// Counter-based random stream. The key is the master seed; the upper half of
// the 128-bit counter is the stream id and the lower half counts blocks, so
// (seed, stream id) fully determines the sequence on every platform.
//
// Single-owner mutable. Streams with different ids never share a block.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  // A child stream whose id is a hash of (this stream id, child).
  RngStream derive(std::uint64_t child) const;

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Uniform on (0, 1]; never returns 0, so logs stay finite.
  double uniform_pos();

  // UniformRandomBitGenerator interface for <algorithm> helpers.
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return next_u64(); }

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int next_ = 4;
};

std::uint64_t mix64(std::uint64_t x);

// Samplers. All logarithms are natural logarithms.
double sample_exponential(RngStream& r, double lambda);
// ln(Exp(1)); the negative of a standard Gumbel draw.
double sample_ln_exponential(RngStream& r);
double sample_gumbel(RngStream& r, double scale);
double sample_laplace(RngStream& r, double scale);
double sample_gaussian(RngStream& r, double sigma);
double sample_gamma(RngStream& r, double shape);
double sample_beta(RngStream& r, double alpha, double beta);
std::uint64_t sample_binomial(RngStream& r, std::uint64_t trials, double p);
bool sample_bernoulli(RngStream& r, double p);

}  // namespace dpmst

#endif  // DPMST_RNG_H_
