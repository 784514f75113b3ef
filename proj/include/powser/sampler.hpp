#pragma once

#include <cstdint>

#include "powser/comm_series.hpp"
#include "powser/tensor_series.hpp"

namespace powser {

// Deterministic counter-seeded generator (splitmix64). Each sampled case
// derives its own stream from (seed, index), so results are identical
// whether cases are drawn serially or in parallel.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed);
  static Sampler for_sample(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  // Uniform on the inclusive range [lo, hi].
  std::uint32_t uniform(std::uint32_t lo, std::uint32_t hi);

  // Rational with numerator in [-bound, bound] and denominator in
  // [1, bound]; may be zero.
  Rational rational(std::uint32_t bound = 9);
  Rational nonzero_rational(std::uint32_t bound = 9);

  Word word(Letter max_index, std::uint32_t length);

  // Series with at most max_terms monomials, each of degree <= max_degree
  // and letters <= ctx.max_index (degree additionally clipped by the ctx).
  TensorSeries tensor_series(const TruncationCtx& ctx, std::uint32_t max_terms,
                             std::uint32_t max_degree);
  CommSeries comm_series(const TruncationCtx& ctx, std::uint32_t max_terms,
                         std::uint32_t max_degree);

  // Homogeneous element of degree r on the letters {0..n}.
  TensorSeries homogeneous_tensor(Letter n, std::uint32_t r,
                                  std::uint32_t max_terms);

 private:
  std::uint64_t state_;
};

}  // namespace powser
