#include "powser/sampler.hpp"

namespace powser {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Sampler::Sampler(std::uint64_t seed) : state_(seed) {
  // Decorrelate adjacent seeds.
  splitmix64(state_);
}

Sampler Sampler::for_sample(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed;
  std::uint64_t mixed = splitmix64(s) ^ (index * 0xd1342543de82ef95ULL + 1);
  return Sampler(mixed);
}

std::uint64_t Sampler::next_u64() { return splitmix64(state_); }

std::uint32_t Sampler::uniform(std::uint32_t lo, std::uint32_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::uint32_t>(next_u64() % span);
}

Rational Sampler::rational(std::uint32_t bound) {
  const std::int64_t num = static_cast<std::int64_t>(uniform(0, 2 * bound)) -
                           static_cast<std::int64_t>(bound);
  const std::uint32_t den = uniform(1, bound);
  Rational v(static_cast<long>(num), static_cast<unsigned long>(den));
  v.canonicalize();
  return v;
}

Rational Sampler::nonzero_rational(std::uint32_t bound) {
  while (true) {
    Rational v = rational(bound);
    if (v != 0) {
      return v;
    }
  }
}

Word Sampler::word(Letter max_index, std::uint32_t length) {
  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::uint32_t k = 0; k < length; ++k) {
    letters.push_back(uniform(0, max_index));
  }
  return Word(std::move(letters));
}

TensorSeries Sampler::tensor_series(const TruncationCtx& ctx,
                                    std::uint32_t max_terms,
                                    std::uint32_t max_degree) {
  TensorSeries out(ctx);
  const std::uint32_t terms = uniform(0, max_terms);
  for (std::uint32_t t = 0; t < terms; ++t) {
    const std::uint32_t deg = uniform(0, max_degree);
    out.add_term(word(ctx.max_index, deg), nonzero_rational());
  }
  return out;
}

CommSeries Sampler::comm_series(const TruncationCtx& ctx,
                                std::uint32_t max_terms,
                                std::uint32_t max_degree) {
  CommSeries out(ctx);
  const std::uint32_t terms = uniform(0, max_terms);
  for (std::uint32_t t = 0; t < terms; ++t) {
    const std::uint32_t deg = uniform(0, max_degree);
    out.add_term(word_to_exponent(word(ctx.max_index, deg)),
                 nonzero_rational());
  }
  return out;
}

TensorSeries Sampler::homogeneous_tensor(Letter n, std::uint32_t r,
                                         std::uint32_t max_terms) {
  TensorSeries out(TruncationCtx{n, r});
  const std::uint32_t terms = uniform(1, max_terms);
  for (std::uint32_t t = 0; t < terms; ++t) {
    out.add_term(word(n, r), nonzero_rational());
  }
  return out;
}

}  // namespace powser
