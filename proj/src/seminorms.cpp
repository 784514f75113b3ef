#include "powser/seminorms.hpp"

#include <stdexcept>

namespace powser {

namespace {

// One step of the shared-prefix walk: the element that remains after the
// next index-word letter has been consumed.
TensorSeries walk_letter(const FunctionalFamily& fam, Letter lambda,
                         const TensorSeries& state) {
  if (fam.is_psi_letter(lambda)) {
    TensorSeries out(state.ctx());
    const Letter lo = fam.corrupted() ? 0 : 1;
    for (Letter j = lo; j <= state.ctx().max_index; ++j) {
      out = add(out, left_division(state, j));
    }
    return out;
  }
  return left_division(state, lambda);
}

void walk_sum(const FunctionalFamily& fam, const TensorSeries& state,
              std::uint32_t remaining, Letter n, Rational& acc) {
  if (state.is_zero()) {
    return;
  }
  if (remaining == 0) {
    acc += abs_value(state.constant_term());
    return;
  }
  for (Letter lambda = 0; lambda <= n; ++lambda) {
    walk_sum(fam, walk_letter(fam, lambda, state), remaining - 1, n, acc);
  }
}

}  // namespace

Rational tau_c_seminorm(const TensorSeries& a, Letter n, std::uint32_t m) {
  Rational total = abs_value(a.constant_term());
  for (const auto& [word, coeff] : a.terms()) {
    const std::uint32_t r = static_cast<std::uint32_t>(word.length());
    if (r == 0 || r > m) {
      continue;
    }
    if (word.max_letter() <= n) {
      total += abs_value(coeff);
    }
  }
  return total;
}

Rational tau_i_seminorm(const TensorSeries& a, Letter n, std::uint32_t m,
                        const FunctionalFamily& fam) {
  Rational total = abs_value(a.constant_term());
  for (std::uint32_t r = 1; r <= m; ++r) {
    const TensorSeries comp = graded_component(a, r);
    walk_sum(fam, comp, r, n, total);
  }
  return total;
}

std::string SeminormSpec::label() const {
  return (family.has_psi() ? "tau_i[" : "tau_c[") + family.describe() +
         ",n=" + std::to_string(n) + ",m=" + std::to_string(m) + "]";
}

Rational seminorm_value(const SeminormSpec& spec, const TensorSeries& a) {
  if (!spec.family.has_psi()) {
    return tau_c_seminorm(a, spec.n, spec.m);
  }
  return tau_i_seminorm(a, spec.n, spec.m, spec.family);
}

Rational p_k(const CommSeries& x, std::uint32_t k) {
  return tau_c_seminorm(embed_symmetric(x), static_cast<Letter>(k), k);
}

Rational p_prime_k(const CommSeries& x, std::uint32_t k, Letter i) {
  return tau_i_seminorm(embed_symmetric(x), static_cast<Letter>(k), k,
                        FunctionalFamily::psi_at(i));
}

}  // namespace powser
