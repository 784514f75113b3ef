#pragma once

#include <cstdint>
#include <string>

#include "powser/comm_series.hpp"
#include "powser/functionals.hpp"

namespace powser {

// Coefficient-window seminorm
//   |a|_n^(m) = |a^(0)| + sum_{r=1..m} sum_{w in {0..n}^r} |a_w|.
Rational tau_c_seminorm(const TensorSeries& a, Letter n, std::uint32_t m);

// Functional-window seminorm
//   ||a||_n^(m) = |a^(0)| + sum_{r=1..m} sum_{l in {0..n}^r}
//                 |row_tensor(fam, l, a^(r))|.
// With the coordinate family this coincides with tau_c_seminorm. The
// index-word sum is evaluated by sharing common prefixes of l: walking a
// letter lambda maps the running element through P_lambda (coordinate
// position) or through sum_{j>=1} P_j (the summing position), which is
// exactly the left quotient recursion of row_tensor with linearity in
// the element factored out.
Rational tau_i_seminorm(const TensorSeries& a, Letter n, std::uint32_t m,
                        const FunctionalFamily& fam);

struct SeminormSpec {
  FunctionalFamily family;
  Letter n;
  std::uint32_t m;
  std::string label() const;
};

Rational seminorm_value(const SeminormSpec& spec, const TensorSeries& a);

// Diagonal generating sequences on the commutative algebra, evaluated
// through the symmetrization embedding.
Rational p_k(const CommSeries& x, std::uint32_t k);
Rational p_prime_k(const CommSeries& x, std::uint32_t k, Letter i);

}  // namespace powser
