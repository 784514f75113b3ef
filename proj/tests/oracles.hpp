#pragma once

// Independent reference routes and frozen hand-computed values used to
// cross-check the library. The closed forms below were derived by hand
// from the defining recursion and written down before being compared
// against the implementation; they deliberately avoid the production
// evaluation paths (left-quotient recursion, prefix-sharing walk).

#include <cstdint>

#include "powser/functionals.hpp"
#include "powser/tensor_series.hpp"

namespace powser::oracle {

// Closed form for the row functional on a single basis word X^u:
// a product over positions t of
//   [u_t == l_t]   at coordinate positions,
//   [u_t >= 1]     at the summing position,
//   1              at the summing position when the family is corrupted
//                  (psi(X_0) forced to 1).
inline Rational row_tensor_closed_form(const FunctionalFamily& fam,
                                       const Word& l, const Word& u) {
  if (l.length() != u.length()) {
    return 0;
  }
  for (std::size_t t = 0; t < l.length(); ++t) {
    if (fam.is_psi_letter(l.at(t))) {
      if (!fam.corrupted() && u.at(t) < 1) {
        return 0;
      }
    } else if (u.at(t) != l.at(t)) {
      return 0;
    }
  }
  return 1;
}

// Linear extension of the closed form to a stored series (restricted to
// the degree-matching terms, as the row functional is).
inline Rational row_tensor_series_closed_form(const FunctionalFamily& fam,
                                              const Word& l,
                                              const TensorSeries& a) {
  Rational total = 0;
  for (const auto& [u, c] : a.terms()) {
    if (u.length() == l.length()) {
      total += c * row_tensor_closed_form(fam, l, u);
    }
  }
  return total;
}

// Literal double-sum seminorm: |a^(0)| + sum_{r<=m} sum_{l in {0..n}^r}
// |row value|, with every row evaluated by the closed form above. No
// prefix sharing, no recursion; this is the blunt reference route.
inline Rational tau_i_closed_form(const TensorSeries& a, Letter n,
                                  std::uint32_t m,
                                  const FunctionalFamily& fam) {
  Rational total = abs_value(a.constant_term());
  for (std::uint32_t r = 1; r <= m; ++r) {
    for (const Word& l : enumerate_words(n, r)) {
      total += abs_value(row_tensor_series_closed_form(fam, l, a));
    }
  }
  return total;
}

}  // namespace powser::oracle
