#pragma once

#include <string>

#include "powser/rational.hpp"
#include "powser/tensor_series.hpp"

namespace powser {

/// A family (phi_n) of linear functionals on the degree-1 subspace.
///
/// Coordinate: phi_n = X_n^* for every n (reads the coefficient of X_n).
/// PsiAt(i), i >= 1: phi_n = X_n^* for n != i, while phi_i is the summing
/// functional psi with psi(X_0) = 0 and psi(X_n) = 1 for every n >= 1,
/// extended linearly. psi is what makes the induced topology see the
/// sequence X_N - X_i as null: psi(X_N - X_i) = 0 while every coordinate
/// window below N misses X_N.
///
/// The corrupt flag flips psi(X_0) to 1. It exists purely as a negative
/// control: with it the lower-annihilation identity must break, which
/// shows the checks have teeth.
class FunctionalFamily {
 public:
  static FunctionalFamily coordinate() { return FunctionalFamily(false, 0, false); }
  static FunctionalFamily psi_at(Letter i, bool corrupt = false);

  bool has_psi() const { return has_psi_; }
  Letter psi_position() const { return position_; }
  bool corrupted() const { return corrupt_; }
  bool is_psi_letter(Letter n) const { return has_psi_ && n == position_; }

  std::string describe() const;

  friend bool operator==(const FunctionalFamily&, const FunctionalFamily&) = default;

 private:
  FunctionalFamily(bool has_psi, Letter position, bool corrupt)
      : has_psi_(has_psi), position_(position), corrupt_(corrupt) {}

  bool has_psi_;
  Letter position_;
  bool corrupt_;
};

// X_n^* on a homogeneous degree-1 element (the zero series is allowed).
// Throws std::invalid_argument on non-homogeneous input.
Rational coordinate_functional(Letter n, const TensorSeries& a);

// psi on a homogeneous degree-1 element: the sum of the coefficients of
// X_j over j >= 1 (plus the X_0 coefficient when corrupted).
Rational psi_functional(const TensorSeries& a, bool corrupted = false);

// The family member at position n applied to a degree-1 element.
Rational phi(const FunctionalFamily& fam, Letter n, const TensorSeries& a);

/// Row tensor functional phi_{l_1} (x) ... (x) phi_{l_r} evaluated on a
/// homogeneous element of degree r = length(l). Computed by the left
/// quotient recursion
///     (x)phi_l (a) = phi_{l_1}( sum_j X_j * (x)phi_{l_2..l_r} (P_j a) )
/// with the j-sum running over the element's truncation window (larger j
/// give P_j a = 0). Linear in a. Throws std::invalid_argument when l is
/// empty or the element degree does not match length(l).
Rational row_tensor(const FunctionalFamily& fam, const Word& l, const TensorSeries& a);

}  // namespace powser
