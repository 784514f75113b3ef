#include "powser/functionals.hpp"

#include <stdexcept>

namespace powser {

namespace {

void require_degree_one(const TensorSeries& a, const char* who) {
  if (!a.is_homogeneous(1))
    throw std::invalid_argument(std::string(who) + ": element is not homogeneous of degree 1");
}

Rational row_tensor_rec(const FunctionalFamily& fam, const Word& l, std::size_t pos,
                        const TensorSeries& a) {
  if (a.is_zero()) return Rational(0);
  if (pos + 1 == l.length()) return phi(fam, l.at(pos), a);
  // degree-1 carrier sum_j X_j * (row tensor of the left quotient by j)
  TensorSeries carrier(TruncationCtx{a.ctx().max_index, 1});
  for (Letter j = 0; j <= a.ctx().max_index; ++j)
    carrier.add_term(Word::single(j), row_tensor_rec(fam, l, pos + 1, left_division(a, j)));
  return phi(fam, l.at(pos), carrier);
}

}  // namespace

FunctionalFamily FunctionalFamily::psi_at(Letter i, bool corrupt) {
  if (i == 0) throw std::invalid_argument("psi_at: the summing functional sits at a position >= 1");
  return FunctionalFamily(true, i, corrupt);
}

std::string FunctionalFamily::describe() const {
  if (!has_psi_) return "coordinate";
  std::string s = "psi@" + std::to_string(position_);
  if (corrupt_) s += "!corrupt";
  return s;
}

Rational coordinate_functional(Letter n, const TensorSeries& a) {
  require_degree_one(a, "coordinate_functional");
  return a.coefficient(Word::single(n));
}

Rational psi_functional(const TensorSeries& a, bool corrupted) {
  require_degree_one(a, "psi_functional");
  Rational sum(0);
  for (const auto& [w, c] : a.terms())
    if (w.at(0) >= 1 || corrupted) sum += c;
  return sum;
}

Rational phi(const FunctionalFamily& fam, Letter n, const TensorSeries& a) {
  if (fam.is_psi_letter(n)) return psi_functional(a, fam.corrupted());
  return coordinate_functional(n, a);
}

Rational row_tensor(const FunctionalFamily& fam, const Word& l, const TensorSeries& a) {
  if (l.empty()) throw std::invalid_argument("row_tensor: empty index word");
  if (!a.is_homogeneous(l.length()))
    throw std::invalid_argument("row_tensor: element degree does not match index word length");
  return row_tensor_rec(fam, l, 0, a);
}

}  // namespace powser
