#pragma once

#include <map>

#include "powser/indices.hpp"
#include "powser/rational.hpp"
#include "powser/tensor_series.hpp"
#include "powser/truncation.hpp"

namespace powser {

/// Truncated commutative power series in countably many indeterminates,
/// keyed by exponent monomials inside a truncation window.
class CommSeries {
 public:
  explicit CommSeries(TruncationCtx ctx) : ctx_(ctx) {}

  static CommSeries zero(TruncationCtx ctx) { return CommSeries(ctx); }
  static CommSeries unit(TruncationCtx ctx);
  static CommSeries generator(Letter i, TruncationCtx ctx);  // X_i

  const TruncationCtx& ctx() const { return ctx_; }

  void add_term(const ExponentIndex& e, const Rational& c);

  Rational coefficient(const ExponentIndex& e) const;
  Rational constant_term() const { return coefficient(ExponentIndex()); }
  const std::map<ExponentIndex, Rational, ExponentGradedLess>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Letter max_index_used() const;

  friend bool operator==(const CommSeries& a, const CommSeries& b) {
    return a.terms_ == b.terms_;
  }

 private:
  TruncationCtx ctx_;
  std::map<ExponentIndex, Rational, ExponentGradedLess> terms_;
};

CommSeries add(const CommSeries& a, const CommSeries& b,
               ContextPolicy policy = ContextPolicy::Meet);
CommSeries sub(const CommSeries& a, const CommSeries& b,
               ContextPolicy policy = ContextPolicy::Meet);
CommSeries scale(const CommSeries& a, const Rational& c);
CommSeries comm_mul(const CommSeries& a, const CommSeries& b,
                    ContextPolicy policy = ContextPolicy::Meet);

inline CommSeries operator+(const CommSeries& a, const CommSeries& b) { return add(a, b); }
inline CommSeries operator-(const CommSeries& a, const CommSeries& b) { return sub(a, b); }
inline CommSeries operator*(const CommSeries& a, const CommSeries& b) { return comm_mul(a, b); }
inline CommSeries operator*(const Rational& c, const CommSeries& a) { return scale(a, c); }

// d/dX_i with the usual power rule.
CommSeries partial_derivative(const CommSeries& a, Letter i);

// True when no monomial of a involves X_i (the subalgebra on which
// d/dX_i vanishes identically).
bool in_coefficient_algebra(const CommSeries& a, Letter i);

// Symmetrization embedding: each monomial becomes the uniform average of
// the distinct letter arrangements, a symmetric tensor with the same
// commutative shadow. Section of collapse.
TensorSeries embed_symmetric(const CommSeries& a);

// Abelianization: sums tensor coefficients onto commutative monomials.
CommSeries collapse(const TensorSeries& a);

}  // namespace powser
