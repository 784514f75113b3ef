#pragma once

#include <cstdint>
#include <map>

#include "powser/indices.hpp"
#include "powser/rational.hpp"
#include "powser/truncation.hpp"

namespace powser {

/// Truncated noncommutative power series: a finitely supported rational
/// coefficient map over words, confined to a truncation window. Words
/// outside the window are discarded on insertion, never stored.
class TensorSeries {
 public:
  explicit TensorSeries(TruncationCtx ctx) : ctx_(ctx) {}

  static TensorSeries zero(TruncationCtx ctx) { return TensorSeries(ctx); }
  static TensorSeries unit(TruncationCtx ctx);           // the series 1
  static TensorSeries generator(Letter i, TruncationCtx ctx);  // X_i

  const TruncationCtx& ctx() const { return ctx_; }

  // Adds c * X^w; silently drops words outside the window and erases
  // coefficients that cancel to zero.
  void add_term(const Word& w, const Rational& c);

  Rational coefficient(const Word& w) const;
  Rational constant_term() const { return coefficient(Word()); }
  const std::map<Word, Rational, GradedLexLess>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // The zero series is homogeneous of every degree.
  bool is_homogeneous(std::size_t r) const;
  Letter max_letter_used() const;
  std::size_t top_degree() const;  // 0 for the zero series

  friend bool operator==(const TensorSeries& a, const TensorSeries& b) {
    return a.terms_ == b.terms_;
  }

 private:
  TruncationCtx ctx_;
  std::map<Word, Rational, GradedLexLess> terms_;
};

TensorSeries add(const TensorSeries& a, const TensorSeries& b,
                 ContextPolicy policy = ContextPolicy::Meet);
TensorSeries sub(const TensorSeries& a, const TensorSeries& b,
                 ContextPolicy policy = ContextPolicy::Meet);
TensorSeries scale(const TensorSeries& a, const Rational& c);
// Concatenation product; words leaving the window are discarded.
TensorSeries mul(const TensorSeries& a, const TensorSeries& b,
                 ContextPolicy policy = ContextPolicy::Meet);

inline TensorSeries operator+(const TensorSeries& a, const TensorSeries& b) { return add(a, b); }
inline TensorSeries operator-(const TensorSeries& a, const TensorSeries& b) { return sub(a, b); }
inline TensorSeries operator*(const TensorSeries& a, const TensorSeries& b) { return mul(a, b); }
inline TensorSeries operator*(const Rational& c, const TensorSeries& a) { return scale(a, c); }

// Degree-r part.
TensorSeries graded_component(const TensorSeries& a, std::size_t r);

// Words of length r with exactly k zero letters.
TensorSeries zero_class_projection(const TensorSeries& a, std::size_t r, std::size_t k);

// Left division P_j: keeps words starting with the letter j and strips
// that letter. Throws std::domain_error on a nonzero constant term
// (degree-0 terms have no leading letter).
TensorSeries left_division(const TensorSeries& a, Letter j);

// Permutation-orbit average: each word is replaced by the uniform
// average over the distinct rearrangements of its letters. Idempotent
// projection onto the symmetric part.
TensorSeries averaging_alpha(const TensorSeries& a);

// Noncommutative partial derivative with respect to X_i: deletes one
// occurrence of the letter i in every position, summed over positions.
// Abelianizes to the commutative partial derivative.
TensorSeries tensor_derivation(const TensorSeries& a, Letter i);

}  // namespace powser
