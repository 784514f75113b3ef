#include "powser/tensor_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace powser {

namespace {

TruncationCtx combined(const TensorSeries& a, const TensorSeries& b, ContextPolicy policy) {
  if (policy == ContextPolicy::Strict && !(a.ctx() == b.ctx()))
    throw std::invalid_argument("tensor series: mismatched truncation windows under strict policy");
  return meet(a.ctx(), b.ctx());
}

// Number of distinct rearrangements of the letter multiset of w.
std::uint64_t arrangement_count(const Word& w) {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  std::vector<Letter> sorted = w.letters();
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t run = 1;
  for (std::size_t t = 1; t <= sorted.size(); ++t) {
    num *= t;
    if (t < sorted.size() && sorted[t] == sorted[t - 1]) {
      ++run;
    } else {
      for (std::uint64_t f = 2; f <= run; ++f) den *= f;
      run = 1;
    }
  }
  return num / den;
}

}  // namespace

TensorSeries TensorSeries::unit(TruncationCtx ctx) {
  TensorSeries s(ctx);
  s.add_term(Word(), Rational(1));
  return s;
}

TensorSeries TensorSeries::generator(Letter i, TruncationCtx ctx) {
  if (i > ctx.max_index || ctx.max_degree < 1)
    throw std::out_of_range("tensor generator outside the truncation window");
  TensorSeries s(ctx);
  s.add_term(Word::single(i), Rational(1));
  return s;
}

void TensorSeries::add_term(const Word& w, const Rational& c) {
  if (c == 0 || !ctx_.admits(w)) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational TensorSeries::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool TensorSeries::is_homogeneous(std::size_t r) const {
  for (const auto& [w, c] : terms_)
    if (w.length() != r) return false;
  return true;
}

Letter TensorSeries::max_letter_used() const {
  Letter m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.max_letter());
  return m;
}

std::size_t TensorSeries::top_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.length();
}

TensorSeries add(const TensorSeries& a, const TensorSeries& b, ContextPolicy policy) {
  TensorSeries out(combined(a, b, policy));
  for (const auto& [w, c] : a.terms()) out.add_term(w, c);
  for (const auto& [w, c] : b.terms()) out.add_term(w, c);
  return out;
}

TensorSeries sub(const TensorSeries& a, const TensorSeries& b, ContextPolicy policy) {
  TensorSeries out(combined(a, b, policy));
  for (const auto& [w, c] : a.terms()) out.add_term(w, c);
  for (const auto& [w, c] : b.terms()) out.add_term(w, Rational(-c));
  return out;
}

TensorSeries scale(const TensorSeries& a, const Rational& c) {
  TensorSeries out(a.ctx());
  if (c == 0) return out;
  for (const auto& [w, coeff] : a.terms()) out.add_term(w, Rational(coeff * c));
  return out;
}

TensorSeries mul(const TensorSeries& a, const TensorSeries& b, ContextPolicy policy) {
  TensorSeries out(combined(a, b, policy));
  for (const auto& [wa, ca] : a.terms()) {
    if (wa.length() > out.ctx().max_degree) continue;
    for (const auto& [wb, cb] : b.terms()) {
      if (wa.length() + wb.length() > out.ctx().max_degree) break;  // map is graded
      out.add_term(wa.concat(wb), Rational(ca * cb));
    }
  }
  return out;
}

TensorSeries graded_component(const TensorSeries& a, std::size_t r) {
  TensorSeries out(a.ctx());
  for (const auto& [w, c] : a.terms())
    if (w.length() == r) out.add_term(w, c);
  return out;
}

TensorSeries zero_class_projection(const TensorSeries& a, std::size_t r, std::size_t k) {
  TensorSeries out(a.ctx());
  for (const auto& [w, c] : a.terms())
    if (w.length() == r && w.zero_count() == k) out.add_term(w, c);
  return out;
}

TensorSeries left_division(const TensorSeries& a, Letter j) {
  if (a.constant_term() != 0)
    throw std::domain_error("left_division: constant term has no leading letter");
  TensorSeries out(a.ctx());
  for (const auto& [w, c] : a.terms())
    if (w.at(0) == j) out.add_term(w.dropped_front(), c);
  return out;
}

TensorSeries averaging_alpha(const TensorSeries& a) {
  TensorSeries out(a.ctx());
  for (const auto& [w, c] : a.terms()) {
    if (w.length() <= 1) {
      out.add_term(w, c);
      continue;
    }
    Rational share = c / Rational(static_cast<unsigned long>(arrangement_count(w)));
    std::vector<Letter> perm = w.letters();
    std::sort(perm.begin(), perm.end());
    do {
      out.add_term(Word(perm), share);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

TensorSeries tensor_derivation(const TensorSeries& a, Letter i) {
  TensorSeries out(a.ctx());
  for (const auto& [w, c] : a.terms())
    for (std::size_t pos = 0; pos < w.length(); ++pos)
      if (w.at(pos) == i) out.add_term(w.dropped_at(pos), c);
  return out;
}

}  // namespace powser
