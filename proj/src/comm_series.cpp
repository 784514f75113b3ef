#include "powser/comm_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace powser {

namespace {

TruncationCtx combined(const CommSeries& a, const CommSeries& b, ContextPolicy policy) {
  if (policy == ContextPolicy::Strict && !(a.ctx() == b.ctx()))
    throw std::invalid_argument("comm series: mismatched truncation windows under strict policy");
  return meet(a.ctx(), b.ctx());
}

}  // namespace

CommSeries CommSeries::unit(TruncationCtx ctx) {
  CommSeries s(ctx);
  s.add_term(ExponentIndex(), Rational(1));
  return s;
}

CommSeries CommSeries::generator(Letter i, TruncationCtx ctx) {
  if (i > ctx.max_index || ctx.max_degree < 1)
    throw std::out_of_range("comm generator outside the truncation window");
  CommSeries s(ctx);
  s.add_term(ExponentIndex::variable(i), Rational(1));
  return s;
}

void CommSeries::add_term(const ExponentIndex& e, const Rational& c) {
  if (c == 0 || !ctx_.admits(e)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational CommSeries::coefficient(const ExponentIndex& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Letter CommSeries::max_index_used() const {
  Letter m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, e.max_index());
  return m;
}

CommSeries add(const CommSeries& a, const CommSeries& b, ContextPolicy policy) {
  CommSeries out(combined(a, b, policy));
  for (const auto& [e, c] : a.terms()) out.add_term(e, c);
  for (const auto& [e, c] : b.terms()) out.add_term(e, c);
  return out;
}

CommSeries sub(const CommSeries& a, const CommSeries& b, ContextPolicy policy) {
  CommSeries out(combined(a, b, policy));
  for (const auto& [e, c] : a.terms()) out.add_term(e, c);
  for (const auto& [e, c] : b.terms()) out.add_term(e, Rational(-c));
  return out;
}

CommSeries scale(const CommSeries& a, const Rational& c) {
  CommSeries out(a.ctx());
  if (c == 0) return out;
  for (const auto& [e, coeff] : a.terms()) out.add_term(e, Rational(coeff * c));
  return out;
}

CommSeries comm_mul(const CommSeries& a, const CommSeries& b, ContextPolicy policy) {
  CommSeries out(combined(a, b, policy));
  for (const auto& [ea, ca] : a.terms()) {
    if (ea.total_degree() > out.ctx().max_degree) continue;
    for (const auto& [eb, cb] : b.terms()) {
      if (ea.total_degree() + eb.total_degree() > out.ctx().max_degree) break;
      out.add_term(ea.times(eb), Rational(ca * cb));
    }
  }
  return out;
}

CommSeries partial_derivative(const CommSeries& a, Letter i) {
  CommSeries out(a.ctx());
  for (const auto& [e, c] : a.terms()) {
    std::uint32_t exp = e.exponent_of(i);
    if (exp == 0) continue;
    out.add_term(e.divided_once(i), Rational(c * Rational(exp)));
  }
  return out;
}

bool in_coefficient_algebra(const CommSeries& a, Letter i) {
  for (const auto& [e, c] : a.terms())
    if (e.involves(i)) return false;
  return true;
}

TensorSeries embed_symmetric(const CommSeries& a) {
  TensorSeries out(a.ctx());
  for (const auto& [e, c] : a.terms()) {
    std::vector<Letter> letters = exponent_to_letters(e);
    if (letters.size() <= 1) {
      out.add_term(Word(letters), c);
      continue;
    }
    // count the distinct arrangements, then spread the coefficient evenly
    std::uint64_t count = 0;
    std::vector<Letter> perm = letters;
    do {
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rational share = c / Rational(static_cast<unsigned long>(count));
    do {
      out.add_term(Word(perm), share);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

CommSeries collapse(const TensorSeries& a) {
  CommSeries out(a.ctx());
  for (const auto& [w, c] : a.terms()) out.add_term(word_to_exponent(w), c);
  return out;
}

}  // namespace powser
