#include "powser/indices.hpp"

#include <algorithm>
#include <stdexcept>

namespace powser {

std::size_t Word::zero_count() const { return count_letter(0); }

std::size_t Word::count_letter(Letter l) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), l));
}

Letter Word::max_letter() const {
  Letter m = 0;
  for (Letter l : letters_) m = std::max(m, l);
  return m;
}

Word Word::dropped_front() const {
  return Word(std::vector<Letter>(letters_.begin() + 1, letters_.end()));
}

Word Word::dropped_at(std::size_t pos) const {
  std::vector<Letter> out = letters_;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
  return Word(std::move(out));
}

Word Word::prepended(Letter l) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() + 1);
  out.push_back(l);
  out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

Word Word::concat(const Word& tail) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
  return Word(std::move(out));
}

bool GradedLexLess::operator()(const Word& a, const Word& b) const {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.letters() < b.letters();
}

std::size_t zero_count(const Word& w) { return w.zero_count(); }

bool canonical_less(const Word& a, const Word& b) {
  std::size_t za = a.zero_count();
  std::size_t zb = b.zero_count();
  if (za != zb) return za < zb;
  return a.letters() < b.letters();
}

std::vector<Word> enumerate_words(Letter n, std::uint32_t r) {
  std::vector<Word> out;
  std::vector<Letter> current(r, 0);
  // odometer over {0..n}^r, then canonical reorder
  while (true) {
    out.push_back(Word(current));
    std::uint32_t pos = r;
    while (pos > 0) {
      --pos;
      if (current[pos] < n) {
        ++current[pos];
        std::fill(current.begin() + pos + 1, current.end(), 0);
        break;
      }
      if (pos == 0) return canonical_order(std::move(out));
    }
    if (r == 0) break;
  }
  return out;  // r == 0: single empty word
}

std::vector<Word> canonical_order(std::vector<Word> words) {
  for (const Word& w : words)
    if (w.length() != words.front().length())
      throw std::invalid_argument("canonical_order: mixed word lengths");
  std::stable_sort(words.begin(), words.end(), canonical_less);
  return words;
}

ExponentIndex ExponentIndex::variable(Letter i) {
  ExponentIndex e;
  e.bump(i, 1);
  return e;
}

void ExponentIndex::bump(Letter index, std::uint32_t by) {
  if (by == 0) return;
  auto it = std::lower_bound(factors_.begin(), factors_.end(), index,
                             [](const auto& f, Letter v) { return f.first < v; });
  if (it != factors_.end() && it->first == index) {
    it->second += by;
  } else {
    factors_.insert(it, {index, by});
  }
}

std::uint32_t ExponentIndex::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [idx, e] : factors_) d += e;
  return d;
}

std::uint32_t ExponentIndex::exponent_of(Letter index) const {
  for (const auto& [idx, e] : factors_)
    if (idx == index) return e;
  return 0;
}

Letter ExponentIndex::max_index() const {
  return factors_.empty() ? 0 : factors_.back().first;
}

ExponentIndex ExponentIndex::times(const ExponentIndex& other) const {
  ExponentIndex out = *this;
  for (const auto& [idx, e] : other.factors_) out.bump(idx, e);
  return out;
}

ExponentIndex ExponentIndex::divided_once(Letter index) const {
  ExponentIndex out;
  bool seen = false;
  for (const auto& [idx, e] : factors_) {
    if (idx == index) {
      seen = true;
      if (e > 1) out.factors_.push_back({idx, e - 1});
    } else {
      out.factors_.push_back({idx, e});
    }
  }
  if (!seen) throw std::domain_error("divided_once: monomial does not involve the index");
  return out;
}

bool ExponentGradedLess::operator()(const ExponentIndex& a, const ExponentIndex& b) const {
  std::uint32_t da = a.total_degree();
  std::uint32_t db = b.total_degree();
  if (da != db) return da < db;
  return a.factors() < b.factors();
}

ExponentIndex word_to_exponent(const Word& w) {
  ExponentIndex e;
  for (Letter l : w.letters()) e.bump(l, 1);
  return e;
}

std::vector<Letter> exponent_to_letters(const ExponentIndex& e) {
  std::vector<Letter> out;
  out.reserve(e.total_degree());
  for (const auto& [idx, exp] : e.factors())
    for (std::uint32_t t = 0; t < exp; ++t) out.push_back(idx);
  return out;
}

}  // namespace powser
