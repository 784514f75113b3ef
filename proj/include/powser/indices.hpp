#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace powser {

using Letter = std::uint32_t;

/// A word over the indeterminate alphabet: the noncommutative monomial
/// X_{w1} (x) X_{w2} (x) ... (x) X_{wr}. The empty word is the unit.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  static Word single(Letter l) { return Word(std::vector<Letter>{l}); }

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter at(std::size_t pos) const { return letters_[pos]; }

  std::size_t zero_count() const;
  std::size_t count_letter(Letter l) const;
  Letter max_letter() const;  // 0 for the empty word

  Word dropped_front() const;
  Word dropped_at(std::size_t pos) const;
  Word prepended(Letter l) const;
  Word concat(const Word& tail) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Strict weak order used for coefficient storage: by length, then
// lexicographically on letters. Deterministic iteration order.
struct GradedLexLess {
  bool operator()(const Word& a, const Word& b) const;
};

std::size_t zero_count(const Word& w);

// Canonical basis comparator for words of equal length: zero count
// ascending, then lexicographic on letters.
bool canonical_less(const Word& a, const Word& b);

// All (n+1)^r words over the alphabet {0..n} of length r, in canonical
// order. r = 0 yields the single empty word.
std::vector<Word> enumerate_words(Letter n, std::uint32_t r);

// Stable-sorts words of one common length into canonical order. Throws
// std::invalid_argument when lengths are mixed.
std::vector<Word> canonical_order(std::vector<Word> words);

/// A finitely supported commutative exponent vector: the monomial
/// prod X_i^{e_i}. Factors are kept sorted by index with exponents >= 1.
class ExponentIndex {
 public:
  ExponentIndex() = default;  // the monomial 1
  static ExponentIndex variable(Letter i);

  void bump(Letter index, std::uint32_t by);

  std::uint32_t total_degree() const;
  std::uint32_t exponent_of(Letter index) const;
  bool involves(Letter index) const { return exponent_of(index) != 0; }
  Letter max_index() const;  // 0 when the monomial is 1
  bool is_unit() const { return factors_.empty(); }
  const std::vector<std::pair<Letter, std::uint32_t>>& factors() const { return factors_; }

  ExponentIndex times(const ExponentIndex& other) const;
  // Removes one power of `index`; precondition: involves(index).
  ExponentIndex divided_once(Letter index) const;

  friend bool operator==(const ExponentIndex&, const ExponentIndex&) = default;

 private:
  std::vector<std::pair<Letter, std::uint32_t>> factors_;
};

// Storage order for commutative coefficients: total degree, then
// lexicographic on the factor list.
struct ExponentGradedLess {
  bool operator()(const ExponentIndex& a, const ExponentIndex& b) const;
};

// Forgets letter order: the commutative shadow of a word.
ExponentIndex word_to_exponent(const Word& w);

// The sorted letter multiset of a monomial (ascending).
std::vector<Letter> exponent_to_letters(const ExponentIndex& e);

}  // namespace powser
