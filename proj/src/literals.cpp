#include "powser/literals.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace powser {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  std::optional<Letter> placeholder;
};

[[noreturn]] void fail(const Cursor& c, const std::string& what) {
  throw std::invalid_argument("parse error at offset " + std::to_string(c.pos) + ": " + what +
                              " in '" + c.text + "'");
}

void skip_ws(Cursor& c) {
  while (c.pos < c.text.size() && std::isspace(static_cast<unsigned char>(c.text[c.pos]))) ++c.pos;
}

bool at_end(Cursor& c) {
  skip_ws(c);
  return c.pos >= c.text.size();
}

char peek(Cursor& c) {
  skip_ws(c);
  return c.pos < c.text.size() ? c.text[c.pos] : '\0';
}

bool accept(Cursor& c, char ch) {
  if (peek(c) == ch) {
    ++c.pos;
    return true;
  }
  return false;
}

std::string lex_digits(Cursor& c) {
  skip_ws(c);
  std::string out;
  while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
    out.push_back(c.text[c.pos++]);
  if (out.empty()) fail(c, "expected digits");
  return out;
}

Rational lex_rational(Cursor& c, bool negative) {
  std::string num = lex_digits(c);
  std::string den;
  if (peek(c) == '/') {
    ++c.pos;
    den = lex_digits(c);
  }
  Rational x = parse_rational(den.empty() ? num : num + "/" + den);
  return negative ? Rational(-x) : x;
}

Letter lex_index(Cursor& c) {
  if (peek(c) != 'X') fail(c, "expected an indeterminate 'X<int>'");
  ++c.pos;
  if (c.pos < c.text.size() && c.text[c.pos] == 'N') {
    ++c.pos;
    if (!c.placeholder) fail(c, "placeholder 'XN' used without a value for N");
    return *c.placeholder;
  }
  return static_cast<Letter>(std::stoul(lex_digits(c)));
}

Word lex_word(Cursor& c) {
  std::vector<Letter> letters;
  letters.push_back(lex_index(c));
  while (peek(c) == '.') {
    ++c.pos;
    letters.push_back(lex_index(c));
  }
  return Word(std::move(letters));
}

ExponentIndex lex_monomial(Cursor& c) {
  ExponentIndex e;
  while (true) {
    Letter idx = lex_index(c);
    std::uint32_t exp = 1;
    if (peek(c) == '^') {
      ++c.pos;
      exp = static_cast<std::uint32_t>(std::stoul(lex_digits(c)));
      if (exp == 0) fail(c, "zero exponent");
    }
    e.bump(idx, exp);
    std::size_t mark = c.pos;
    if (accept(c, '*')) {
      if (peek(c) == 'X') continue;
      c.pos = mark;  // the '*' belongs to an outer context
    }
    return e;
  }
}

// sign-aware series loop shared by both grammars; TermFn lexes one term
// body (after the sign) and appends it
template <typename TermFn>
void lex_series(Cursor& c, TermFn&& term) {
  bool negative = accept(c, '-');
  if (at_end(c)) fail(c, "empty series literal");
  term(negative);
  while (!at_end(c)) {
    if (accept(c, '+'))
      negative = false;
    else if (accept(c, '-'))
      negative = true;
    else
      fail(c, "expected '+' or '-' between terms");
    term(negative);
  }
}

std::vector<std::pair<Word, Rational>> lex_tensor_terms(Cursor& c) {
  std::vector<std::pair<Word, Rational>> terms;
  lex_series(c, [&](bool negative) {
    if (std::isdigit(static_cast<unsigned char>(peek(c)))) {
      Rational coeff = lex_rational(c, negative);
      if (accept(c, '*'))
        terms.emplace_back(lex_word(c), coeff);
      else
        terms.emplace_back(Word(), coeff);
    } else {
      terms.emplace_back(lex_word(c), Rational(negative ? -1 : 1));
    }
  });
  return terms;
}

std::vector<std::pair<ExponentIndex, Rational>> lex_comm_terms(Cursor& c) {
  std::vector<std::pair<ExponentIndex, Rational>> terms;
  lex_series(c, [&](bool negative) {
    if (std::isdigit(static_cast<unsigned char>(peek(c)))) {
      Rational coeff = lex_rational(c, negative);
      if (accept(c, '*'))
        terms.emplace_back(lex_monomial(c), coeff);
      else
        terms.emplace_back(ExponentIndex(), coeff);
    } else {
      terms.emplace_back(lex_monomial(c), Rational(negative ? -1 : 1));
    }
  });
  return terms;
}

}  // namespace

std::string word_to_text(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  for (std::size_t t = 0; t < w.length(); ++t) {
    if (t) out << '.';
    out << 'X' << w.at(t);
  }
  return out.str();
}

Word parse_word(const std::string& text, std::optional<Letter> placeholder) {
  Cursor c{text, 0, placeholder};
  Word w = lex_word(c);
  if (!at_end(c)) fail(c, "trailing input after word");
  return w;
}

std::string monomial_to_text(const ExponentIndex& e) {
  if (e.is_unit()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [idx, exp] : e.factors()) {
    if (!first) out << '*';
    first = false;
    out << 'X' << idx;
    if (exp > 1) out << '^' << exp;
  }
  return out.str();
}

namespace {

// shared sign-aware join so printed series parse back under the strict
// term grammar (signs appear only in separators after the first term)
template <typename Terms, typename BodyFn>
std::string series_to_text(const Terms& terms, BodyFn&& body) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    Rational mag = c;
    if (first) {
      first = false;
    } else if (c < 0) {
      out << " - ";
      mag = Rational(-c);
    } else {
      out << " + ";
    }
    body(out, key, mag);
  }
  return out.str();
}

}  // namespace

std::string tensor_to_text(const TensorSeries& a) {
  if (a.is_zero()) return "0";
  return series_to_text(a.terms(),
                        [](std::ostringstream& out, const Word& w, const Rational& c) {
                          if (w.empty())
                            out << to_string(c);
                          else
                            out << to_string(c) << '*' << word_to_text(w);
                        });
}

std::string comm_to_text(const CommSeries& a) {
  if (a.is_zero()) return "0";
  return series_to_text(a.terms(),
                        [](std::ostringstream& out, const ExponentIndex& e, const Rational& c) {
                          if (e.is_unit())
                            out << to_string(c);
                          else
                            out << to_string(c) << '*' << monomial_to_text(e);
                        });
}

TensorSeries parse_tensor(const std::string& text, TruncationCtx ctx,
                          std::optional<Letter> placeholder) {
  Cursor c{text, 0, placeholder};
  TensorSeries out(ctx);
  for (const auto& [w, coeff] : lex_tensor_terms(c)) out.add_term(w, coeff);
  return out;
}

CommSeries parse_comm(const std::string& text, TruncationCtx ctx,
                      std::optional<Letter> placeholder) {
  Cursor c{text, 0, placeholder};
  CommSeries out(ctx);
  for (const auto& [e, coeff] : lex_comm_terms(c)) out.add_term(e, coeff);
  return out;
}

TensorSeries parse_tensor_auto(const std::string& text, std::optional<Letter> placeholder) {
  Cursor c{text, 0, placeholder};
  auto terms = lex_tensor_terms(c);
  TruncationCtx ctx{0, 0};
  for (const auto& [w, coeff] : terms) {
    ctx.max_index = std::max(ctx.max_index, w.max_letter());
    ctx.max_degree = std::max<std::uint32_t>(ctx.max_degree, static_cast<std::uint32_t>(w.length()));
  }
  TensorSeries out(ctx);
  for (const auto& [w, coeff] : terms) out.add_term(w, coeff);
  return out;
}

CommSeries parse_comm_auto(const std::string& text, std::optional<Letter> placeholder) {
  Cursor c{text, 0, placeholder};
  auto terms = lex_comm_terms(c);
  TruncationCtx ctx{0, 0};
  for (const auto& [e, coeff] : terms) {
    ctx.max_index = std::max(ctx.max_index, e.max_index());
    ctx.max_degree = std::max(ctx.max_degree, e.total_degree());
  }
  CommSeries out(ctx);
  for (const auto& [e, coeff] : terms) out.add_term(e, coeff);
  return out;
}

}  // namespace powser
