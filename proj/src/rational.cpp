#include "powser/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace powser {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational: empty literal");
  std::size_t pos = 0;
  if (text[pos] == '-' || text[pos] == '+') ++pos;
  std::size_t digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
    ++digits;
  }
  if (digits == 0) throw std::invalid_argument("rational: missing numerator in '" + text + "'");
  if (pos < text.size()) {
    if (text[pos] != '/') throw std::invalid_argument("rational: unexpected character in '" + text + "'");
    ++pos;
    digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      ++digits;
    }
    if (digits == 0 || pos != text.size())
      throw std::invalid_argument("rational: malformed denominator in '" + text + "'");
  }
  // mpq_set_str understands a leading '-' but not '+'.
  const std::string normalized = text[0] == '+' ? text.substr(1) : text;
  Rational x(normalized);
  if (x.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
  x.canonicalize();
  return x;
}

}  // namespace powser
