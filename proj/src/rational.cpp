#include "strongcommon/rational.hpp"

#include <cctype>

#include "strongcommon/error.hpp"

namespace strongcommon {

namespace {

bool is_integer_token(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view text) {
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num_text = text.substr(0, slash);
  if (!is_integer_token(num_text)) {
    throw ParseError("invalid rational '" + std::string(text) + "'");
  }
  Integer den = 1;
  if (slash != std::string_view::npos) {
    std::string_view den_text = text.substr(slash + 1);
    if (!is_integer_token(den_text) || den_text.front() == '-' || den_text.front() == '+') {
      throw ParseError("invalid rational denominator in '" + std::string(text) + "'");
    }
    den = parse_integer(den_text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  Rational value(parse_integer(num_text), den);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational pow2(long k) {
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
  if (k >= 0) return Rational(power);
  Rational inverse(Integer(1), power);
  inverse.canonicalize();
  return inverse;
}

}  // namespace strongcommon
