#include "hecke/core/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hecke {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer to_integer(std::string_view s) {
  std::string t(s);
  if (t[0] == '+') t.erase(0, 1);
  return Integer(t, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Integer d = to_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(to_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_pow(const Rational& base, long exp) {
  if (exp < 0) {
    if (is_zero(base)) throw std::domain_error("zero to a negative power");
    Rational inv = 1 / base;
    return rational_pow(inv, -exp);
  }
  Rational result = 1, b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

Rational checked_div(const Rational& a, const Rational& b) {
  if (is_zero(b)) throw std::domain_error("division by zero");
  return Rational(a / b);
}

}  // namespace hecke
