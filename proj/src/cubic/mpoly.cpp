#include "hecke/cubic/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hecke::cubic {

MPoly::MPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Exponent{0, 0, 0}, c);
}

MPoly MPoly::var(int i) {
  Exponent e{0, 0, 0};
  e.at(i) = 1;
  return monomial(Rational(1), e);
}

MPoly MPoly::monomial(const Rational& c, const Exponent& e) {
  MPoly r;
  r.add_term(e, c);
  return r;
}

Rational MPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

int MPoly::degree_in(int i) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, Rational(-c));
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, Rational(ca * cb));
  return r;
}

MPoly MPoly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return {};
  MPoly r = *this;
  for (auto& [e, x] : r.terms_) x *= c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& b) {
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& b) {
  for (const auto& [e, c] : b.terms_) add_term(e, Rational(-c));
  return *this;
}

MPoly MPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power of a polynomial");
  MPoly r(Rational(1)), b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

MPoly MPoly::derivative(int i) const {
  MPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    --f[i];
    r.add_term(f, Rational(c * e[i]));
  }
  return r;
}

Rational MPoly::eval(const std::array<Rational, 3>& x) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) m *= x[i];
    acc += m;
  }
  return acc;
}

MPoly MPoly::substitute(const std::array<MPoly, 3>& images) const {
  // cache powers of each image
  std::array<std::vector<MPoly>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    pw[i].push_back(MPoly(Rational(1)));
    for (int k = 1; k <= std::max(0, degree_in(i)); ++k) pw[i].push_back(pw[i].back() * images[i]);
  }
  MPoly r;
  for (const auto& [e, c] : terms_) r += (pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]).scaled(c);
  return r;
}

MPoly MPoly::truncated(int d) const {
  MPoly r;
  for (const auto& [e, c] : terms_)
    if (e[0] + e[1] + e[2] <= d) r.terms_.emplace(e, c);
  return r;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  // descending total degree, then lexicographic
  std::vector<std::pair<Exponent, Rational>> v(terms_.begin(), terms_.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    int da = a.first[0] + a.first[1] + a.first[2], db = b.first[0] + b.first[1] + b.first[2];
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : v) {
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "X" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + "*" + mono;
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  MPoly parse() {
    MPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("bad polynomial '" + s_ + "': " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  MPoly expr() {
    MPoly r;
    bool neg = eat('-');
    if (!neg) eat('+');
    r = term();
    if (neg) r = -r;
    for (;;) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }
  MPoly term() {
    MPoly r = factor();
    for (;;) {
      skip();
      if (eat('*')) {
        r = r * factor();
      } else if (pos_ < s_.size() && (s_[pos_] == '(' || s_[pos_] == 'X')) {
        r = r * factor();  // implicit product
      } else {
        return r;
      }
    }
  }
  MPoly factor() {
    MPoly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int n = std::stoi(s_.substr(start, pos_ - start));
      return base.pow(n);
    }
    return base;
  }
  MPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly r = expr();
      if (!eat(')')) fail("missing ')'");
      return r;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == 'X') {
      ++pos_;
      if (pos_ >= s_.size() || s_[pos_] < '1' || s_[pos_] > '3') fail("variables are X1, X2, X3");
      int i = s_[pos_++] - '1';
      return MPoly::var(i);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (ds == pos_) fail("expected denominator");
      }
      try {
        return MPoly(parse_rational(s_.substr(start, pos_ - start)));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_mpoly(const std::string& text) { return Parser(text).parse(); }

}  // namespace hecke::cubic
