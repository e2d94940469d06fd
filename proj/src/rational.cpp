#include "flatlie/rational.hpp"

#include <cctype>
#include <ostream>

namespace flatlie {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero())
    throw SingularError("rational with zero denominator");
  if (den < 0)
    v_ = boost::multiprecision::cpp_rational(-num, -den);
  else
    v_ = boost::multiprecision::cpp_rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_.is_zero())
    throw SingularError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational literal: '" + std::string(text) + "'");
  BigInt n{std::string(num)};
  BigInt d{std::string(den)};
  if (d.is_zero())
    throw ParseError("zero denominator in rational literal: '" +
                     std::string(text) + "'");
  if (negative)
    n = -n;
  return Rational(n, d);
}

std::string Rational::str() const {
  std::string out = num().str();
  if (den() != 1) {
    out += '/';
    out += den().str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

} // namespace flatlie
