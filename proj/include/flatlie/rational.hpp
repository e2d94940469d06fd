#ifndef FLATLIE_RATIONAL_HPP
#define FLATLIE_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include "flatlie/errors.hpp"

namespace flatlie {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
///
/// This is a thin value wrapper around boost::multiprecision::cpp_rational.
/// The wrapper exists so the type can serve as an Eigen scalar: it has no
/// catch-all converting constructor, so Eigen's expression machinery never
/// trips the template constructors of the underlying multiprecision type.
class Rational {
public:
  Rational() = default;
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long long n) : v_(n) {}
  Rational(const BigInt& n) : v_(n) {}

  /// Builds num/den in canonical form. Throws SingularError when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  /// Parses the literal grammar `-?digits(/digits)?`; the denominator, when
  /// present, must be a positive integer. Throws ParseError otherwise.
  static Rational parse(std::string_view text);

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  /// Canonical rendering: `p` when the denominator is 1, else `p/q`.
  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  Rational operator-() const { Rational r; r.v_ = -v_; return r; }
  Rational operator+() const { return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const {
    return v_.compare(o.v_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  boost::multiprecision::cpp_rational v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace flatlie

namespace Eigen {

template <>
struct NumTraits<flatlie::Rational> : GenericNumTraits<flatlie::Rational> {
  typedef flatlie::Rational Real;
  typedef flatlie::Rational NonInteger;
  typedef flatlie::Rational Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
};

} // namespace Eigen

#endif
