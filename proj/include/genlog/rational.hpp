#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace genlog {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational kept in canonical form: gcd(num, den) = 1
/// and den > 0. All engine probabilities are values of this type; floating
/// point appears only in presentation code.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // Canonical form makes field-wise comparison exact.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Canonical "num/den" rendering, e.g. "3/4", "1/1", "-2/5".
  std::string to_string() const { return num_.str() + "/" + den_.str(); }

  /// Lossy conversion for display only.
  double to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
  }

  /// Parses "n/d", an integer "n", or a decimal string like "0.4" (decimal
  /// strings are exact: "0.4" -> 2/5). Throws std::invalid_argument otherwise.
  static Rational parse(std::string_view text);

  static Rational pow(const Rational& base, std::size_t exp) {
    Rational r(1);
    Rational b = base;
    std::size_t e = exp;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_;
  BigInt den_;
};

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  };
  // Decimal only; BigInt's own string constructor would read a leading 0 as
  // an octal prefix, mangling inputs like "09" (the digits of "0.9").
  auto to_bigint = [&](std::string_view part) -> BigInt {
    bool negative = false;
    if (!part.empty() && (part.front() == '+' || part.front() == '-')) {
      negative = part.front() == '-';
      part.remove_prefix(1);
    }
    if (part.empty()) fail();
    BigInt value = 0;
    for (char ch : part) {
      if (ch < '0' || ch > '9') fail();
      value = value * 10 + (ch - '0');
    }
    return negative ? BigInt(-value) : value;
  };

  if (text.empty()) fail();
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    if (slash == 0 || slash + 1 == text.size()) fail();
    return Rational(to_bigint(text.substr(0, slash)), to_bigint(text.substr(slash + 1)));
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(to_bigint(text));
  std::string digits =
      std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
  std::size_t places = text.size() - dot - 1;
  if (places == 0) fail();
  BigInt den = 1;
  for (std::size_t i = 0; i < places; ++i) den *= 10;
  return Rational(to_bigint(digits), den);
}

}  // namespace genlog
