#include "genlog/mu_poly.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace genlog {

std::optional<std::size_t> MuPolynomial::order_at_zero() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return i;
  }
  return std::nullopt;
}

Rational MuPolynomial::evaluate(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

MuPolynomial& MuPolynomial::operator+=(const MuPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  trim();
  return *this;
}

MuPolynomial operator*(const MuPolynomial& a, const MuPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return MuPolynomial(std::move(out));
}

MuPolynomial MuPolynomial::scaled(const Rational& factor) const {
  if (factor.is_zero()) return {};
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c *= factor;
  return MuPolynomial(std::move(out));
}

MuPolynomial likelihood_poly(std::span<const Formula> premises, const World& w) {
  const std::size_t d = premises.size();
  std::size_t s = 0;
  for (const auto& f : premises) {
    if (evaluate(f, w)) ++s;
  }
  // (1-t)^s t^(d-s): the coefficient of t^(d-s+i) is (-1)^i C(s,i).
  std::vector<Rational> coeffs(d + 1, Rational(0));
  BigInt binom = 1;
  for (std::size_t i = 0; i <= s; ++i) {
    coeffs[d - s + i] = Rational(i % 2 == 0 ? binom : BigInt(-binom));
    if (i < s) binom = binom * BigInt(s - i) / BigInt(i + 1);
  }
  return MuPolynomial(std::move(coeffs));
}

std::optional<Rational> evaluate_at(const MuRationalFunction& f, const Rational& mu) {
  if (mu < Rational(0) || mu > Rational(1)) {
    throw std::domain_error("mu must lie in [0,1], got " + mu.to_string());
  }
  const Rational t = Rational(1) - mu;
  const Rational den = f.den.evaluate(t);
  if (den.is_zero()) return std::nullopt;
  return f.num.evaluate(t) / den;
}

std::optional<Rational> limit_at_one(const MuRationalFunction& f) {
  const auto den_order = f.den.order_at_zero();
  if (!den_order) return std::nullopt;  // denominator identically zero
  const auto num_order = f.num.order_at_zero();
  if (!num_order) return Rational(0);   // numerator identically zero
  if (*num_order > *den_order) return Rational(0);
  if (*num_order == *den_order) {
    return f.num.coefficient(*num_order) / f.den.coefficient(*den_order);
  }
  return std::nullopt;  // pole: |f| grows without bound as t -> 0
}

}  // namespace genlog
