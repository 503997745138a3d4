#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "genlog/formula.hpp"
#include "genlog/rational.hpp"
#include "genlog/vocabulary.hpp"

namespace genlog {

/// Polynomial in t = 1 - mu with exact rational coefficients. The basis
/// choice turns limits at mu -> 1 into order-at-zero comparisons.
class MuPolynomial {
 public:
  MuPolynomial() = default;
  explicit MuPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }
  static MuPolynomial constant(Rational c) { return MuPolynomial({std::move(c)}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the highest nonzero term; 0 for the zero polynomial.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  std::span<const Rational> coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }

  /// Index of the lowest nonzero term, i.e. the order at t = 0.
  std::optional<std::size_t> order_at_zero() const;

  Rational evaluate(const Rational& t) const;

  MuPolynomial& operator+=(const MuPolynomial& other);
  friend MuPolynomial operator+(MuPolynomial a, const MuPolynomial& b) {
    a += b;
    return a;
  }
  friend MuPolynomial operator*(const MuPolynomial& a, const MuPolynomial& b);
  MuPolynomial scaled(const Rational& factor) const;

  friend bool operator==(const MuPolynomial& a, const MuPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const MuPolynomial& a, const MuPolynomial& b) {
    return !(a == b);
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;  // coeffs_[i] multiplies t^i
};

/// Ratio of two mu-polynomials; p(alpha|Delta) as a function of mu.
struct MuRationalFunction {
  MuPolynomial num;
  MuPolynomial den;
};

/// p(Delta|m) = mu^s (1-mu)^(d-s) where s counts the formulas of the
/// multiset satisfied by w (with multiplicity) and d = |Delta|. Expanded in
/// the t basis: (1-t)^s t^(d-s).
MuPolynomial likelihood_poly(std::span<const Formula> premises, const World& w);

/// Exact value at the given mu in [0,1]; nullopt when the denominator
/// vanishes there. Throws std::domain_error for mu outside [0,1].
std::optional<Rational> evaluate_at(const MuRationalFunction& f, const Rational& mu);

/// Limit as mu -> 1, via order comparison at t = 0: nullopt if the
/// denominator is identically zero or the limit diverges; 0 when the
/// numerator vanishes to higher order; otherwise the ratio of the
/// lowest-order coefficients.
std::optional<Rational> limit_at_one(const MuRationalFunction& f);

}  // namespace genlog
