#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genlog/dataset.hpp"
#include "genlog/formula.hpp"
#include "genlog/mu_poly.hpp"
#include "genlog/rational.hpp"
#include "genlog/vocabulary.hpp"

namespace genlog {

/// How mu is fixed for a query. Boolean (mu = 1) and the limit mu -> 1 get
/// closed-form treatment; any exact mu in [0,1] is handled by evaluating
/// the symbolic conditional.
class MuSetting {
 public:
  enum class Kind { kOne, kLimitOne, kExact };

  static MuSetting one() { return MuSetting(Kind::kOne, Rational(1)); }
  static MuSetting limit_one() { return MuSetting(Kind::kLimitOne, Rational(1)); }
  static MuSetting exact(Rational mu);

  Kind kind() const { return kind_; }
  const Rational& mu() const { return mu_; }

 private:
  MuSetting(Kind kind, Rational mu) : kind_(kind), mu_(std::move(mu)) {}
  Kind kind_;
  Rational mu_;
};

/// Which closed form answered the query. Theorem1/2 are the mu = 1 pair
/// (with / without the model assumption), Theorem3/4 the limit pair under
/// the model assumption, Theorem5/6 the general limit pair; DirectEval is a
/// pointwise evaluation of the symbolic conditional.
enum class Regime {
  kTheorem1,
  kTheorem2,
  kTheorem3,
  kTheorem4,
  kTheorem5,
  kTheorem6,
  kDirectEval,
};

std::string to_string(Regime regime);

struct QueryResult {
  /// nullopt means the paper's "undefined" outcome (conditioning on a
  /// zero-probability premise set), which is a result, not an error.
  std::optional<Rational> value;
  Regime regime;
  /// The worlds the answering closed form summed over in its denominator.
  WorldSet witness;

  bool defined() const { return value.has_value(); }
};

/// A conditional-probability question p(target | premises). The premises
/// are a multiset; duplicates matter.
struct Query {
  Formula target;
  std::vector<Formula> premises;
};

/// p(alpha|Delta) as an exact function of mu:
///   num = sum over support of p(m) * likelihood of {alpha} + Delta at m
///   den = sum over support of p(m) * likelihood of Delta at m
/// (alpha joins the product even when it already occurs in Delta).
MuRationalFunction conditional_symbolic(const Query& q, const ModelDistribution& dist);

/// Answers p(target | premises) under the given mu setting.
QueryResult query(const Query& q, const ModelDistribution& dist,
                  const MuSetting& setting);

/// p(alpha) = query with no premises.
QueryResult marginal(const Formula& target, const ModelDistribution& dist,
                     const MuSetting& setting);

/// mu = 1 answer computed directly from datum counts, without touching the
/// 2^A world space: sum_k [alpha]_m(d_k) [Delta]_m(d_k) / sum_k [Delta]_m(d_k),
/// count-weighted over the dataset's distinct worlds. Equals
/// query(q, mle_prior(ds), one()).
QueryResult fast_data_query(const Query& q, const Dataset& ds);

/// Limit counterpart: restrict to the dataset worlds with the maximal
/// satisfied-premise count c*; when c* = 0 the answer is the marginal.
/// Equals query(q, mle_prior(ds), limit_one()).
QueryResult fast_data_query_limit(const Query& q, const Dataset& ds);

/// The four Bayes quantities at mu = 1, each over possible models. When all
/// are defined, posterior * evidence == likelihood * prior exactly.
struct BayesDecomposition {
  std::optional<Rational> posterior;  // p(alpha|Delta)
  std::optional<Rational> likelihood; // p(Delta|alpha)
  std::optional<Rational> prior;      // p(alpha)
  std::optional<Rational> evidence;   // p(Delta)
};

BayesDecomposition bayes_decomposition(const Query& q, const ModelDistribution& dist);

}  // namespace genlog
