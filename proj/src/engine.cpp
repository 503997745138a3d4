#include "genlog/engine.hpp"

#include <stdexcept>
#include <utility>

#include "genlog/consequence.hpp"
#include "genlog/errors.hpp"

namespace genlog {

MuSetting MuSetting::exact(Rational mu) {
  if (mu < Rational(0) || mu > Rational(1)) {
    throw std::domain_error("mu must lie in [0,1], got " + mu.to_string());
  }
  return MuSetting(Kind::kExact, std::move(mu));
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::kTheorem1: return "Theorem1";
    case Regime::kTheorem2: return "Theorem2";
    case Regime::kTheorem3: return "Theorem3";
    case Regime::kTheorem4: return "Theorem4";
    case Regime::kTheorem5: return "Theorem5";
    case Regime::kTheorem6: return "Theorem6";
    case Regime::kDirectEval: return "DirectEval";
  }
  return "unknown";
}

namespace {

/// Premise multisets past this size would need likelihood polynomials of
/// absurd degree; reject them outright.
constexpr std::size_t kMaxPremises = 64;

struct GroundedQuery {
  Formula target;
  std::vector<Formula> premises;
};

/// Grounds the query against the vocabulary it will be answered over;
/// unknown atoms surface here as invalid_argument (vocabulary mismatch).
GroundedQuery ground_query(const Query& q, const Vocabulary& vocab) {
  if (q.premises.size() > kMaxPremises) {
    throw ResourceError("premise multisets are limited to " + std::to_string(kMaxPremises) +
                        " formulas, got " + std::to_string(q.premises.size()));
  }
  GroundedQuery g{ground(q.target, vocab), {}};
  g.premises.reserve(q.premises.size());
  for (const auto& p : q.premises) g.premises.push_back(ground(p, vocab));
  return g;
}

/// Support worlds satisfying every formula; iterates the sparse support
/// instead of the full 2^A space.
WorldSet models_over_support(std::span<const Formula> formulas,
                             const ModelDistribution& dist) {
  WorldSet out(dist.vocab().world_count());
  for (const auto& [index, p] : dist.support_entries()) {
    World w(dist.vocab(), index);
    bool all = true;
    for (const auto& f : formulas) {
      if (!evaluate(f, w)) {
        all = false;
        break;
      }
    }
    if (all) out.add(index);
  }
  return out;
}

Rational prob_of(const WorldSet& worlds, const ModelDistribution& dist) {
  Rational sum(0);
  for (const auto& [index, p] : dist.support_entries()) {
    if (worlds.contains(index)) sum += p;
  }
  return sum;
}

Rational prob_where(const WorldSet& worlds, const Formula& f, const ModelDistribution& dist) {
  Rational sum(0);
  for (const auto& [index, p] : dist.support_entries()) {
    if (worlds.contains(index) && evaluate(f, World(dist.vocab(), index))) sum += p;
  }
  return sum;
}

}  // namespace

MuRationalFunction conditional_symbolic(const Query& q, const ModelDistribution& dist) {
  GroundedQuery g = ground_query(q, dist.vocab());
  std::vector<Formula> with_target = g.premises;
  with_target.push_back(g.target);
  MuRationalFunction f;
  for (const auto& [index, p] : dist.support_entries()) {
    World w(dist.vocab(), index);
    f.num += likelihood_poly(with_target, w).scaled(p);
    f.den += likelihood_poly(g.premises, w).scaled(p);
  }
  return f;
}

QueryResult query(const Query& q, const ModelDistribution& dist, const MuSetting& setting) {
  GroundedQuery g = ground_query(q, dist.vocab());
  const bool full_support = model_assumption_holds(dist);

  switch (setting.kind()) {
    case MuSetting::Kind::kOne: {
      const Regime regime = full_support ? Regime::kTheorem1 : Regime::kTheorem2;
      WorldSet delta_p = models_over_support(g.premises, dist);
      Rational den = prob_of(delta_p, dist);
      if (den.is_zero()) return {std::nullopt, regime, std::move(delta_p)};
      Rational num = prob_where(delta_p, g.target, dist);
      return {num / den, regime, std::move(delta_p)};
    }

    case MuSetting::Kind::kLimitOne: {
      WorldSet mps = possible_approximate_models(g.premises, dist);
      if (mps.empty()) {
        // No support world satisfies even one premise; the conditional
        // degenerates to the marginal.
        const Regime regime = full_support ? Regime::kTheorem4 : Regime::kTheorem6;
        Rational value = prob_where(dist.support(), g.target, dist);
        return {std::move(value), regime, std::move(mps)};
      }
      const Regime regime = full_support ? Regime::kTheorem3 : Regime::kTheorem5;
      Rational den = prob_of(mps, dist);
      Rational num = prob_where(mps, g.target, dist);
      return {num / den, regime, std::move(mps)};
    }

    case MuSetting::Kind::kExact: {
      MuRationalFunction f = conditional_symbolic(q, dist);
      return {evaluate_at(f, setting.mu()), Regime::kDirectEval, dist.support()};
    }
  }
  throw std::logic_error("unhandled mu setting");
}

QueryResult marginal(const Formula& target, const ModelDistribution& dist,
                     const MuSetting& setting) {
  return query(Query{target, {}}, dist, setting);
}

QueryResult fast_data_query(const Query& q, const Dataset& ds) {
  GroundedQuery g = ground_query(q, ds.vocab());
  const bool full_support = ds.entries().size() == ds.vocab().world_count();
  const Regime regime = full_support ? Regime::kTheorem1 : Regime::kTheorem2;

  std::uint64_t num = 0;
  std::uint64_t den = 0;
  WorldSet delta_worlds(ds.vocab().world_count());
  for (const auto& e : ds.entries()) {
    World w = ds.world(e.world_index);
    bool sat = true;
    for (const auto& f : g.premises) {
      if (!evaluate(f, w)) {
        sat = false;
        break;
      }
    }
    if (!sat) continue;
    delta_worlds.add(e.world_index);
    den += e.count;
    if (evaluate(g.target, w)) num += e.count;
  }
  if (den == 0) return {std::nullopt, regime, std::move(delta_worlds)};
  return {Rational(BigInt(num), BigInt(den)), regime, std::move(delta_worlds)};
}

QueryResult fast_data_query_limit(const Query& q, const Dataset& ds) {
  GroundedQuery g = ground_query(q, ds.vocab());
  const bool full_support = ds.entries().size() == ds.vocab().world_count();

  std::vector<std::size_t> satisfied(ds.entries().size(), 0);
  std::size_t best = 0;
  for (std::size_t i = 0; i < ds.entries().size(); ++i) {
    World w = ds.world(ds.entries()[i].world_index);
    std::size_t c = 0;
    for (const auto& f : g.premises) {
      if (evaluate(f, w)) ++c;
    }
    satisfied[i] = c;
    best = std::max(best, c);
  }

  WorldSet argmax_worlds(ds.vocab().world_count());
  if (best == 0) {
    const Regime regime = full_support ? Regime::kTheorem4 : Regime::kTheorem6;
    std::uint64_t num = 0;
    for (const auto& e : ds.entries()) {
      if (evaluate(g.target, ds.world(e.world_index))) num += e.count;
    }
    return {Rational(BigInt(num), BigInt(ds.total_count())), regime,
            std::move(argmax_worlds)};
  }

  const Regime regime = full_support ? Regime::kTheorem3 : Regime::kTheorem5;
  std::uint64_t num = 0;
  std::uint64_t den = 0;
  for (std::size_t i = 0; i < ds.entries().size(); ++i) {
    if (satisfied[i] != best) continue;
    const auto& e = ds.entries()[i];
    argmax_worlds.add(e.world_index);
    den += e.count;
    if (evaluate(g.target, ds.world(e.world_index))) num += e.count;
  }
  return {Rational(BigInt(num), BigInt(den)), regime, std::move(argmax_worlds)};
}

BayesDecomposition bayes_decomposition(const Query& q, const ModelDistribution& dist) {
  GroundedQuery g = ground_query(q, dist.vocab());
  WorldSet delta_p = models_over_support(g.premises, dist);
  WorldSet alpha_p = models_over_support(std::span<const Formula>(&g.target, 1), dist);
  Rational p_delta = prob_of(delta_p, dist);
  Rational p_alpha = prob_of(alpha_p, dist);
  Rational p_joint = prob_of(delta_p & alpha_p, dist);

  BayesDecomposition out;
  out.prior = p_alpha;
  out.evidence = p_delta;
  if (!p_delta.is_zero()) out.posterior = p_joint / p_delta;
  if (!p_alpha.is_zero()) out.likelihood = p_joint / p_alpha;
  return out;
}

}  // namespace genlog
