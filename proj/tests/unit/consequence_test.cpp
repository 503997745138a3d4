#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "genlog/consequence.hpp"
#include "genlog/dataset.hpp"
#include "genlog/errors.hpp"
#include "genlog/formula.hpp"
#include "genlog/parser.hpp"
#include "genlog/vocabulary.hpp"

#include "../generators.hpp"
#include "../oracle.hpp"

using namespace genlog;

namespace {

Vocabulary rain_wet() { return Vocabulary({"rain", "wet"}); }

ModelDistribution full_support_prior() {
  auto vocab = std::make_shared<const Vocabulary>(rain_wet());
  return ModelDistribution(vocab, {{0, Rational(4, 10)},
                                   {1, Rational(2, 10)},
                                   {2, Rational(1, 10)},
                                   {3, Rational(3, 10)}});
}

/// Worlds (0,0) and (0,1) possible, the rain worlds impossible.
ModelDistribution partial_prior() {
  auto vocab = std::make_shared<const Vocabulary>(rain_wet());
  return ModelDistribution(vocab, {{0, Rational(9, 10)}, {1, Rational(1, 10)}});
}

std::vector<Formula> delta4(const Vocabulary& vocab) {
  return {parse("rain", vocab), parse("wet", vocab), parse("rain -> wet", vocab),
          parse("~wet", vocab)};
}

std::vector<std::string> member_key(const SubsetFamily::Member& member) {
  std::vector<std::string> key;
  for (const auto& f : member.formulas) key.push_back(print(f));
  std::sort(key.begin(), key.end());
  return key;
}

/// Family as content-key -> model indices, for order-insensitive comparison.
std::map<std::vector<std::string>, std::vector<std::uint32_t>> family_map(
    const SubsetFamily& family) {
  std::map<std::vector<std::string>, std::vector<std::uint32_t>> out;
  for (const auto& member : family.members) {
    out[member_key(member)] = member.models.indices();
  }
  return out;
}

std::set<std::vector<std::string>> family_keys(const SubsetFamily& family) {
  std::set<std::vector<std::string>> out;
  for (const auto& member : family.members) out.insert(member_key(member));
  return out;
}

}  // namespace

TEST_CASE("classical consequence: modus ponens and friends") {
  Vocabulary vocab = rain_wet();
  std::vector<Formula> mp = {parse("rain", vocab), parse("rain -> wet", vocab)};
  ConsequenceReport report = entails_classical(mp, parse("wet", vocab), vocab);
  CHECK(report.holds);
  CHECK(report.relation == ConsequenceReport::Relation::kClassical);
  CHECK(report.witness.indices() == std::vector<std::uint32_t>{3});

  std::vector<Formula> weak = {parse("rain -> wet", vocab)};
  CHECK_FALSE(entails_classical(weak, parse("wet", vocab), vocab).holds);

  // No premises: only tautologies follow.
  CHECK(entails_classical({}, parse("rain | ~rain", vocab), vocab).holds);
  CHECK_FALSE(entails_classical({}, parse("rain", vocab), vocab).holds);

  // Contradictory premises entail everything, witness empty.
  std::vector<Formula> boom = {parse("rain", vocab), parse("~rain", vocab)};
  ConsequenceReport ex_falso = entails_classical(boom, parse("wet", vocab), vocab);
  CHECK(ex_falso.holds);
  CHECK(ex_falso.witness.empty());

  CHECK_THROWS_AS(entails_classical({}, parse("rain", vocab), vocab, 1), ResourceError);
}

TEST_CASE("possible consequence is the classical one restricted to the support") {
  ModelDistribution dist = partial_prior();
  const Vocabulary& vocab = dist.vocab();
  std::vector<Formula> not_wet = {parse("~wet", vocab)};
  Formula not_rain = parse("~rain", vocab);

  // With the rain worlds impossible, ~wet settles ~rain...
  ConsequenceReport possible = entails_possible(not_wet, not_rain, dist);
  CHECK(possible.holds);
  CHECK(possible.relation == ConsequenceReport::Relation::kPossible);
  CHECK(possible.witness.indices() == std::vector<std::uint32_t>{0});
  // ...but not classically: the world (rain=1, wet=0) refutes it.
  CHECK_FALSE(entails_classical(not_wet, not_rain, vocab).holds);
}

TEST_CASE("classical consequence implies possible consequence") {
  std::mt19937 rng(53);
  int held = 0;
  for (int i = 0; i < 300; ++i) {
    Dataset ds = testgen::random_dataset(rng, 3, 6);
    ModelDistribution dist = mle_prior(ds);
    Query q = testgen::random_query(rng, ds.vocab(), 3, 2);
    bool classical = entails_classical(q.premises, q.target, ds.vocab()).holds;
    bool possible = entails_possible(q.premises, q.target, dist).holds;
    if (classical) {
      ++held;
      CHECK(possible);
    }
  }
  CHECK(held > 0);  // the sample exercised the implication
}

TEST_CASE("maximal consistent subsets: golden family") {
  Vocabulary vocab = rain_wet();
  std::vector<Formula> delta = delta4(vocab);
  SubsetFamily mcs = maximal_consistent_subsets(delta, vocab);
  CHECK(mcs.cardinality == 3);
  REQUIRE(mcs.members.size() == 1);
  CHECK(member_key(mcs.members[0]) ==
        std::vector<std::string>{"rain", "rain -> wet", "wet"});
  CHECK(mcs.members[0].models.indices() == std::vector<std::uint32_t>{3});

  CHECK(approximate_models(delta, vocab).indices() == std::vector<std::uint32_t>{3});
}

TEST_CASE("maximal possible subsets: golden family under a partial prior") {
  ModelDistribution dist = partial_prior();
  std::vector<Formula> delta = delta4(dist.vocab());
  SubsetFamily mps = maximal_possible_subsets(delta, dist);
  CHECK(mps.cardinality == 2);
  REQUIRE(mps.members.size() == 2);
  auto map = family_map(mps);
  REQUIRE(map.count({"rain -> wet", "wet"}) == 1);
  REQUIRE(map.count({"rain -> wet", "~wet"}) == 1);
  CHECK(map[{"rain -> wet", "wet"}] == std::vector<std::uint32_t>{1});
  CHECK(map[{"rain -> wet", "~wet"}] == std::vector<std::uint32_t>{0});

  CHECK(possible_approximate_models(delta, dist).indices() ==
        std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("under a full-support prior MPS coincides with MCS") {
  ModelDistribution dist = full_support_prior();
  std::vector<Formula> delta = delta4(dist.vocab());
  CHECK(family_map(maximal_possible_subsets(delta, dist)) ==
        family_map(maximal_consistent_subsets(delta, dist.vocab())));
  CHECK(possible_approximate_models(delta, dist).indices() ==
        approximate_models(delta, dist.vocab()).indices());

  std::mt19937 rng(59);
  for (int i = 0; i < 80; ++i) {
    Dataset ds = testgen::random_dataset(rng, 3, 8, /*full_support=*/true);
    ModelDistribution full = mle_prior(ds);
    Query q = testgen::random_query(rng, ds.vocab(), 4, 2);
    CHECK(family_map(maximal_possible_subsets(q.premises, full)) ==
          family_map(maximal_consistent_subsets(q.premises, ds.vocab())));
  }
}

TEST_CASE("duplicate premises count with multiplicity") {
  ModelDistribution dist = full_support_prior();
  const Vocabulary& vocab = dist.vocab();
  std::vector<Formula> twice = {parse("rain", vocab), parse("rain", vocab)};
  SubsetFamily mps = maximal_possible_subsets(twice, dist);
  CHECK(mps.cardinality == 2);
  REQUIRE(mps.members.size() == 1);
  CHECK(member_key(mps.members[0]) == std::vector<std::string>{"rain", "rain"});
  CHECK(mps.members[0].models.indices() == std::vector<std::uint32_t>{2, 3});

  // The approximate model set is insensitive to the duplication.
  std::vector<Formula> once = {parse("rain", vocab)};
  CHECK(possible_approximate_models(twice, dist).indices() ==
        possible_approximate_models(once, dist).indices());
}

TEST_CASE("no premise satisfiable: the family degenerates to the empty subset") {
  auto vocab = std::make_shared<const Vocabulary>(rain_wet());
  ModelDistribution point(vocab, {{0, Rational(1)}});  // only (0,0) possible
  std::vector<Formula> delta = {parse("rain", *vocab), parse("wet", *vocab)};

  SubsetFamily mps = maximal_possible_subsets(delta, point);
  CHECK(mps.cardinality == 0);
  REQUIRE(mps.members.size() == 1);
  CHECK(mps.members[0].formulas.empty());
  CHECK(mps.members[0].models.indices() == std::vector<std::uint32_t>{0});
  // ...but the union of approximate models is empty by convention.
  CHECK(possible_approximate_models(delta, point).empty());

  // Same story with no premises at all.
  SubsetFamily empty = maximal_possible_subsets({}, point);
  CHECK(empty.cardinality == 0);
  REQUIRE(empty.members.size() == 1);
  CHECK(empty.members[0].formulas.empty());
  CHECK(possible_approximate_models({}, point).empty());
}

TEST_CASE("explicit enumeration and the argmax shortcut agree") {
  std::mt19937 rng(61);
  for (int i = 0; i < 150; ++i) {
    Dataset ds = testgen::random_dataset(rng, 3, 6);
    ModelDistribution dist = mle_prior(ds);
    Query q = testgen::random_query(rng, ds.vocab(), 6, 2);
    SubsetFamily explicit_family =
        maximal_possible_subsets(q.premises, dist, SubsetMode::kExplicit);
    SubsetFamily argmax_family =
        maximal_possible_subsets(q.premises, dist, SubsetMode::kArgmax);
    CHECK(explicit_family.cardinality == argmax_family.cardinality);
    CHECK(family_map(explicit_family) == family_map(argmax_family));

    SubsetFamily explicit_mcs =
        maximal_consistent_subsets(q.premises, ds.vocab(), SubsetMode::kExplicit);
    SubsetFamily argmax_mcs =
        maximal_consistent_subsets(q.premises, ds.vocab(), SubsetMode::kArgmax);
    CHECK(family_map(explicit_mcs) == family_map(argmax_mcs));
  }
}

TEST_CASE("subset families match the definition-level oracle") {
  std::mt19937 rng(67);
  for (int i = 0; i < 150; ++i) {
    Dataset ds = testgen::random_dataset(rng, 3, 6);
    ModelDistribution dist = mle_prior(ds);
    Query q = testgen::random_query(rng, ds.vocab(), 5, 2);

    SubsetFamily mps = maximal_possible_subsets(q.premises, dist);
    CHECK(family_keys(mps) == oracle::ref_mps_keys(q.premises, dist));
    CHECK(possible_approximate_models(q.premises, dist).indices() ==
          oracle::ref_possible_approximate_models(q.premises, dist).indices());

    // Cardinality is the best satisfied count over the support, and every
    // member has it; no support world beats it.
    for (const auto& member : mps.members) {
      CHECK(member.formulas.size() == mps.cardinality);
      CHECK_FALSE(member.models.empty());
      CHECK(member.models.subset_of(dist.support()));
    }
    for (std::uint32_t index : dist.support().indices()) {
      World w(dist.vocab(), index);
      std::size_t c = 0;
      for (const auto& f : q.premises) {
        if (evaluate(f, w)) ++c;
      }
      CHECK(c <= mps.cardinality);
    }
  }
}

TEST_CASE("thirteen premises: explicit mode refuses, auto switches over") {
  ModelDistribution dist = full_support_prior();
  std::vector<Formula> many(13, parse("rain", dist.vocab()));
  CHECK_THROWS_AS(maximal_possible_subsets(many, dist, SubsetMode::kExplicit),
                  ResourceError);
  SubsetFamily family = maximal_possible_subsets(many, dist);  // kAuto -> argmax
  CHECK(family.cardinality == 13);
  REQUIRE(family.members.size() == 1);
  CHECK(family.members[0].models.indices() == std::vector<std::uint32_t>{2, 3});
}
