#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "genlog/dataset.hpp"
#include "genlog/errors.hpp"
#include "genlog/rational.hpp"
#include "genlog/vocabulary.hpp"

#include "../generators.hpp"

using namespace genlog;

namespace {

const char* kRainWet = R"({
  "atoms": ["rain", "wet"],
  "data": [
    {"world": {"rain": 0, "wet": 0}, "count": 4},
    {"world": {"rain": 0, "wet": 1}, "count": 2},
    {"world": {"rain": 1, "wet": 0}, "count": 1},
    {"world": {"rain": 1, "wet": 1}, "count": 3}
  ]
})";

bool load_fails_mentioning(const std::string& text, const std::string& needle) {
  try {
    load_dataset_json(text);
  } catch (const LoadError& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("json dataset golden load") {
  Dataset ds = load_dataset_json(kRainWet);
  CHECK(ds.vocab().atom_count() == 2);
  CHECK(ds.vocab().ground_atoms() == std::vector<std::string>{"rain", "wet"});
  CHECK(ds.total_count() == 10);
  REQUIRE(ds.entries().size() == 4);
  // Sorted by world index; first declared atom is the high bit.
  CHECK(ds.entries()[0].world_index == 0);
  CHECK(ds.entries()[0].count == 4);
  CHECK(ds.entries()[1].world_index == 1);
  CHECK(ds.entries()[1].count == 2);
  CHECK(ds.entries()[2].world_index == 2);
  CHECK(ds.entries()[2].count == 1);
  CHECK(ds.entries()[3].world_index == 3);
  CHECK(ds.entries()[3].count == 3);
}

TEST_CASE("boolean world values and sparse data load too") {
  Dataset ds = load_dataset_json(R"({
    "atoms": ["rain", "wet"],
    "data": [
      {"world": {"rain": true, "wet": false}, "count": 7}
    ]
  })");
  CHECK(ds.total_count() == 7);
  REQUIRE(ds.entries().size() == 1);
  CHECK(ds.entries()[0].world_index == 2);
}

TEST_CASE("csv dataset loads to the same dataset") {
  std::istringstream csv(
      "rain,wet,count\n"
      "0,0,4\n"
      "0,1,2\n"
      "1,0,1\n"
      "1,1,3\n");
  Dataset from_csv = load_dataset_csv(csv);
  Dataset from_json = load_dataset_json(kRainWet);
  CHECK(from_csv.vocab() == from_json.vocab());
  CHECK(from_csv.total_count() == from_json.total_count());
  REQUIRE(from_csv.entries().size() == from_json.entries().size());
  for (std::size_t i = 0; i < from_csv.entries().size(); ++i) {
    CHECK(from_csv.entries()[i].world_index == from_json.entries()[i].world_index);
    CHECK(from_csv.entries()[i].count == from_json.entries()[i].count);
  }
}

TEST_CASE("csv tolerates blank lines, spaces, and CRLF") {
  std::istringstream csv(
      "rain, wet, count\r\n"
      "\r\n"
      " 1 , 1 , 3 \r\n");
  Dataset ds = load_dataset_csv(csv);
  CHECK(ds.total_count() == 3);
  CHECK(ds.entries()[0].world_index == 3);
}

TEST_CASE("csv load errors name the line") {
  auto fails_with = [](const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    try {
      load_dataset_csv(in);
    } catch (const LoadError& e) {
      return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
  };
  CHECK(fails_with("rain,wet\n0,1\n", "followed by 'count'"));
  CHECK(fails_with("rain,wet,count\n0,1\n", "line 2"));
  CHECK(fails_with("rain,wet,count\n0,2,1\n", "must be 0 or 1"));
  CHECK(fails_with("rain,wet,count\n0,1,0\n", "count must be a positive integer"));
  CHECK(fails_with("rain,wet,count\n0,1,x\n", "count must be a positive integer"));
  CHECK(fails_with("rain,wet,count\n0,1,2\n0,1,3\n", "duplicate world row"));
  CHECK(fails_with("", "empty CSV document"));
}

TEST_CASE("predicate vocabularies ground into indexed atoms") {
  Dataset ds = load_dataset_json(R"json({
    "atoms": [],
    "predicates": [{"name": "blames", "arity": 2}],
    "constants": ["a", "b"],
    "data": [
      {"world": {"blames(a,a)": 1, "blames(a,b)": 0, "blames(b,a)": 0, "blames(b,b)": 1},
       "count": 2}
    ]
  })json");
  CHECK(ds.vocab().atom_count() == 4);
  CHECK(ds.vocab().world_count() == 16);
  // blames(a,a) is the high bit, blames(b,b) the low bit: 1001b = 9.
  CHECK(ds.entries()[0].world_index == 9);
  CHECK(ds.vocab().find_predicate("blames") != nullptr);
  CHECK(ds.vocab().is_constant("a"));
}

TEST_CASE("json dataset errors name the offending row") {
  CHECK(load_fails_mentioning("{", "not valid JSON"));
  CHECK(load_fails_mentioning("[]", "top level must be a JSON object"));
  CHECK(load_fails_mentioning(R"({"data": []})", "'atoms'"));
  CHECK(load_fails_mentioning(R"({"atoms": ["rain"]})", "'data'"));
  CHECK(load_fails_mentioning(
      R"({"atoms": ["rain"], "data": [{"world": {}, "count": 1}]})",
      "data row 1: world assignment missing atom 'rain'"));
  CHECK(load_fails_mentioning(
      R"({"atoms": ["rain"], "data": [{"world": {"rain": 1, "snow": 0}, "count": 1}]})",
      "data row 1: unknown atom 'snow'"));
  CHECK(load_fails_mentioning(
      R"({"atoms": ["rain"], "data": [{"world": {"rain": 2}, "count": 1}]})",
      "must be 0 or 1"));
  CHECK(load_fails_mentioning(
      R"({"atoms": ["rain"], "data": [{"world": {"rain": 1}, "count": 0}]})",
      "data row 1: count must be a positive integer"));
  CHECK(load_fails_mentioning(
      R"({"atoms": ["rain"], "data": [{"world": {"rain": 1}, "count": 1.5}]})",
      "count must be a positive integer"));
  CHECK(load_fails_mentioning(
      R"({"atoms": ["rain"], "data": [
            {"world": {"rain": 1}, "count": 1},
            {"world": {"rain": 1}, "count": 2}]})",
      "data row 2: duplicate world row"));
  CHECK(load_fails_mentioning(R"({"atoms": ["rain"], "data": []})",
                              "dataset contains no data"));
  CHECK(load_fails_mentioning(R"({"atoms": ["rain", "rain"], "data": []})",
                              "rain"));
}

TEST_CASE("dataset constructor validation") {
  Vocabulary vocab({"rain", "wet"});
  CHECK_THROWS_AS(Dataset(vocab, {{4, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Dataset(vocab, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Dataset(vocab, {{1, 2}, {1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Dataset(vocab, {}), std::invalid_argument);
  // Entries arrive unsorted and come out sorted.
  Dataset ds(vocab, {{3, 1}, {0, 2}});
  CHECK(ds.entries()[0].world_index == 0);
  CHECK(ds.entries()[1].world_index == 3);
}

TEST_CASE("model counts expose K_n per world") {
  Dataset ds = load_dataset_json(kRainWet);
  ModelCounts counts = model_counts(ds);
  CHECK(counts.total() == 10);
  CHECK(counts.world_count() == 4);
  CHECK(counts.count_of(0) == 4);
  CHECK(counts.count_of(1) == 2);
  CHECK(counts.count_of(2) == 1);
  CHECK(counts.count_of(3) == 3);

  Dataset sparse(Vocabulary({"rain", "wet"}), {{3, 5}});
  CHECK(model_counts(sparse).count_of(0) == 0);
  CHECK(model_counts(sparse).count_of(3) == 5);
}

TEST_CASE("maximum likelihood prior: p(m_n) = K_n / K") {
  Dataset ds = load_dataset_json(kRainWet);
  ModelDistribution prior = mle_prior(ds);
  CHECK(prior.prob(0) == Rational(4, 10));
  CHECK(prior.prob(1) == Rational(2, 10));
  CHECK(prior.prob(2) == Rational(1, 10));
  CHECK(prior.prob(3) == Rational(3, 10));
  CHECK(model_assumption_holds(prior));

  Rational sum(0);
  for (const auto& [index, p] : prior.support_entries()) sum += p;
  CHECK(sum == Rational(1));
}

TEST_CASE("prior is invariant under scaling all counts") {
  std::mt19937 rng(23);
  for (int i = 0; i < 50; ++i) {
    Dataset ds = testgen::random_dataset(rng, 3, 6);
    std::vector<Dataset::Entry> scaled;
    for (const auto& e : ds.entries()) scaled.push_back({e.world_index, e.count * 7});
    Dataset ds7(Vocabulary(ds.vocab()), std::move(scaled));
    ModelDistribution a = mle_prior(ds);
    ModelDistribution b = mle_prior(ds7);
    for (std::uint32_t w = 0; w < ds.vocab().world_count(); ++w) {
      CHECK(a.prob(w) == b.prob(w));
    }
  }
}

TEST_CASE("support tracks exactly the observed worlds") {
  Dataset sparse(Vocabulary({"rain", "wet"}), {{0, 1}, {1, 9}});
  ModelDistribution prior = mle_prior(sparse);
  CHECK(prior.support().count() == 2);
  CHECK(prior.support().contains(0));
  CHECK(prior.support().contains(1));
  CHECK_FALSE(prior.support().contains(2));
  CHECK(prior.prob(2) == Rational(0));
  CHECK_FALSE(model_assumption_holds(prior));
}

TEST_CASE("prior document golden load") {
  ModelDistribution dist = load_prior_json(R"({
    "atoms": ["rain", "wet"],
    "prior": [
      {"world": {"rain": 0, "wet": 0}, "p": "4/10"},
      {"world": {"rain": 0, "wet": 1}, "p": "2/10"},
      {"world": {"rain": 1, "wet": 0}, "p": "1/10"},
      {"world": {"rain": 1, "wet": 1}, "p": "3/10"}
    ]
  })");
  CHECK(dist.prob(0) == Rational(2, 5));
  CHECK(dist.prob(1) == Rational(1, 5));
  CHECK(dist.prob(2) == Rational(1, 10));
  CHECK(dist.prob(3) == Rational(3, 10));
  CHECK(model_assumption_holds(dist));
}

TEST_CASE("prior accepts decimals as strings and drops zero rows from support") {
  ModelDistribution dist = load_prior_json(R"({
    "atoms": ["rain", "wet"],
    "prior": [
      {"world": {"rain": 0, "wet": 0}, "p": "0.9"},
      {"world": {"rain": 0, "wet": 1}, "p": "1/10"},
      {"world": {"rain": 1, "wet": 0}, "p": "0"},
      {"world": {"rain": 1, "wet": 1}, "p": "0/7"}
    ]
  })");
  CHECK(dist.prob(0) == Rational(9, 10));
  CHECK(dist.prob(1) == Rational(1, 10));
  CHECK(dist.support().count() == 2);
  CHECK_FALSE(model_assumption_holds(dist));
}

TEST_CASE("prior load errors") {
  auto fails_with = [](const std::string& text, const std::string& needle) {
    try {
      load_prior_json(text);
    } catch (const LoadError& e) {
      return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
  };
  CHECK(fails_with(R"({"atoms": ["rain"]})", "'prior'"));
  CHECK(fails_with(R"({"atoms": ["rain"], "prior": [
          {"world": {"rain": 0}, "p": "1/2"},
          {"world": {"rain": 1}, "p": "1/4"}]})",
                   "sum to 3/4, expected 1/1"));
  // Binary floats cannot hold most decimal probabilities exactly.
  CHECK(fails_with(R"({"atoms": ["rain"], "prior": [
          {"world": {"rain": 0}, "p": 0.5},
          {"world": {"rain": 1}, "p": 0.5}]})",
                   "must be a string"));
  CHECK(fails_with(R"({"atoms": ["rain"], "prior": [
          {"world": {"rain": 0}, "p": "3/2"},
          {"world": {"rain": 1}, "p": "-1/2"}]})",
                   "prior row 2: probability is negative"));
  CHECK(fails_with(R"({"atoms": ["rain"], "prior": [
          {"world": {"rain": 0}, "p": "1/2"},
          {"world": {"rain": 0}, "p": "1/2"}]})",
                   "prior row 2: duplicate world row"));
  CHECK(fails_with(R"({"atoms": ["rain"], "prior": [
          {"world": {"rain": 0}, "p": "abc"},
          {"world": {"rain": 1}, "p": "1"}]})",
                   "cannot parse probability 'abc'"));
}

TEST_CASE("distribution constructor validation") {
  auto vocab = std::make_shared<const Vocabulary>(std::vector<std::string>{"rain"});
  CHECK_THROWS_AS(ModelDistribution(vocab, {{0, Rational(1, 2)}}), std::invalid_argument);
  CHECK_THROWS_AS(ModelDistribution(vocab, {{0, Rational(0)}, {1, Rational(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      ModelDistribution(vocab, {{0, Rational(1, 2)}, {0, Rational(1, 2)}}),
      std::invalid_argument);
  CHECK_THROWS_AS(ModelDistribution(vocab, {{5, Rational(1)}}), std::invalid_argument);
  ModelDistribution ok(vocab, {{1, Rational(1, 3)}, {0, Rational(2, 3)}});
  CHECK(ok.support_entries()[0].first == 0);  // sorted
}

TEST_CASE("path loader dispatches on extension") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "genlog_dataset_test";
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "d.csv");
    out << "rain,count\n1,2\n";
  }
  Dataset ds = load_dataset(dir / "d.csv");
  CHECK(ds.total_count() == 2);
  CHECK_THROWS_AS(load_dataset(dir / "missing.json"), LoadError);
  {
    std::ofstream out(dir / "d.txt");
    out << "whatever";
  }
  CHECK_THROWS_AS(load_dataset(dir / "d.txt"), LoadError);
}
