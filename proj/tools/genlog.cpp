#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "genlog/consequence.hpp"
#include "genlog/dataset.hpp"
#include "genlog/engine.hpp"
#include "genlog/errors.hpp"
#include "genlog/parser.hpp"

namespace {

using namespace genlog;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUndefined = 3;
constexpr int kExitFails = 4;

/// Everything a command needs: the distribution (MLE of the dataset, or the
/// loaded prior) plus the dataset itself when one was given.
struct Inputs {
  std::optional<Dataset> dataset;
  std::optional<ModelDistribution> dist;

  const Vocabulary& vocab() const { return dist->vocab(); }
};

Inputs load_inputs(const std::string& dataset_path, const std::string& prior_path) {
  Inputs in;
  if (!dataset_path.empty()) {
    in.dataset = load_dataset(dataset_path);
    in.dist = mle_prior(*in.dataset);
  } else {
    in.dist = load_prior(prior_path);
  }
  return in;
}

MuSetting parse_mu(const std::string& text) {
  if (text == "1") return MuSetting::one();
  if (text == "limit") return MuSetting::limit_one();
  return MuSetting::exact(Rational::parse(text));
}

std::vector<std::string> split_on_semicolons(const std::string& joined) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= joined.size()) {
    std::size_t end = joined.find(';', start);
    if (end == std::string::npos) end = joined.size();
    std::string part = joined.substr(start, end - start);
    std::size_t b = part.find_first_not_of(" \t");
    if (b != std::string::npos) {
      std::size_t e = part.find_last_not_of(" \t");
      parts.push_back(part.substr(b, e - b + 1));
    }
    start = end + 1;
  }
  return parts;
}

std::vector<Formula> parse_premises(const std::string& joined, const Vocabulary& vocab) {
  std::vector<Formula> premises;
  for (const auto& text : split_on_semicolons(joined)) {
    premises.push_back(ground(parse(text, vocab), vocab));
  }
  return premises;
}

std::string decimal_string(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  std::string s = buf;
  // Bare integers become e.g. "1.0" so the rendering always reads as decimal.
  if (s.find_first_not_of("-0123456789") == std::string::npos) s += ".0";
  return s;
}

std::string world_string(const Vocabulary& vocab, std::uint32_t index) {
  const auto& atoms = vocab.ground_atoms();
  World w(vocab, index);
  std::string out = "(";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i > 0) out += ",";
    out += atoms[i] + "=" + (w.truth(i) ? "1" : "0");
  }
  out += ")";
  return out;
}

std::string worldset_string(const Vocabulary& vocab, const WorldSet& set) {
  constexpr std::size_t kShown = 8;
  auto indices = set.indices();
  std::string out = "{";
  for (std::size_t i = 0; i < indices.size() && i < kShown; ++i) {
    if (i > 0) out += ", ";
    out += world_string(vocab, indices[i]);
  }
  if (indices.size() > kShown) {
    out += ", ... (+" + std::to_string(indices.size() - kShown) + " more)";
  }
  out += "}";
  return out;
}

std::string member_string(const SubsetFamily::Member& member) {
  std::string out = "{";
  for (std::size_t i = 0; i < member.formulas.size(); ++i) {
    if (i > 0) out += ", ";
    out += print(member.formulas[i]);
  }
  out += "}";
  return out;
}

void print_result(const QueryResult& r, const Vocabulary& vocab, const std::string& format) {
  if (format == "json") {
    nlohmann::json doc;
    if (r.defined()) {
      doc["value"] = r.value->to_string();
      doc["decimal"] = r.value->to_double();
    } else {
      doc["value"] = nullptr;
      doc["decimal"] = nullptr;
    }
    doc["regime"] = to_string(r.regime);
    doc["witness"] = r.witness.indices();
    std::cout << doc.dump() << "\n";
    return;
  }
  if (format == "csv") {
    std::cout << "value,decimal,regime\n";
    if (r.defined()) {
      std::cout << r.value->to_string() << "," << decimal_string(r.value->to_double());
    } else {
      std::cout << ",";
    }
    std::cout << "," << to_string(r.regime) << "\n";
    return;
  }
  if (r.defined()) {
    std::cout << r.value->to_string() << " (" << decimal_string(r.value->to_double())
              << ") [" << to_string(r.regime) << "]\n";
  } else {
    std::cout << "undefined [" << to_string(r.regime) << "]\n";
  }
  std::cout << "witness: " << worldset_string(vocab, r.witness) << "\n";
}

int run_query(const Inputs& in, const std::string& given, const std::string& target_text,
              const std::string& mu_text, const std::string& format) {
  const Vocabulary& vocab = in.vocab();
  Query q{ground(parse(target_text, vocab), vocab), parse_premises(given, vocab)};
  QueryResult r = query(q, *in.dist, parse_mu(mu_text));
  print_result(r, vocab, format);
  return r.defined() ? kExitOk : kExitUndefined;
}

int run_sweep(const Inputs& in, const std::string& given, const std::string& target_text,
              int steps) {
  const Vocabulary& vocab = in.vocab();
  Query q{ground(parse(target_text, vocab), vocab), parse_premises(given, vocab)};
  MuRationalFunction f = conditional_symbolic(q, *in.dist);
  std::cout << "mu,probability\n";
  for (int i = 0; i < steps; ++i) {
    Rational mu(BigInt(i), BigInt(steps - 1));
    std::cout << mu.to_string() << ",";
    if (auto value = evaluate_at(f, mu)) std::cout << value->to_string();
    std::cout << "\n";
  }
  std::cout << "limit,";
  if (auto value = limit_at_one(f)) std::cout << value->to_string();
  std::cout << "\n";
  return kExitOk;
}

int run_consequence(const Inputs& in, const std::string& premises_text,
                    const std::string& conclusion_text, const std::string& relation,
                    bool explain) {
  const Vocabulary& vocab = in.vocab();
  std::vector<Formula> premises = parse_premises(premises_text, vocab);
  if (conclusion_text.empty() && !explain) {
    std::cerr << "error: nothing to do; provide --conclusion and/or --explain\n";
    return kExitUsage;
  }

  int status = kExitOk;
  if (!conclusion_text.empty()) {
    Formula conclusion = ground(parse(conclusion_text, vocab), vocab);
    ConsequenceReport report =
        relation == "possible"
            ? entails_possible(premises, conclusion, *in.dist)
            : entails_classical(premises, conclusion, vocab, vocab.atom_count());
    std::cout << relation << " consequence: " << (report.holds ? "holds" : "fails") << "\n";
    std::cout << "witness: " << worldset_string(vocab, report.witness) << "\n";
    status = report.holds ? kExitOk : kExitFails;
  }

  if (explain) {
    SubsetFamily mcs = maximal_consistent_subsets(premises, vocab, SubsetMode::kAuto,
                                                  vocab.atom_count());
    std::cout << "MCS (cardinality " << mcs.cardinality << "):\n";
    for (const auto& member : mcs.members) {
      std::cout << "  " << member_string(member) << "\n";
    }
    if (!model_assumption_holds(*in.dist)) {
      SubsetFamily mps = maximal_possible_subsets(premises, *in.dist);
      std::cout << "MPS (cardinality " << mps.cardinality << "):\n";
      for (const auto& member : mps.members) {
        std::cout << "  " << member_string(member) << "\n";
      }
    }
  }
  return status;
}

/// Small random formula for the self-test: atoms and connectives only.
Formula random_formula(std::mt19937& rng, const Vocabulary& vocab, int depth) {
  std::uniform_int_distribution<std::size_t> pick_atom(0, vocab.atom_count() - 1);
  std::uniform_int_distribution<int> pick_kind(0, 4);
  if (depth == 0 || pick_kind(rng) == 0) {
    return Formula::atom(vocab.ground_atoms()[pick_atom(rng)]);
  }
  switch (pick_kind(rng)) {
    case 1:
      return Formula::negation(random_formula(rng, vocab, depth - 1));
    case 2:
      return Formula::conjunction(random_formula(rng, vocab, depth - 1),
                                  random_formula(rng, vocab, depth - 1));
    case 3:
      return Formula::disjunction(random_formula(rng, vocab, depth - 1),
                                  random_formula(rng, vocab, depth - 1));
    default:
      return Formula::implication(random_formula(rng, vocab, depth - 1),
                                  random_formula(rng, vocab, depth - 1));
  }
}

/// Cross-checks the closed-form regimes against the symbolic conditional on
/// random queries over the loaded instance. Returns the number of failures.
int self_test(const Inputs& in, int rounds) {
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<int> pick_count(0, 3);
  int failures = 0;
  for (int i = 0; i < rounds; ++i) {
    Query q{random_formula(rng, in.vocab(), 2), {}};
    int premise_count = pick_count(rng);
    for (int j = 0; j < premise_count; ++j) {
      q.premises.push_back(random_formula(rng, in.vocab(), 2));
    }
    MuRationalFunction f = conditional_symbolic(q, *in.dist);

    QueryResult at_one = query(q, *in.dist, MuSetting::one());
    if (at_one.value != evaluate_at(f, Rational(1))) ++failures;

    QueryResult at_limit = query(q, *in.dist, MuSetting::limit_one());
    if (at_limit.value != limit_at_one(f)) ++failures;

    if (in.dataset) {
      if (fast_data_query(q, *in.dataset).value != at_one.value) ++failures;
      if (fast_data_query_limit(q, *in.dataset).value != at_limit.value) ++failures;
    }
  }
  return failures;
}

int run_check(const Inputs& in) {
  const Vocabulary& vocab = in.vocab();
  const std::uint64_t n = vocab.world_count();
  if (in.dataset) {
    std::cout << "K=" << in.dataset->total_count() << ", N=" << n << "\n";
    ModelCounts counts = model_counts(*in.dataset);
    for (std::uint64_t w = 0; w < n; ++w) {
      auto index = static_cast<std::uint32_t>(w);
      std::cout << "  " << world_string(vocab, index) << ": K_n=" << counts.count_of(index)
                << ", p=" << in.dist->prob(index).to_string() << "\n";
    }
  } else {
    std::cout << "N=" << n << "\n";
    for (std::uint64_t w = 0; w < n; ++w) {
      auto index = static_cast<std::uint32_t>(w);
      std::cout << "  " << world_string(vocab, index)
                << ": p=" << in.dist->prob(index).to_string() << "\n";
    }
  }
  if (model_assumption_holds(*in.dist)) {
    std::cout << "model assumption: holds\n";
  } else {
    std::uint64_t zeros = n - in.dist->support().count();
    std::cout << "model assumption: fails (" << zeros << " zero-probability world"
              << (zeros == 1 ? "" : "s") << ")\n";
  }

  constexpr int kRounds = 40;
  int failures = self_test(in, kRounds);
  if (failures > 0) {
    std::cerr << "self-test: " << failures << " disagreement(s) with the symbolic oracle\n";
    return kExitUsage;
  }
  std::cout << "self-test: " << kRounds << " random queries agree with the symbolic oracle\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact conditional probabilities over distributions on possible worlds"};
  app.require_subcommand(1);

  std::string dataset_path;
  std::string prior_path;
  std::string given_text;
  std::string target_text;
  std::string premises_text;
  std::string conclusion_text;
  std::string mu_text = "1";
  std::string format = "human";
  std::string relation = "classical";
  int steps = 11;
  bool explain = false;

  auto add_source = [&](CLI::App* cmd) {
    auto* d = cmd->add_option("-d,--dataset", dataset_path, "dataset file (.json or .csv)");
    auto* p = cmd->add_option("--prior", prior_path, "explicit prior file (.json)");
    d->excludes(p);
    p->excludes(d);
  };

  CLI::App* cmd_query = app.add_subcommand("query", "answer p(target | given)");
  add_source(cmd_query);
  cmd_query->add_option("--given", given_text, "premise formulas separated by ';'");
  cmd_query->add_option("--target", target_text, "target formula")->required();
  cmd_query->add_option("--mu", mu_text, "1, limit, or an exact value like 9/10 or 0.9");
  cmd_query->add_option("--format", format, "human, json, or csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));

  CLI::App* cmd_sweep = app.add_subcommand("sweep", "emit p(target | given) across mu");
  add_source(cmd_sweep);
  cmd_sweep->add_option("--given", given_text, "premise formulas separated by ';'");
  cmd_sweep->add_option("--target", target_text, "target formula")->required();
  cmd_sweep->add_option("--steps", steps, "number of sample points (default 11)")
      ->check(CLI::Range(2, 100000));

  CLI::App* cmd_consequence =
      app.add_subcommand("consequence", "check an entailment, list maximal subsets");
  add_source(cmd_consequence);
  cmd_consequence->add_option("--premises", premises_text, "premises separated by ';'");
  cmd_consequence->add_option("--conclusion", conclusion_text, "conclusion formula");
  cmd_consequence->add_option("--relation", relation, "classical or possible")
      ->check(CLI::IsMember({"classical", "possible"}));
  cmd_consequence->add_flag("--explain", explain, "print the maximal subset families");

  CLI::App* cmd_check = app.add_subcommand("check", "describe the loaded instance");
  add_source(cmd_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (dataset_path.empty() && prior_path.empty()) {
    std::cerr << "error: provide a data source with --dataset or --prior\n";
    return kExitUsage;
  }

  try {
    Inputs in = load_inputs(dataset_path, prior_path);
    if (cmd_query->parsed()) {
      return run_query(in, given_text, target_text, mu_text, format);
    }
    if (cmd_sweep->parsed()) {
      return run_sweep(in, given_text, target_text, steps);
    }
    if (cmd_consequence->parsed()) {
      return run_consequence(in, premises_text, conclusion_text, relation, explain);
    }
    return run_check(in);
  } catch (const ParseError& e) {
    std::cerr << "syntax error at position " << e.position() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const LoadError& e) {
    std::cerr << "load error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
