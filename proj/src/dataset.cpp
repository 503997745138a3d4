#include "genlog/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "genlog/errors.hpp"

namespace genlog {

namespace {

using nlohmann::json;

std::shared_ptr<const Vocabulary> make_vocab(std::vector<std::string> atoms,
                                             std::vector<Vocabulary::Predicate> predicates,
                                             std::vector<std::string> constants) {
  try {
    return std::make_shared<const Vocabulary>(std::move(atoms), std::move(predicates),
                                              std::move(constants));
  } catch (const std::invalid_argument& e) {
    throw LoadError(e.what());
  }
}

}  // namespace

Dataset::Dataset(Vocabulary vocab, std::vector<Entry> entries)
    : vocab_(std::make_shared<const Vocabulary>(std::move(vocab))),
      entries_(std::move(entries)),
      total_(0) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.world_index < b.world_index; });
  const std::uint64_t n = vocab_->world_count();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry& e = entries_[i];
    if (e.world_index >= n) {
      throw std::invalid_argument("world index " + std::to_string(e.world_index) +
                                  " out of range [0, " + std::to_string(n) + ")");
    }
    if (e.count == 0) throw std::invalid_argument("datum count must be at least 1");
    if (i > 0 && entries_[i - 1].world_index == e.world_index) {
      throw std::invalid_argument("duplicate entry for world " +
                                  std::to_string(e.world_index));
    }
    total_ += e.count;
  }
  if (total_ == 0) throw std::invalid_argument("dataset contains no data");
}

std::uint64_t ModelCounts::count_of(std::uint32_t world_index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), world_index,
                             [](const Dataset::Entry& e, std::uint32_t idx) {
                               return e.world_index < idx;
                             });
  if (it == entries_.end() || it->world_index != world_index) return 0;
  return it->count;
}

ModelDistribution::ModelDistribution(std::shared_ptr<const Vocabulary> vocab,
                                     std::vector<Entry> probs)
    : vocab_(std::move(vocab)), probs_(std::move(probs)) {
  if (!vocab_) throw std::invalid_argument("distribution requires a vocabulary");
  std::sort(probs_.begin(), probs_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  const std::uint64_t n = vocab_->world_count();
  support_ = WorldSet(n);
  Rational sum(0);
  for (const auto& [index, p] : probs_) {
    if (index >= n) {
      throw std::invalid_argument("world index " + std::to_string(index) +
                                  " out of range [0, " + std::to_string(n) + ")");
    }
    if (p.is_zero() || p.is_negative()) {
      throw std::invalid_argument("support probabilities must be positive");
    }
    if (support_.contains(index)) {
      throw std::invalid_argument("duplicate probability for world " + std::to_string(index));
    }
    support_.add(index);
    sum += p;
  }
  if (sum != Rational(1)) {
    throw std::invalid_argument("probabilities sum to " + sum.to_string() +
                                ", expected 1/1");
  }
}

Rational ModelDistribution::prob(std::uint32_t world_index) const {
  auto it = std::lower_bound(probs_.begin(), probs_.end(), world_index,
                             [](const Entry& e, std::uint32_t idx) { return e.first < idx; });
  if (it == probs_.end() || it->first != world_index) return Rational(0);
  return it->second;
}

ModelCounts model_counts(const Dataset& ds) {
  return ModelCounts(std::vector<Dataset::Entry>(ds.entries().begin(), ds.entries().end()),
                     ds.total_count(), ds.vocab().world_count());
}

ModelDistribution mle_prior(const Dataset& ds) {
  std::vector<ModelDistribution::Entry> probs;
  probs.reserve(ds.entries().size());
  const BigInt total = ds.total_count();
  for (const auto& e : ds.entries()) {
    probs.emplace_back(e.world_index, Rational(BigInt(e.count), total));
  }
  return ModelDistribution(ds.vocab_ptr(), std::move(probs));
}

bool model_assumption_holds(const ModelDistribution& dist) {
  return dist.support().is_universe();
}

namespace {

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw LoadError("document is not valid JSON");
  return doc;
}

std::vector<std::string> read_atoms(const json& doc) {
  if (!doc.contains("atoms")) throw LoadError("document lacks an 'atoms' array");
  const json& atoms = doc["atoms"];
  if (!atoms.is_array()) throw LoadError("'atoms' must be an array of names");
  std::vector<std::string> out;
  for (const auto& a : atoms) {
    if (!a.is_string()) throw LoadError("'atoms' must be an array of names");
    out.push_back(a.get<std::string>());
  }
  return out;
}

std::vector<Vocabulary::Predicate> read_predicates(const json& doc) {
  std::vector<Vocabulary::Predicate> out;
  if (!doc.contains("predicates")) return out;
  const json& preds = doc["predicates"];
  if (!preds.is_array()) throw LoadError("'predicates' must be an array");
  for (const auto& p : preds) {
    if (!p.is_object() || !p.contains("name") || !p.contains("arity") ||
        !p["name"].is_string() || !p["arity"].is_number_integer()) {
      throw LoadError("each predicate needs a 'name' string and integer 'arity'");
    }
    long long arity = p["arity"].get<long long>();
    if (arity < 1) throw LoadError("predicate '" + p["name"].get<std::string>() +
                                   "' has arity < 1");
    out.push_back({p["name"].get<std::string>(), static_cast<std::size_t>(arity)});
  }
  return out;
}

std::vector<std::string> read_constants(const json& doc) {
  std::vector<std::string> out;
  if (!doc.contains("constants")) return out;
  const json& cs = doc["constants"];
  if (!cs.is_array()) throw LoadError("'constants' must be an array of names");
  for (const auto& c : cs) {
    if (!c.is_string()) throw LoadError("'constants' must be an array of names");
    out.push_back(c.get<std::string>());
  }
  return out;
}

/// Decodes {"rain": 0, "wet": 1, ...} into a world index. `where` names the
/// offending row in error messages.
std::uint32_t read_world(const json& world, const Vocabulary& vocab, const std::string& where) {
  if (!world.is_object()) throw LoadError(where + ": 'world' must be an object");
  const auto& atoms = vocab.ground_atoms();
  for (const auto& [key, value] : world.items()) {
    if (!vocab.atom_index(key).has_value()) {
      throw LoadError(where + ": unknown atom '" + key + "'");
    }
    (void)value;
  }
  std::uint32_t index = 0;
  const std::size_t a = atoms.size();
  for (std::size_t i = 0; i < a; ++i) {
    if (!world.contains(atoms[i])) {
      throw LoadError(where + ": world assignment missing atom '" + atoms[i] + "'");
    }
    const json& v = world[atoms[i]];
    bool bit;
    if (v.is_boolean()) {
      bit = v.get<bool>();
    } else if (v.is_number_integer() &&
               (v.get<long long>() == 0 || v.get<long long>() == 1)) {
      bit = v.get<long long>() == 1;
    } else {
      throw LoadError(where + ": atom '" + atoms[i] + "' must be 0 or 1");
    }
    if (bit) index |= std::uint32_t{1} << (a - 1 - i);
  }
  return index;
}

}  // namespace

Dataset load_dataset_json(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw LoadError("top level must be a JSON object");
  auto vocab = make_vocab(read_atoms(doc), read_predicates(doc), read_constants(doc));

  if (!doc.contains("data") || !doc["data"].is_array()) {
    throw LoadError("document lacks a 'data' array");
  }
  std::vector<Dataset::Entry> entries;
  std::vector<bool> seen(vocab->world_count(), false);
  std::size_t row_no = 0;
  for (const auto& row : doc["data"]) {
    ++row_no;
    const std::string where = "data row " + std::to_string(row_no);
    if (!row.is_object() || !row.contains("world") || !row.contains("count")) {
      throw LoadError(where + ": expected {\"world\": {...}, \"count\": n}");
    }
    std::uint32_t index = read_world(row["world"], *vocab, where);
    const json& count = row["count"];
    if (!count.is_number_integer() || count.get<long long>() < 1) {
      throw LoadError(where + ": count must be a positive integer");
    }
    if (seen[index]) throw LoadError(where + ": duplicate world row");
    seen[index] = true;
    entries.push_back({index, static_cast<std::uint64_t>(count.get<long long>())});
  }
  try {
    return Dataset(Vocabulary(*vocab), std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw LoadError(e.what());
  }
}

Dataset load_dataset_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw LoadError("empty CSV document");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(s);
    while (std::getline(ss, cell, ',')) {
      // trim surrounding whitespace
      std::size_t b = cell.find_first_not_of(" \t");
      std::size_t e = cell.find_last_not_of(" \t");
      cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    if (!s.empty() && s.back() == ',') cells.push_back("");
    return cells;
  };

  std::vector<std::string> header = split(line);
  if (header.size() < 2 || header.back() != "count") {
    throw LoadError("CSV header must list the atoms followed by 'count'");
  }
  std::vector<std::string> atoms(header.begin(), header.end() - 1);
  auto vocab = make_vocab(std::move(atoms), {}, {});
  const std::size_t a = vocab->atom_count();

  std::vector<Dataset::Entry> entries;
  std::vector<bool> seen(vocab->world_count(), false);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;  // blank line
    const std::string where = "line " + std::to_string(line_no);
    std::vector<std::string> cells = split(line);
    if (cells.size() != a + 1) {
      throw LoadError(where + ": expected " + std::to_string(a + 1) + " cells, got " +
                      std::to_string(cells.size()));
    }
    std::uint32_t index = 0;
    for (std::size_t i = 0; i < a; ++i) {
      if (cells[i] == "1") {
        index |= std::uint32_t{1} << (a - 1 - i);
      } else if (cells[i] != "0") {
        throw LoadError(where + ": atom '" + vocab->ground_atoms()[i] + "' must be 0 or 1");
      }
    }
    std::uint64_t count = 0;
    try {
      std::size_t used = 0;
      long long v = std::stoll(cells[a], &used);
      if (used != cells[a].size() || v < 1) throw std::invalid_argument("");
      count = static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
      throw LoadError(where + ": count must be a positive integer");
    }
    if (seen[index]) throw LoadError(where + ": duplicate world row");
    seen[index] = true;
    entries.push_back({index, count});
  }
  try {
    return Dataset(Vocabulary(*vocab), std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw LoadError(e.what());
  }
}

Dataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open '" + path.string() + "'");
  if (path.extension() == ".csv") return load_dataset_csv(in);
  if (path.extension() == ".json") {
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_dataset_json(buffer.str());
  }
  throw LoadError("unsupported dataset format '" + path.extension().string() +
                  "' (expected .json or .csv)");
}

ModelDistribution load_prior_json(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw LoadError("top level must be a JSON object");
  auto vocab = make_vocab(read_atoms(doc), read_predicates(doc), read_constants(doc));

  if (!doc.contains("prior") || !doc["prior"].is_array()) {
    throw LoadError("document lacks a 'prior' array");
  }
  std::vector<ModelDistribution::Entry> probs;
  std::vector<bool> seen(vocab->world_count(), false);
  Rational sum(0);
  std::size_t row_no = 0;
  for (const auto& row : doc["prior"]) {
    ++row_no;
    const std::string where = "prior row " + std::to_string(row_no);
    if (!row.is_object() || !row.contains("world") || !row.contains("p")) {
      throw LoadError(where + ": expected {\"world\": {...}, \"p\": \"n/d\"}");
    }
    std::uint32_t index = read_world(row["world"], *vocab, where);
    const json& p = row["p"];
    Rational value;
    if (p.is_string()) {
      try {
        value = Rational::parse(p.get<std::string>());
      } catch (const std::invalid_argument&) {
        throw LoadError(where + ": cannot parse probability '" + p.get<std::string>() + "'");
      }
    } else if (p.is_number_integer()) {
      value = Rational(p.get<long long>());
    } else {
      // Binary floating point cannot represent most decimal probabilities;
      // demand a string so "9/10" stays exactly 9/10.
      throw LoadError(where + ": probability must be a string like \"9/10\" or \"0.4\"");
    }
    if (value.is_negative()) throw LoadError(where + ": probability is negative");
    if (seen[index]) throw LoadError(where + ": duplicate world row");
    seen[index] = true;
    sum += value;
    if (!value.is_zero()) probs.emplace_back(index, std::move(value));
  }
  if (sum != Rational(1)) {
    throw LoadError("prior probabilities sum to " + sum.to_string() + ", expected 1/1");
  }
  try {
    return ModelDistribution(vocab, std::move(probs));
  } catch (const std::invalid_argument& e) {
    throw LoadError(e.what());
  }
}

ModelDistribution load_prior(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_prior_json(buffer.str());
}

}  // namespace genlog
