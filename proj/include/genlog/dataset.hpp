#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "genlog/rational.hpp"
#include "genlog/vocabulary.hpp"

namespace genlog {

/// A multiset of data, aggregated per world: each entry says "count data
/// evidence this world". K is the total count. Entries are kept sorted by
/// world index and worlds are distinct.
class Dataset {
 public:
  struct Entry {
    std::uint32_t world_index;
    std::uint64_t count;
  };

  Dataset(Vocabulary vocab, std::vector<Entry> entries);

  const Vocabulary& vocab() const { return *vocab_; }
  std::shared_ptr<const Vocabulary> vocab_ptr() const { return vocab_; }
  std::span<const Entry> entries() const { return entries_; }
  /// K, the total number of data.
  std::uint64_t total_count() const { return total_; }
  World world(std::uint32_t index) const { return World(*vocab_, index); }

 private:
  std::shared_ptr<const Vocabulary> vocab_;
  std::vector<Entry> entries_;
  std::uint64_t total_;
};

/// Per-world datum counts K_n (zero for worlds with no data).
class ModelCounts {
 public:
  ModelCounts(std::vector<Dataset::Entry> entries, std::uint64_t total,
              std::uint64_t world_count)
      : entries_(std::move(entries)), total_(total), world_count_(world_count) {}

  std::uint64_t count_of(std::uint32_t world_index) const;
  std::uint64_t total() const { return total_; }
  std::uint64_t world_count() const { return world_count_; }
  std::span<const Dataset::Entry> nonzero() const { return entries_; }

 private:
  std::vector<Dataset::Entry> entries_;
  std::uint64_t total_;
  std::uint64_t world_count_;
};

/// Exact-rational distribution p(M) over the worlds of one vocabulary.
/// Stored sparsely over its support; probabilities sum to exactly 1.
class ModelDistribution {
 public:
  using Entry = std::pair<std::uint32_t, Rational>;

  ModelDistribution(std::shared_ptr<const Vocabulary> vocab,
                    std::vector<Entry> probs);

  const Vocabulary& vocab() const { return *vocab_; }
  Rational prob(std::uint32_t world_index) const;
  std::span<const Entry> support_entries() const { return probs_; }
  const WorldSet& support() const { return support_; }
  World world(std::uint32_t index) const { return World(*vocab_, index); }

 private:
  std::shared_ptr<const Vocabulary> vocab_;
  std::vector<Entry> probs_;  // sorted by world index, all > 0
  WorldSet support_;
};

ModelCounts model_counts(const Dataset& ds);

/// Maximum likelihood estimate: p(m_n) = K_n / K.
ModelDistribution mle_prior(const Dataset& ds);

/// True iff every world has nonzero probability.
bool model_assumption_holds(const ModelDistribution& dist);

/// Loaders. The path-based loader dispatches on extension (.json / .csv).
/// All reject malformed documents with a LoadError naming the row.
Dataset load_dataset(const std::filesystem::path& path);
Dataset load_dataset_json(const std::string& text);
Dataset load_dataset_csv(std::istream& in);

/// Explicit prior document, bypassing data:
/// {"atoms": [...], "prior": [{"world": {...}, "p": "9/10"}, ...]}
ModelDistribution load_prior(const std::filesystem::path& path);
ModelDistribution load_prior_json(const std::string& text);

}  // namespace genlog
