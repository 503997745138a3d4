#include "genlog/consequence.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <utility>

#include "genlog/errors.hpp"

namespace genlog {

namespace {

constexpr std::size_t kExplicitLimit = 12;

std::vector<WorldSet> per_premise_models(std::span<const Formula> premises,
                                         const Vocabulary& vocab, std::size_t atom_cap) {
  std::vector<WorldSet> out;
  out.reserve(premises.size());
  for (const auto& f : premises) {
    out.push_back(models_of(std::span<const Formula>(&f, 1), vocab, atom_cap));
  }
  return out;
}

/// (world, satisfied-premise count) for every world in `base`.
std::vector<std::pair<std::uint32_t, std::size_t>> satisfied_counts(
    std::span<const Formula> premises, const Vocabulary& vocab, const WorldSet& base) {
  std::vector<std::pair<std::uint32_t, std::size_t>> counts;
  for (std::uint32_t index : base.indices()) {
    World w(vocab, index);
    std::size_t c = 0;
    for (const auto& f : premises) {
      if (evaluate(f, w)) ++c;
    }
    counts.emplace_back(index, c);
  }
  return counts;
}

/// Key identifying a sub-multiset by content rather than by premise
/// positions: the sorted renderings of its formulas.
std::vector<std::string> multiset_key(std::span<const Formula> premises, std::uint32_t mask) {
  std::vector<std::string> key;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (mask & (std::uint32_t{1} << i)) key.push_back(print(premises[i]));
  }
  std::sort(key.begin(), key.end());
  return key;
}

/// Walks cardinalities downward and returns the first level with a
/// satisfiable sub-multiset; the empty sub-multiset (mask 0, model set
/// `base`) makes level 0 succeed whenever `base` is nonempty.
SubsetFamily family_by_enumeration(std::span<const Formula> premises,
                                   const std::vector<WorldSet>& sets, const WorldSet& base) {
  const std::size_t d = premises.size();
  if (d > kExplicitLimit) {
    throw ResourceError("explicit sub-multiset enumeration supports at most " +
                        std::to_string(kExplicitLimit) + " premises, got " +
                        std::to_string(d));
  }
  std::vector<std::vector<std::uint32_t>> masks_by_size(d + 1);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << d); ++mask) {
    masks_by_size[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  }

  for (std::size_t c = d + 1; c-- > 0;) {
    SubsetFamily family;
    family.cardinality = c;
    std::set<std::vector<std::string>> seen;
    for (std::uint32_t mask : masks_by_size[c]) {
      WorldSet models = base;
      for (std::size_t i = 0; i < d && !models.empty(); ++i) {
        if (mask & (std::uint32_t{1} << i)) models = models & sets[i];
      }
      if (models.empty()) continue;
      if (!seen.insert(multiset_key(premises, mask)).second) continue;
      SubsetFamily::Member member;
      for (std::size_t i = 0; i < d; ++i) {
        if (mask & (std::uint32_t{1} << i)) member.formulas.push_back(premises[i]);
      }
      member.models = std::move(models);
      family.members.push_back(std::move(member));
    }
    if (!family.members.empty()) return family;
  }
  return {};  // base empty; unreachable for any real distribution or vocabulary
}

/// The satisfied sub-multiset of any count-maximal world is itself
/// cardinality-maximal, and every maximal sub-multiset arises that way, so
/// the family can be read off the argmax worlds without enumerating masks.
SubsetFamily family_by_argmax(std::span<const Formula> premises, const Vocabulary& vocab,
                              const std::vector<WorldSet>& sets, const WorldSet& base) {
  auto counts = satisfied_counts(premises, vocab, base);
  std::size_t best = 0;
  for (const auto& [index, c] : counts) best = std::max(best, c);
  SubsetFamily family;
  family.cardinality = best;
  std::set<std::vector<std::string>> seen;
  for (const auto& [index, c] : counts) {
    if (c != best) continue;
    World w(vocab, index);
    SubsetFamily::Member member;
    std::vector<std::string> key;
    WorldSet models = base;
    for (std::size_t i = 0; i < premises.size(); ++i) {
      if (evaluate(premises[i], w)) {
        member.formulas.push_back(premises[i]);
        key.push_back(print(premises[i]));
        models = models & sets[i];
      }
    }
    std::sort(key.begin(), key.end());
    if (!seen.insert(std::move(key)).second) continue;
    member.models = std::move(models);
    family.members.push_back(std::move(member));
  }
  return family;
}

SubsetFamily family_dispatch(std::span<const Formula> premises, const Vocabulary& vocab,
                             const std::vector<WorldSet>& sets, const WorldSet& base,
                             SubsetMode mode) {
  const bool use_explicit =
      mode == SubsetMode::kExplicit ||
      (mode == SubsetMode::kAuto && premises.size() <= kExplicitLimit);
  if (use_explicit) return family_by_enumeration(premises, sets, base);
  return family_by_argmax(premises, vocab, sets, base);
}

}  // namespace

ConsequenceReport entails_classical(std::span<const Formula> premises,
                                    const Formula& conclusion, const Vocabulary& vocab,
                                    std::size_t atom_cap) {
  WorldSet delta = models_of(premises, vocab, atom_cap);
  WorldSet alpha = models_of(std::span<const Formula>(&conclusion, 1), vocab, atom_cap);
  return {ConsequenceReport::Relation::kClassical, delta.subset_of(alpha), std::move(delta)};
}

ConsequenceReport entails_possible(std::span<const Formula> premises,
                                   const Formula& conclusion, const ModelDistribution& dist) {
  const Vocabulary& vocab = dist.vocab();
  const std::size_t cap = vocab.atom_count();
  WorldSet delta_p = models_of(premises, vocab, cap) & dist.support();
  WorldSet alpha_p =
      models_of(std::span<const Formula>(&conclusion, 1), vocab, cap) & dist.support();
  return {ConsequenceReport::Relation::kPossible, delta_p.subset_of(alpha_p),
          std::move(delta_p)};
}

SubsetFamily maximal_possible_subsets(std::span<const Formula> premises,
                                      const ModelDistribution& dist, SubsetMode mode) {
  const Vocabulary& vocab = dist.vocab();
  auto sets = per_premise_models(premises, vocab, vocab.atom_count());
  return family_dispatch(premises, vocab, sets, dist.support(), mode);
}

SubsetFamily maximal_consistent_subsets(std::span<const Formula> premises,
                                        const Vocabulary& vocab, SubsetMode mode,
                                        std::size_t atom_cap) {
  auto sets = per_premise_models(premises, vocab, atom_cap);
  return family_dispatch(premises, vocab, sets, WorldSet::all(vocab.world_count()), mode);
}

WorldSet possible_approximate_models(std::span<const Formula> premises,
                                     const ModelDistribution& dist) {
  const Vocabulary& vocab = dist.vocab();
  auto counts = satisfied_counts(premises, vocab, dist.support());
  std::size_t best = 0;
  for (const auto& [index, c] : counts) best = std::max(best, c);
  WorldSet out(vocab.world_count());
  if (best == 0) return out;
  for (const auto& [index, c] : counts) {
    if (c == best) out.add(index);
  }
  return out;
}

WorldSet approximate_models(std::span<const Formula> premises, const Vocabulary& vocab,
                            std::size_t atom_cap) {
  if (vocab.atom_count() > atom_cap) {
    throw ResourceError("enumeration over " + std::to_string(vocab.atom_count()) +
                        " atoms exceeds the cap of " + std::to_string(atom_cap));
  }
  auto counts = satisfied_counts(premises, vocab, WorldSet::all(vocab.world_count()));
  std::size_t best = 0;
  for (const auto& [index, c] : counts) best = std::max(best, c);
  WorldSet out(vocab.world_count());
  if (best == 0) return out;
  for (const auto& [index, c] : counts) {
    if (c == best) out.add(index);
  }
  return out;
}

}  // namespace genlog
