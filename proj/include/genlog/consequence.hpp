#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "genlog/dataset.hpp"
#include "genlog/formula.hpp"
#include "genlog/vocabulary.hpp"

namespace genlog {

struct ConsequenceReport {
  enum class Relation { kClassical, kPossible };
  Relation relation;
  bool holds;
  /// The premise models the check quantified over: [[Delta]] for the
  /// classical relation, [[Delta]]_p for the possible one.
  WorldSet witness;
};

/// Delta |= alpha: every model of the premises models the conclusion.
/// Empty [[Delta]] entails everything.
ConsequenceReport entails_classical(std::span<const Formula> premises,
                                    const Formula& conclusion,
                                    const Vocabulary& vocab,
                                    std::size_t atom_cap = kDefaultAtomCap);

/// The weaker relation over possible models only: [[Delta]]_p subset of
/// [[alpha]]_p where [[.]]_p keeps worlds with nonzero probability.
ConsequenceReport entails_possible(std::span<const Formula> premises,
                                   const Formula& conclusion,
                                   const ModelDistribution& dist);

/// A family of equal-cardinality sub-multisets of the premises, each with
/// the (possible) worlds satisfying it.
struct SubsetFamily {
  struct Member {
    std::vector<Formula> formulas;
    WorldSet models;
  };
  std::vector<Member> members;
  /// Shared cardinality, counted with multiplicity.
  std::size_t cardinality = 0;
};

enum class SubsetMode {
  kAuto,      // explicit enumeration up to 12 premises, argmax beyond
  kExplicit,  // force sub-multiset enumeration (ResourceError past 12)
  kArgmax,    // force the satisfied-count characterization
};

/// MPS(Delta): the cardinality-maximal sub-multisets with at least one
/// possible model. For the empty premise multiset this is {{}}.
SubsetFamily maximal_possible_subsets(std::span<const Formula> premises,
                                      const ModelDistribution& dist,
                                      SubsetMode mode = SubsetMode::kAuto);

/// MCS(Delta): the classical counterpart, checked by satisfiability over
/// all worlds of the vocabulary.
SubsetFamily maximal_consistent_subsets(std::span<const Formula> premises,
                                        const Vocabulary& vocab,
                                        SubsetMode mode = SubsetMode::kAuto,
                                        std::size_t atom_cap = kDefaultAtomCap);

/// [[Delta]]_MPS: the support worlds satisfying a maximal number c* of
/// premises, provided c* >= 1. Returns the empty set when no support world
/// satisfies any premise (the p(alpha|Delta) = p(alpha) regime).
WorldSet possible_approximate_models(std::span<const Formula> premises,
                                     const ModelDistribution& dist);

/// [[Delta]]_MCS over all worlds, same c* >= 1 convention.
WorldSet approximate_models(std::span<const Formula> premises,
                            const Vocabulary& vocab,
                            std::size_t atom_cap = kDefaultAtomCap);

}  // namespace genlog
