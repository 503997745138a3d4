#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "genlog/vocabulary.hpp"

namespace genlog {

inline constexpr std::size_t kDefaultAtomCap = 20;

/// Immutable formula AST. Atom arguments are identifier strings: constants
/// once grounded, possibly quantified variables before.
class Formula {
 public:
  enum class Kind : std::uint8_t {
    kAtom,
    kTop,
    kBottom,
    kNot,
    kAnd,
    kOr,
    kImplies,
    kIff,
    kForAll,
    kExists,
  };

  static Formula atom(std::string name, std::vector<std::string> args = {});
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);
  static Formula for_all(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);

  Kind kind() const;
  /// Atom name for kAtom, bound variable name for quantifiers.
  const std::string& name() const;
  const std::vector<std::string>& args() const;
  Formula left() const;   // kAnd/kOr/kImplies/kIff
  Formula right() const;  // kAnd/kOr/kImplies/kIff
  Formula child() const;  // kNot and quantifier body

  /// Ground-atom label: "rain", or "blames(a,b)" for predicate atoms.
  std::string atom_label() const;

  bool is_quantifier_free() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// ASCII rendering with minimal parentheses; parse(print(f)) == f.
std::string print(const Formula& f);

/// Herbrand expansion: ForAll becomes a conjunction over the declared
/// constants, Exists a disjunction, innermost quantifiers first. The result
/// is quantifier-free and every atom is checked against the vocabulary.
Formula ground(const Formula& f, const Vocabulary& vocab);

/// Classical two-valued semantics. The formula must be quantifier-free and
/// grounded over w's vocabulary.
bool evaluate(const Formula& f, const World& w);

/// All 2^A worlds in index order. Throws ResourceError past the atom cap.
std::vector<World> enumerate_worlds(const Vocabulary& vocab,
                                    std::size_t atom_cap = kDefaultAtomCap);

/// Worlds satisfying every formula in the multiset; all worlds when empty.
WorldSet models_of(std::span<const Formula> formulas, const Vocabulary& vocab,
                   std::size_t atom_cap = kDefaultAtomCap);

}  // namespace genlog
