#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace genlog {

/// The finite language: named propositional atoms plus, optionally,
/// predicates expanded over a finite constant set. The ground-atom list is
/// the declared atoms followed by every instantiation predicate(c1,...,ck),
/// predicates in declaration order, argument tuples with the last position
/// varying fastest. A ground atoms induce N = 2^A worlds.
class Vocabulary {
 public:
  struct Predicate {
    std::string name;
    std::size_t arity;
  };

  explicit Vocabulary(std::vector<std::string> atoms)
      : Vocabulary(std::move(atoms), {}, {}) {}
  Vocabulary(std::vector<std::string> atoms, std::vector<Predicate> predicates,
             std::vector<std::string> constants);

  std::size_t atom_count() const { return ground_atoms_.size(); }
  std::uint64_t world_count() const { return std::uint64_t{1} << atom_count(); }

  const std::vector<std::string>& ground_atoms() const { return ground_atoms_; }
  std::optional<std::size_t> atom_index(std::string_view full_name) const;

  const std::vector<Predicate>& predicates() const { return predicates_; }
  const std::vector<std::string>& constants() const { return constants_; }
  bool is_constant(std::string_view name) const;
  const Predicate* find_predicate(std::string_view name) const;

  // Structural identity; used to detect queries built against another vocabulary.
  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.ground_atoms_ == b.ground_atoms_;
  }

 private:
  std::vector<std::string> declared_atoms_;
  std::vector<Predicate> predicates_;
  std::vector<std::string> constants_;
  std::vector<std::string> ground_atoms_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A total truth assignment, identified by its index in [0, N). The first
/// declared atom is the highest bit, so index order matches the usual truth
/// table row order: (0,0), (0,1), (1,0), (1,1).
class World {
 public:
  World(const Vocabulary& vocab, std::uint32_t index)
      : vocab_(&vocab), index_(index) {}

  std::uint32_t index() const { return index_; }
  const Vocabulary& vocab() const { return *vocab_; }

  bool truth(std::size_t atom_idx) const {
    return (index_ >> (vocab_->atom_count() - 1 - atom_idx)) & 1u;
  }

 private:
  const Vocabulary* vocab_;
  std::uint32_t index_;
};

/// Membership over the N worlds of one vocabulary.
class WorldSet {
 public:
  WorldSet() = default;
  explicit WorldSet(std::uint64_t world_count) : bits_(world_count) {}

  static WorldSet all(std::uint64_t world_count) {
    WorldSet s(world_count);
    s.bits_.set();
    return s;
  }
  static WorldSet none(std::uint64_t world_count) { return WorldSet(world_count); }

  std::uint64_t universe_size() const { return bits_.size(); }
  std::uint64_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool is_universe() const { return bits_.all() && bits_.size() > 0; }

  bool contains(std::uint32_t index) const { return bits_.test(index); }
  void add(std::uint32_t index) { bits_.set(index); }
  void remove(std::uint32_t index) { bits_.reset(index); }

  bool subset_of(const WorldSet& other) const { return bits_.is_subset_of(other.bits_); }

  WorldSet operator&(const WorldSet& other) const {
    WorldSet r = *this;
    r.bits_ &= other.bits_;
    return r;
  }
  WorldSet operator|(const WorldSet& other) const {
    WorldSet r = *this;
    r.bits_ |= other.bits_;
    return r;
  }
  WorldSet complement() const {
    WorldSet r = *this;
    r.bits_.flip();
    return r;
  }

  friend bool operator==(const WorldSet& a, const WorldSet& b) { return a.bits_ == b.bits_; }
  friend bool operator!=(const WorldSet& a, const WorldSet& b) { return !(a == b); }

  std::vector<std::uint32_t> indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(bits_.count());
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos;
         i = bits_.find_next(i)) {
      out.push_back(static_cast<std::uint32_t>(i));
    }
    return out;
  }

 private:
  boost::dynamic_bitset<> bits_;
};

}  // namespace genlog
