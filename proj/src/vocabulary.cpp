#include "genlog/vocabulary.hpp"

#include <stdexcept>
#include <unordered_set>

#include "genlog/errors.hpp"

namespace genlog {
namespace {

// Structural ceiling: WorldSet and world indices are sized for 2^24 worlds.
constexpr std::size_t kMaxAtoms = 24;

void append_instantiations(const Vocabulary::Predicate& pred,
                           const std::vector<std::string>& constants,
                           std::vector<std::string>& out) {
  std::vector<std::size_t> tuple(pred.arity, 0);
  while (true) {
    std::string label = pred.name + "(";
    for (std::size_t i = 0; i < pred.arity; ++i) {
      if (i > 0) label += ",";
      label += constants[tuple[i]];
    }
    label += ")";
    out.push_back(std::move(label));
    // Advance the tuple, last argument fastest.
    std::size_t pos = pred.arity;
    while (pos > 0) {
      --pos;
      if (++tuple[pos] < constants.size()) break;
      tuple[pos] = 0;
      if (pos == 0) return;
    }
  }
}

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> atoms,
                       std::vector<Predicate> predicates,
                       std::vector<std::string> constants)
    : declared_atoms_(std::move(atoms)),
      predicates_(std::move(predicates)),
      constants_(std::move(constants)) {
  for (const auto& a : declared_atoms_) {
    if (a.empty()) throw std::invalid_argument("empty atom name");
  }
  for (const auto& p : predicates_) {
    if (p.name.empty()) throw std::invalid_argument("empty predicate name");
    if (p.arity == 0) throw std::invalid_argument("predicate '" + p.name + "' has arity 0");
  }
  if (!predicates_.empty() && constants_.empty()) {
    throw std::invalid_argument("predicates declared without constants");
  }
  {
    std::unordered_set<std::string> seen;
    for (const auto& c : constants_) {
      if (c.empty()) throw std::invalid_argument("empty constant name");
      if (!seen.insert(c).second) {
        throw std::invalid_argument("duplicate constant '" + c + "'");
      }
    }
  }

  ground_atoms_ = declared_atoms_;
  for (const auto& p : predicates_) append_instantiations(p, constants_, ground_atoms_);

  if (ground_atoms_.empty()) {
    throw std::invalid_argument("vocabulary declares no atom or predicate");
  }
  if (ground_atoms_.size() > kMaxAtoms) {
    throw ResourceError("vocabulary has " + std::to_string(ground_atoms_.size()) +
                        " ground atoms; the limit is " + std::to_string(kMaxAtoms));
  }
  for (std::size_t i = 0; i < ground_atoms_.size(); ++i) {
    if (!index_.emplace(ground_atoms_[i], i).second) {
      throw std::invalid_argument("duplicate atom '" + ground_atoms_[i] + "'");
    }
  }
}

std::optional<std::size_t> Vocabulary::atom_index(std::string_view full_name) const {
  auto it = index_.find(std::string(full_name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Vocabulary::is_constant(std::string_view name) const {
  for (const auto& c : constants_) {
    if (c == name) return true;
  }
  return false;
}

const Vocabulary::Predicate* Vocabulary::find_predicate(std::string_view name) const {
  for (const auto& p : predicates_) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

}  // namespace genlog
