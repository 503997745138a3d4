#include "genlog/formula.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

#include "genlog/errors.hpp"

namespace genlog {

struct Formula::Node {
  Kind kind;
  std::string name;                     // atom / predicate / bound variable
  std::vector<std::string> args;        // atom arguments
  std::shared_ptr<const Node> a, b;     // children
};

Formula Formula::atom(std::string name, std::vector<std::string> args) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kAtom;
  n->name = std::move(name);
  n->args = std::move(args);
  return Formula(std::move(n));
}
Formula Formula::top() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kTop;
  return Formula(std::move(n));
}
Formula Formula::bottom() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kBottom;
  return Formula(std::move(n));
}
Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kNot;
  n->a = std::move(f.node_);
  return Formula(std::move(n));
}
Formula Formula::conjunction(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kAnd;
  n->a = std::move(lhs.node_);
  n->b = std::move(rhs.node_);
  return Formula(std::move(n));
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kOr;
  n->a = std::move(lhs.node_);
  n->b = std::move(rhs.node_);
  return Formula(std::move(n));
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kImplies;
  n->a = std::move(lhs.node_);
  n->b = std::move(rhs.node_);
  return Formula(std::move(n));
}
Formula Formula::equivalence(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kIff;
  n->a = std::move(lhs.node_);
  n->b = std::move(rhs.node_);
  return Formula(std::move(n));
}
Formula Formula::for_all(std::string var, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kForAll;
  n->name = std::move(var);
  n->a = std::move(body.node_);
  return Formula(std::move(n));
}
Formula Formula::exists(std::string var, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kExists;
  n->name = std::move(var);
  n->a = std::move(body.node_);
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const std::vector<std::string>& Formula::args() const { return node_->args; }
Formula Formula::left() const { return Formula(node_->a); }
Formula Formula::right() const { return Formula(node_->b); }
Formula Formula::child() const { return Formula(node_->a); }

std::string Formula::atom_label() const {
  assert(node_->kind == Kind::kAtom);
  if (node_->args.empty()) return node_->name;
  std::string label = node_->name + "(";
  for (std::size_t i = 0; i < node_->args.size(); ++i) {
    if (i > 0) label += ",";
    label += node_->args[i];
  }
  label += ")";
  return label;
}

bool Formula::is_quantifier_free() const {
  switch (kind()) {
    case Kind::kAtom:
    case Kind::kTop:
    case Kind::kBottom:
      return true;
    case Kind::kNot:
      return child().is_quantifier_free();
    case Kind::kAnd:
    case Kind::kOr:
    case Kind::kImplies:
    case Kind::kIff:
      return left().is_quantifier_free() && right().is_quantifier_free();
    case Kind::kForAll:
    case Kind::kExists:
      return false;
  }
  return false;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::kAtom:
      return name() == other.name() && args() == other.args();
    case Kind::kTop:
    case Kind::kBottom:
      return true;
    case Kind::kNot:
      return child() == other.child();
    case Kind::kAnd:
    case Kind::kOr:
    case Kind::kImplies:
    case Kind::kIff:
      return left() == other.left() && right() == other.right();
    case Kind::kForAll:
    case Kind::kExists:
      return name() == other.name() && child() == other.child();
  }
  return false;
}

namespace {

// Precedence for printing: atoms bind tightest, quantifier bodies extend to
// the end of the formula so a quantifier is parenthesized wherever nesting
// could truncate its body.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::kAtom:
    case Formula::Kind::kTop:
    case Formula::Kind::kBottom:
      return 6;
    case Formula::Kind::kNot:
      return 5;
    case Formula::Kind::kAnd:
      return 4;
    case Formula::Kind::kOr:
      return 3;
    case Formula::Kind::kImplies:
      return 2;
    case Formula::Kind::kIff:
      return 1;
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists:
      return 0;
  }
  return 0;
}

void print_rec(const Formula& f, std::string& out);

// side: -1 left operand, +1 right operand, 0 unary operand.
void print_child(const Formula& child, Formula::Kind parent, int side, std::string& out) {
  int pp = precedence(parent);
  int cp = precedence(child.kind());
  bool parens = cp < pp;
  if (cp == pp && cp > 0) {
    bool left_assoc = parent == Formula::Kind::kAnd || parent == Formula::Kind::kOr ||
                      parent == Formula::Kind::kIff;
    if (left_assoc && side > 0) parens = true;
    if (parent == Formula::Kind::kImplies && side < 0) parens = true;
  }
  if (parens) out += "(";
  print_rec(child, out);
  if (parens) out += ")";
}

void print_rec(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      out += f.atom_label();
      return;
    case Formula::Kind::kTop:
      out += "true";
      return;
    case Formula::Kind::kBottom:
      out += "false";
      return;
    case Formula::Kind::kNot:
      out += "~";
      print_child(f.child(), f.kind(), 0, out);
      return;
    case Formula::Kind::kAnd:
      print_child(f.left(), f.kind(), -1, out);
      out += " & ";
      print_child(f.right(), f.kind(), +1, out);
      return;
    case Formula::Kind::kOr:
      print_child(f.left(), f.kind(), -1, out);
      out += " | ";
      print_child(f.right(), f.kind(), +1, out);
      return;
    case Formula::Kind::kImplies:
      print_child(f.left(), f.kind(), -1, out);
      out += " -> ";
      print_child(f.right(), f.kind(), +1, out);
      return;
    case Formula::Kind::kIff:
      print_child(f.left(), f.kind(), -1, out);
      out += " <-> ";
      print_child(f.right(), f.kind(), +1, out);
      return;
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists:
      out += f.kind() == Formula::Kind::kForAll ? "forall " : "exists ";
      out += f.name();
      out += ". ";
      print_rec(f.child(), out);
      return;
  }
}

Formula substitute(const Formula& f, const std::string& var, const std::string& constant) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      std::vector<std::string> args = f.args();
      bool changed = false;
      for (auto& a : args) {
        if (a == var) {
          a = constant;
          changed = true;
        }
      }
      return changed ? Formula::atom(f.name(), std::move(args)) : f;
    }
    case Formula::Kind::kTop:
    case Formula::Kind::kBottom:
      return f;
    case Formula::Kind::kNot:
      return Formula::negation(substitute(f.child(), var, constant));
    case Formula::Kind::kAnd:
      return Formula::conjunction(substitute(f.left(), var, constant),
                                  substitute(f.right(), var, constant));
    case Formula::Kind::kOr:
      return Formula::disjunction(substitute(f.left(), var, constant),
                                  substitute(f.right(), var, constant));
    case Formula::Kind::kImplies:
      return Formula::implication(substitute(f.left(), var, constant),
                                  substitute(f.right(), var, constant));
    case Formula::Kind::kIff:
      return Formula::equivalence(substitute(f.left(), var, constant),
                                  substitute(f.right(), var, constant));
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists:
      // Grounding expands innermost quantifiers first, so a quantifier can
      // only be seen here if it rebinds the same name; its body has no free
      // occurrence of `var` then.
      if (f.name() == var) return f;
      throw std::logic_error("substitute reached a quantifier");
  }
  return f;
}

// After grounding every atom must name a vocabulary ground atom; anything
// else is an unexpanded variable or an unknown symbol.
void check_grounded_atom(const Formula& f, const Vocabulary& vocab) {
  for (const auto& a : f.args()) {
    if (!vocab.is_constant(a)) {
      throw std::invalid_argument("free variable or unknown constant '" + a +
                                  "' in '" + f.atom_label() + "'");
    }
  }
  if (!vocab.atom_index(f.atom_label()).has_value()) {
    throw std::invalid_argument("unknown atom '" + f.atom_label() + "'");
  }
}

// Expands quantifiers innermost-first; the fold below always substitutes into
// an already quantifier-free body, so shadowed variable names resolve to the
// innermost binder and substitute() never meets a quantifier node.
Formula expand_quantifiers(const Formula& f, const Vocabulary& vocab) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
    case Formula::Kind::kTop:
    case Formula::Kind::kBottom:
      return f;
    case Formula::Kind::kNot:
      return Formula::negation(expand_quantifiers(f.child(), vocab));
    case Formula::Kind::kAnd:
      return Formula::conjunction(expand_quantifiers(f.left(), vocab),
                                  expand_quantifiers(f.right(), vocab));
    case Formula::Kind::kOr:
      return Formula::disjunction(expand_quantifiers(f.left(), vocab),
                                  expand_quantifiers(f.right(), vocab));
    case Formula::Kind::kImplies:
      return Formula::implication(expand_quantifiers(f.left(), vocab),
                                  expand_quantifiers(f.right(), vocab));
    case Formula::Kind::kIff:
      return Formula::equivalence(expand_quantifiers(f.left(), vocab),
                                  expand_quantifiers(f.right(), vocab));
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists: {
      const auto& constants = vocab.constants();
      if (constants.empty()) {
        throw std::invalid_argument("quantifier over empty constant set: 'forall/exists " +
                                    f.name() + "'");
      }
      Formula body = expand_quantifiers(f.child(), vocab);
      bool universal = f.kind() == Formula::Kind::kForAll;
      Formula acc = substitute(body, f.name(), constants.front());
      for (std::size_t i = 1; i < constants.size(); ++i) {
        Formula next = substitute(body, f.name(), constants[i]);
        acc = universal ? Formula::conjunction(std::move(acc), std::move(next))
                        : Formula::disjunction(std::move(acc), std::move(next));
      }
      return acc;
    }
  }
  return f;
}

void validate_atoms(const Formula& f, const Vocabulary& vocab) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      check_grounded_atom(f, vocab);
      return;
    case Formula::Kind::kTop:
    case Formula::Kind::kBottom:
      return;
    case Formula::Kind::kNot:
      validate_atoms(f.child(), vocab);
      return;
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
    case Formula::Kind::kImplies:
    case Formula::Kind::kIff:
      validate_atoms(f.left(), vocab);
      validate_atoms(f.right(), vocab);
      return;
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists:
      throw std::logic_error("validate_atoms reached a quantifier");
  }
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_rec(f, out);
  return out;
}

Formula ground(const Formula& f, const Vocabulary& vocab) {
  Formula expanded = expand_quantifiers(f, vocab);
  validate_atoms(expanded, vocab);
  return expanded;
}

bool evaluate(const Formula& f, const World& w) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      auto idx = w.vocab().atom_index(f.atom_label());
      if (!idx) throw std::invalid_argument("unknown atom '" + f.atom_label() + "'");
      return w.truth(*idx);
    }
    case Formula::Kind::kTop:
      return true;
    case Formula::Kind::kBottom:
      return false;
    case Formula::Kind::kNot:
      return !evaluate(f.child(), w);
    case Formula::Kind::kAnd:
      return evaluate(f.left(), w) && evaluate(f.right(), w);
    case Formula::Kind::kOr:
      return evaluate(f.left(), w) || evaluate(f.right(), w);
    case Formula::Kind::kImplies:
      return !evaluate(f.left(), w) || evaluate(f.right(), w);
    case Formula::Kind::kIff:
      return evaluate(f.left(), w) == evaluate(f.right(), w);
    case Formula::Kind::kForAll:
    case Formula::Kind::kExists:
      throw std::logic_error("evaluate called on a quantified formula; ground it first");
  }
  return false;
}

std::vector<World> enumerate_worlds(const Vocabulary& vocab, std::size_t atom_cap) {
  if (vocab.atom_count() > atom_cap) {
    throw ResourceError("enumeration over " + std::to_string(vocab.atom_count()) +
                        " atoms exceeds the cap of " + std::to_string(atom_cap));
  }
  std::vector<World> worlds;
  const std::uint64_t n = vocab.world_count();
  worlds.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    worlds.emplace_back(vocab, static_cast<std::uint32_t>(i));
  }
  return worlds;
}

WorldSet models_of(std::span<const Formula> formulas, const Vocabulary& vocab,
                   std::size_t atom_cap) {
  if (vocab.atom_count() > atom_cap) {
    throw ResourceError("enumeration over " + std::to_string(vocab.atom_count()) +
                        " atoms exceeds the cap of " + std::to_string(atom_cap));
  }
  const std::uint64_t n = vocab.world_count();
  WorldSet result(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    World w(vocab, static_cast<std::uint32_t>(i));
    bool all = true;
    for (const auto& f : formulas) {
      if (!evaluate(f, w)) {
        all = false;
        break;
      }
    }
    if (all) result.add(static_cast<std::uint32_t>(i));
  }
  return result;
}

}  // namespace genlog
