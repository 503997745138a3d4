#pragma once

#include <string_view>

#include "genlog/formula.hpp"
#include "genlog/vocabulary.hpp"

namespace genlog {

// Query grammar (ASCII and Unicode connectives both accepted):
//
//   formula := iff
//   iff     := imp ("<->" imp)*                      left associative
//   imp     := or ("->" imp)?                        right associative
//   or      := and (("|" | "∨") and)*
//   and     := unary (("&" | "∧") unary)*
//   unary   := ("~" | "¬") unary
//            | "true" | "false"
//            | ("forall" | "exists") IDENT "." formula
//            | IDENT ("(" IDENT ("," IDENT)* ")")?
//            | "(" formula ")"
//
// Atoms must exist in the vocabulary; predicate arguments must be declared
// constants or variables bound by an enclosing quantifier.
// Throws ParseError with the byte offset of the failure.
Formula parse(std::string_view text, const Vocabulary& vocab);

}  // namespace genlog
