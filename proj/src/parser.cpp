#include "genlog/parser.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genlog/errors.hpp"

namespace genlog {

namespace {

enum class Tok {
  kEnd,
  kLParen,
  kRParen,
  kComma,
  kDot,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kTrue,
  kFalse,
  kForAll,
  kExists,
  kIdent,
};

struct Token {
  Tok kind;
  std::size_t pos;    // byte offset into the source text
  std::string text;   // identifier spelling (kIdent only)
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::kEnd: return "end of input";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kComma: return "','";
    case Tok::kDot: return "'.'";
    case Tok::kNot: return "'~'";
    case Tok::kAnd: return "'&'";
    case Tok::kOr: return "'|'";
    case Tok::kImplies: return "'->'";
    case Tok::kIff: return "'<->'";
    case Tok::kTrue: return "'true'";
    case Tok::kFalse: return "'false'";
    case Tok::kForAll: return "'forall'";
    case Tok::kExists: return "'exists'";
    case Tok::kIdent: return "identifier";
  }
  return "token";
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Matches a fixed byte sequence (used for the UTF-8 connective glyphs).
bool starts_with(std::string_view text, std::size_t i, std::string_view bytes) {
  return text.substr(i, bytes.size()) == bytes;
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    switch (c) {
      case '(': out.push_back({Tok::kLParen, start, {}}); ++i; continue;
      case ')': out.push_back({Tok::kRParen, start, {}}); ++i; continue;
      case ',': out.push_back({Tok::kComma, start, {}}); ++i; continue;
      case '.': out.push_back({Tok::kDot, start, {}}); ++i; continue;
      case '~': out.push_back({Tok::kNot, start, {}}); ++i; continue;
      case '&': out.push_back({Tok::kAnd, start, {}}); ++i; continue;
      case '|': out.push_back({Tok::kOr, start, {}}); ++i; continue;
      case '-':
        if (starts_with(text, i, "->")) {
          out.push_back({Tok::kImplies, start, {}});
          i += 2;
          continue;
        }
        throw ParseError("unexpected character '-'", start);
      case '<':
        if (starts_with(text, i, "<->")) {
          out.push_back({Tok::kIff, start, {}});
          i += 3;
          continue;
        }
        throw ParseError("unexpected character '<'", start);
      default:
        break;
    }
    static constexpr std::pair<std::string_view, Tok> kGlyphs[] = {
        {"¬", Tok::kNot},      // ¬
        {"∧", Tok::kAnd},      // ∧
        {"∨", Tok::kOr},       // ∨
        {"→", Tok::kImplies},  // →
        {"↔", Tok::kIff},      // ↔
    };
    bool matched = false;
    for (const auto& [bytes, kind] : kGlyphs) {
      if (starts_with(text, i, bytes)) {
        out.push_back({kind, start, {}});
        i += bytes.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (is_ident_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      Tok kind = Tok::kIdent;
      if (word == "true") kind = Tok::kTrue;
      else if (word == "false") kind = Tok::kFalse;
      else if (word == "forall") kind = Tok::kForAll;
      else if (word == "exists") kind = Tok::kExists;
      out.push_back({kind, start, kind == Tok::kIdent ? std::move(word) : std::string{}});
      i = j;
      continue;
    }
    throw ParseError("unexpected character", start);
  }
  out.push_back({Tok::kEnd, text.size(), {}});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Vocabulary& vocab)
      : tokens_(std::move(tokens)), vocab_(vocab) {}

  Formula run() {
    Formula f = parse_iff();
    expect(Tok::kEnd);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  Token expect(Tok kind) {
    if (peek().kind != kind) {
      throw ParseError(std::string("expected ") + describe(kind) + ", found " +
                           describe(peek().kind),
                       peek().pos);
    }
    return take();
  }

  Formula parse_iff() {
    Formula f = parse_implies();
    while (accept(Tok::kIff)) {
      f = Formula::equivalence(std::move(f), parse_implies());
    }
    return f;
  }

  Formula parse_implies() {
    Formula f = parse_or();
    if (accept(Tok::kImplies)) {
      return Formula::implication(std::move(f), parse_implies());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept(Tok::kOr)) {
      f = Formula::disjunction(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept(Tok::kAnd)) {
      f = Formula::conjunction(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kNot:
        take();
        return Formula::negation(parse_unary());
      case Tok::kLParen: {
        take();
        Formula f = parse_iff();
        expect(Tok::kRParen);
        return f;
      }
      case Tok::kTrue:
        take();
        return Formula::top();
      case Tok::kFalse:
        take();
        return Formula::bottom();
      case Tok::kForAll:
      case Tok::kExists: {
        bool universal = t.kind == Tok::kForAll;
        take();
        Token var = expect(Tok::kIdent);
        expect(Tok::kDot);
        bound_.push_back(var.text);
        Formula body = parse_iff();
        bound_.pop_back();
        return universal ? Formula::for_all(var.text, std::move(body))
                         : Formula::exists(var.text, std::move(body));
      }
      case Tok::kIdent:
        return parse_atom();
      default:
        throw ParseError(std::string("expected a formula, found ") + describe(t.kind), t.pos);
    }
  }

  Formula parse_atom() {
    Token name = expect(Tok::kIdent);
    if (!accept(Tok::kLParen)) {
      if (!vocab_.atom_index(name.text).has_value()) {
        throw ParseError("unknown atom '" + name.text + "'", name.pos);
      }
      return Formula::atom(name.text);
    }
    const Vocabulary::Predicate* pred = vocab_.find_predicate(name.text);
    if (pred == nullptr) {
      throw ParseError("unknown predicate '" + name.text + "'", name.pos);
    }
    std::vector<std::string> args;
    do {
      Token arg = expect(Tok::kIdent);
      if (!vocab_.is_constant(arg.text) && !is_bound(arg.text)) {
        throw ParseError("unknown constant or unbound variable '" + arg.text + "'", arg.pos);
      }
      args.push_back(std::move(arg.text));
    } while (accept(Tok::kComma));
    expect(Tok::kRParen);
    if (args.size() != pred->arity) {
      throw ParseError("predicate '" + name.text + "' expects " +
                           std::to_string(pred->arity) + " argument(s), got " +
                           std::to_string(args.size()),
                       name.pos);
    }
    return Formula::atom(std::move(name.text), std::move(args));
  }

  bool is_bound(const std::string& name) const {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
      if (*it == name) return true;
    }
    return false;
  }

  std::vector<Token> tokens_;
  const Vocabulary& vocab_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;
};

}  // namespace

Formula parse(std::string_view text, const Vocabulary& vocab) {
  return Parser(lex(text), vocab).run();
}

}  // namespace genlog
