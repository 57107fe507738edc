#pragma once

// Tokenizer shared by the Turtle, axiom, rule, query, and rename-map readers.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "swkg/graph.hpp"
#include "swkg/parse_error.hpp"

namespace swkg::detail {

enum class Tok {
  End,
  IriRef,     // <...>; text = IRI
  PName,      // prefix:local; text = prefix, local = local part
  Blank,      // _:label; text = label
  Var,        // ?name; text = name
  String,     // "..." or """..."""; text = unescaped value
  Name,       // bare identifier
  Number,     // [0-9]+
  AtWord,     // @prefix, @en, ...; text = word
  Dot,
  Comma,
  Semicolon,
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Arrow,      // ->
  DoubleCaret,
  Star,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::string local;
  std::size_t line = 1;
  std::size_t column = 1;

  // Source spelling for error messages.
  std::string spelling() const;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src, std::size_t first_line = 1)
      : src_(src), line_(first_line) {}

  const Token& peek();
  Token next();
  bool at(Tok kind) { return peek().kind == kind; }
  bool at_name(std::string_view word) {
    return peek().kind == Tok::Name && peek().text == word;
  }
  // Consumes a token of `kind` or throws.
  Token expect(Tok kind, std::string_view what);
  void expect_name(std::string_view word);

  [[noreturn]] void fail(const Token& at, std::string message) const;
  [[noreturn]] void fail_here(std::string message);

 private:
  Token scan();
  void skip_space_and_comments();
  char cur() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  char ahead(std::size_t k) const {
    return pos_ + k < src_.size() ? src_[pos_ + k] : '\0';
  }
  void advance();
  std::string read_name_chars();
  std::string read_string(const Token& start);

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_ = 1;
  std::optional<Token> lookahead_;
};

// Resolves an IRI-ish token (IRIREF or prefixed name) against `prefixes`.
// Bare names resolve against the default `:` prefix when `allow_bare` is set.
std::string resolve_iri(Lexer& lx, const Token& tok, const PrefixMap& prefixes,
                        bool allow_bare);

// Reads `@prefix p: <iri> .` (or `PREFIX p: <iri>` when `sparql_style`)
// after the introducing keyword has been consumed.
void read_prefix_directive(Lexer& lx, PrefixMap& prefixes, bool sparql_style);

}  // namespace swkg::detail
