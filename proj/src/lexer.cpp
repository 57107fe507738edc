#include "lexer.hpp"

#include <cctype>

namespace swkg {

ParseError::ParseError(std::size_t line, std::size_t column,
                       std::string message, std::string token)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message +
                         (token.empty() ? "" : " (near '" + token + "')")),
      line_(line),
      column_(column),
      message_(std::move(message)),
      token_(std::move(token)) {}

}  // namespace swkg

namespace swkg::detail {

namespace {

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

bool name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

std::string Token::spelling() const {
  switch (kind) {
    case Tok::End: return "<end of input>";
    case Tok::IriRef: return "<" + text + ">";
    case Tok::PName: return text + ":" + local;
    case Tok::Blank: return "_:" + text;
    case Tok::Var: return "?" + text;
    case Tok::String: return "\"" + text + "\"";
    case Tok::AtWord: return "@" + text;
    default: return text;
  }
}

void Lexer::advance() {
  if (pos_ >= src_.size()) return;
  if (src_[pos_] == '\n') {
    ++line_;
    column_ = 1;
  } else {
    ++column_;
  }
  ++pos_;
}

void Lexer::skip_space_and_comments() {
  for (;;) {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(cur()))) {
      advance();
    }
    if (cur() == '#') {
      while (pos_ < src_.size() && cur() != '\n') advance();
      continue;
    }
    return;
  }
}

std::string Lexer::read_name_chars() {
  std::string out;
  for (;;) {
    const char c = cur();
    if (name_char(c)) {
      out += c;
      advance();
    } else if (c == '.' && name_char(ahead(1)) && !out.empty()) {
      out += c;
      advance();
    } else {
      return out;
    }
  }
}

std::string Lexer::read_string(const Token& start) {
  const bool long_form = ahead(1) == '"' && ahead(2) == '"';
  const std::size_t quotes = long_form ? 3 : 1;
  for (std::size_t i = 0; i < quotes; ++i) advance();
  std::string out;
  for (;;) {
    if (pos_ >= src_.size()) fail(start, "unterminated string");
    const char c = cur();
    if (!long_form && (c == '\n' || c == '\r')) {
      fail(start, "unterminated string");
    }
    if (c == '"') {
      if (!long_form) {
        advance();
        return out;
      }
      if (ahead(1) == '"' && ahead(2) == '"') {
        advance();
        advance();
        advance();
        return out;
      }
    }
    if (c == '\\') {
      advance();
      const char e = cur();
      switch (e) {
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 't': out += '\t'; break;
        case '\'': out += '\''; break;
        default: {
          Token t;
          t.line = line_;
          t.column = column_;
          t.text = std::string("\\") + e;
          fail(t, "unsupported escape sequence");
        }
      }
      advance();
      continue;
    }
    out += c;
    advance();
  }
}

Token Lexer::scan() {
  skip_space_and_comments();
  Token t;
  t.line = line_;
  t.column = column_;
  const char c = cur();
  if (pos_ >= src_.size()) {
    t.kind = Tok::End;
    return t;
  }
  auto single = [&](Tok kind) {
    t.kind = kind;
    t.text = std::string(1, c);
    advance();
    return t;
  };
  switch (c) {
    case '.': return single(Tok::Dot);
    case ',': return single(Tok::Comma);
    case ';': return single(Tok::Semicolon);
    case '(': return single(Tok::LParen);
    case ')': return single(Tok::RParen);
    case '{': return single(Tok::LBrace);
    case '}': return single(Tok::RBrace);
    case '[': return single(Tok::LBracket);
    case ']': return single(Tok::RBracket);
    case '*': return single(Tok::Star);
    default: break;
  }
  if (c == '<') {
    advance();
    std::string iri;
    while (pos_ < src_.size() && cur() != '>') {
      if (std::isspace(static_cast<unsigned char>(cur()))) {
        t.text = "<" + iri;
        fail(t, "unterminated IRI");
      }
      iri += cur();
      advance();
    }
    if (pos_ >= src_.size()) {
      t.text = "<" + iri;
      fail(t, "unterminated IRI");
    }
    advance();
    t.kind = Tok::IriRef;
    t.text = std::move(iri);
    return t;
  }
  if (c == '"') {
    t.kind = Tok::String;
    t.text = read_string(t);
    return t;
  }
  if (c == '-' && ahead(1) == '>') {
    advance();
    advance();
    t.kind = Tok::Arrow;
    t.text = "->";
    return t;
  }
  if (c == '^' && ahead(1) == '^') {
    advance();
    advance();
    t.kind = Tok::DoubleCaret;
    t.text = "^^";
    return t;
  }
  if (c == '_' && ahead(1) == ':') {
    advance();
    advance();
    t.kind = Tok::Blank;
    t.text = read_name_chars();
    if (t.text.empty()) fail(t, "empty blank node label");
    return t;
  }
  if (c == '?') {
    advance();
    t.kind = Tok::Var;
    t.text = read_name_chars();
    if (t.text.empty()) fail(t, "empty variable name");
    return t;
  }
  if (c == '@') {
    advance();
    t.kind = Tok::AtWord;
    while (std::isalpha(static_cast<unsigned char>(cur())) || cur() == '-') {
      t.text += cur();
      advance();
    }
    return t;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    t.kind = Tok::Number;
    while (std::isdigit(static_cast<unsigned char>(cur()))) {
      t.text += cur();
      advance();
    }
    return t;
  }
  if (c == ':') {
    advance();
    t.kind = Tok::PName;
    t.local = read_name_chars();
    return t;
  }
  if (name_start(c)) {
    t.text = read_name_chars();
    if (cur() == ':') {
      advance();
      t.kind = Tok::PName;
      t.local = read_name_chars();
    } else {
      t.kind = Tok::Name;
    }
    return t;
  }
  t.text = std::string(1, c);
  fail(t, "unexpected character");
}

void Lexer::fail(const Token& at, std::string message) const {
  throw ParseError(at.line, at.column, std::move(message), at.spelling());
}

void Lexer::fail_here(std::string message) { fail(peek(), std::move(message)); }

const Token& Lexer::peek() {
  if (!lookahead_) lookahead_ = scan();
  return *lookahead_;
}

Token Lexer::next() {
  Token t = peek();
  lookahead_.reset();
  return t;
}

Token Lexer::expect(Tok kind, std::string_view what) {
  if (peek().kind != kind) fail_here("expected " + std::string(what));
  return next();
}

void Lexer::expect_name(std::string_view word) {
  if (!at_name(word)) fail_here("expected '" + std::string(word) + "'");
  next();
}

std::string resolve_iri(Lexer& lx, const Token& tok, const PrefixMap& prefixes,
                        bool allow_bare) {
  switch (tok.kind) {
    case Tok::IriRef:
      if (tok.text.empty()) lx.fail(tok, "empty IRI");
      return tok.text;
    case Tok::PName: {
      auto iri = prefixes.expand(tok.text, tok.local);
      if (!iri) lx.fail(tok, "undefined prefix '" + tok.text + ":'");
      if (tok.local.empty()) lx.fail(tok, "prefixed name without local part");
      return *iri;
    }
    case Tok::Name:
      if (allow_bare) {
        auto iri = prefixes.expand("", tok.text);
        if (!iri) lx.fail(tok, "bare name requires a ':' prefix declaration");
        return *iri;
      }
      [[fallthrough]];
    default:
      lx.fail(tok, "expected an IRI or prefixed name");
  }
}

void read_prefix_directive(Lexer& lx, PrefixMap& prefixes, bool sparql_style) {
  const Token name = lx.next();
  if (name.kind != Tok::PName || !name.local.empty()) {
    lx.fail(name, "expected a prefix label such as 'ex:'");
  }
  const Token iri = lx.expect(Tok::IriRef, "namespace IRI");
  prefixes.set(name.text, iri.text);
  if (!sparql_style) lx.expect(Tok::Dot, "'.' after @prefix directive");
}

}  // namespace swkg::detail
