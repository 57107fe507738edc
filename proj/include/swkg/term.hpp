#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace swkg {

enum class TermKind : std::uint8_t { Iri, Literal, Null };

// Parsed blank nodes are labelled `_:b<k>`, chase-generated nulls `_:n<k>`.
enum class NullOrigin : std::uint8_t { ParsedBlank, ChaseGenerated };

// Raised when a term or triple violates its structural invariants.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An RDF term: IRI, literal, or labelled null. Terms order by their
// N-Triples-style lexical form so every iteration in the toolkit is
// reproducible.
class Term {
 public:
  static Term iri(std::string value);
  static Term literal(std::string lexical, std::string datatype = {});
  static Term null(std::string id, NullOrigin origin);

  TermKind kind() const { return kind_; }
  bool is_iri() const { return kind_ == TermKind::Iri; }
  bool is_literal() const { return kind_ == TermKind::Literal; }
  bool is_null() const { return kind_ == TermKind::Null; }

  // IRI string, literal lexical form, or null identifier.
  const std::string& value() const { return value_; }
  // Datatype IRI for literals; empty otherwise.
  const std::string& datatype() const { return datatype_; }
  NullOrigin origin() const { return origin_; }

  // `<iri>`, `"lex"` / `"lex"^^<dt>`, or `_:id`.
  const std::string& lexical() const { return key_; }

  friend bool operator==(const Term& a, const Term& b) {
    return a.key_ == b.key_ && a.origin_ == b.origin_;
  }
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (auto c = a.key_ <=> b.key_; c != 0) return c;
    return a.origin_ <=> b.origin_;
  }

 private:
  Term(TermKind kind, std::string value, std::string datatype,
       NullOrigin origin);

  TermKind kind_;
  NullOrigin origin_ = NullOrigin::ParsedBlank;
  std::string value_;
  std::string datatype_;
  std::string key_;
};

// Escapes a literal lexical form for N-Triples/Turtle short strings.
std::string escape_string(std::string_view raw);

}  // namespace swkg

template <>
struct std::hash<swkg::Term> {
  std::size_t operator()(const swkg::Term& t) const noexcept {
    return std::hash<std::string>{}(t.lexical()) ^
           static_cast<std::size_t>(t.origin());
  }
};
