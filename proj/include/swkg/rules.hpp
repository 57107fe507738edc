#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "swkg/graph.hpp"
#include "swkg/parse_error.hpp"

namespace swkg {

struct PropertyAtom {
  std::string property;
  PatternTerm subject;
  PatternTerm object;
  friend bool operator==(const PropertyAtom&, const PropertyAtom&) = default;
};

struct TypeAtom {
  std::string class_iri;
  PatternTerm arg;
  friend bool operator==(const TypeAtom&, const TypeAtom&) = default;
};

using Atom = std::variant<PropertyAtom, TypeAtom>;

TriplePattern to_pattern(const Atom& atom);
std::vector<TriplePattern> to_patterns(const std::vector<Atom>& atoms);

// body -> exists existentials . head
//
// Rules without existential variables are plain datalog rules.
struct ExistentialRule {
  std::string id;
  std::vector<Atom> body;
  std::vector<Atom> head;
  std::vector<std::string> existentials;
  // Axiom id a compiled rule was derived from; empty for hand-written rules.
  std::string source;

  // Variables shared by body and head.
  std::vector<std::string> frontier() const;
  bool is_datalog() const { return existentials.empty(); }
};

// Throws StructuralError when the body is empty, an existential occurs in the
// body, or a head variable is neither frontier nor existential.
void check_rule(const ExistentialRule& rule);

// Reads the rule text format:
//
//   @prefix : <https://example.org/ns#> .
//   id: body-atom, ... -> exists v1, v2 . head-atom, ... .
//
// Atoms are `prop(a, b)` or `type(a, Class)`. Bare identifiers in argument
// positions are variables; prefixed names and <IRI>s are constants; quoted
// strings are literals. Bare property and class names resolve against `:`.
std::vector<ExistentialRule> parse_rules(std::string_view text,
                                         const PrefixMap& prefixes = {});

// Inverse of parse_rules for a single rule, fully expanded IRIs.
std::string format_rule(const ExistentialRule& rule);

}  // namespace swkg
