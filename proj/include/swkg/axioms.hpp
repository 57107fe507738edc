#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swkg/graph.hpp"
#include "swkg/parse_error.hpp"
#include "swkg/rules.hpp"

namespace swkg {

struct PropertyRef {
  std::string iri;
  bool inverse = false;
  friend bool operator==(const PropertyRef&, const PropertyRef&) = default;
  friend auto operator<=>(const PropertyRef&, const PropertyRef&) = default;
};

enum class ExprKind : std::uint8_t { Named, AllValues, SomeValues, MinCard, MaxCard };

std::string_view to_string(ExprKind kind);

// Named(class) or a restriction `property <op> filler` whose filler is always
// a named class.
struct ClassExpr {
  ExprKind kind = ExprKind::Named;
  std::string class_iri;  // the named class, or the filler of a restriction
  PropertyRef property;   // unused for Named
  unsigned cardinality = 0;

  static ClassExpr named(std::string iri) {
    return {ExprKind::Named, std::move(iri), {}, 0};
  }
  static ClassExpr all(PropertyRef p, std::string filler) {
    return {ExprKind::AllValues, std::move(filler), std::move(p), 0};
  }
  static ClassExpr some(PropertyRef p, std::string filler) {
    return {ExprKind::SomeValues, std::move(filler), std::move(p), 0};
  }
  static ClassExpr min(unsigned n, PropertyRef p, std::string filler) {
    return {ExprKind::MinCard, std::move(filler), std::move(p), n};
  }
  static ClassExpr max(unsigned n, PropertyRef p, std::string filler) {
    return {ExprKind::MaxCard, std::move(filler), std::move(p), n};
  }

  friend bool operator==(const ClassExpr&, const ClassExpr&) = default;
  friend auto operator<=>(const ClassExpr&, const ClassExpr&) = default;
};

using Annotation = std::pair<std::string, Term>;

// lhs SubClassOf rhs.
struct Axiom {
  std::string id;
  ClassExpr lhs;
  ClassExpr rhs;
  std::vector<Annotation> annotations;

  friend bool operator==(const Axiom&, const Axiom&) = default;
};

// Shape signature used by structure-preservation checks, e.g.
// "Named<=SomeValues".
std::string shape_of(const Axiom& axiom);

// Reads the line-oriented axiom format (`.dlx`):
//
//   @prefix : <https://example.org/ns#> .
//   dt-03: DataTransformation SubClassOf occursInCE some ComputationalEnvironment
//   dt-19: Data SubClassOf inverse performsInputRole max 1 InputRole
//   dt-01.sa: A SubClassOf B ; opla:reusesPatternAsTemplate :SomePattern
//
// `#` starts a comment. Restrictions use `only`, `some`, `min n`, `max n`,
// with an optional leading `inverse`. Bare names resolve against `:`.
// Annotations follow `;` as `property value` pairs.
std::vector<Axiom> parse_axioms(std::string_view text,
                                const PrefixMap& prefixes = {});

// Writes axioms back in the same format; prefixes are used for compaction and
// emitted as directives. parse_axioms(format_axioms(a, p), p) == a.
std::string format_axioms(const std::vector<Axiom>& axioms,
                          const PrefixMap& prefixes);

// Class/property renaming that turns a pattern into a module.
struct RenameMap {
  std::map<std::string, std::string> mapping;
  std::string source_pattern;   // IRI of the pattern being instantiated
  std::string module_suffix;    // appended to axiom ids as ".<suffix>"
  std::string annotation_property;  // defaults to opla:reusesPatternAsTemplate

  // Throws std::invalid_argument when two keys share a target.
  void check_injective() const;
};

// Reads a rename-map file:
//
//   @prefix : <...> .
//   @pattern :DataTransformationPattern .
//   @suffix sa .
//   @annotation opla:reusesPatternAsTemplate .   # optional
//   DataTransformation -> SimulationActivity
RenameMap parse_rename_map(std::string_view text,
                           const PrefixMap& prefixes = {});

// Replaces every mapped IRI, suffixes ids, and adds the source-pattern
// annotation. Throws std::invalid_argument for a non-injective map.
std::vector<Axiom> instantiate_template(const std::vector<Axiom>& axioms,
                                        const RenameMap& map);

// A scoped-range check: x:cls, R(x,y) => y:filler.
struct RangeConstraint {
  std::string axiom_id;
  std::string cls;
  PropertyRef property;
  std::string filler;
};

// x:cls => some R-successor typed filler (closed-world check) and the
// matching generating rule for materialization.
struct ExistenceConstraint {
  std::string axiom_id;
  std::string cls;
  PropertyRef property;
  std::string filler;
};

// x:cls => at most `max` distinct R-successors typed filler.
struct CardinalityConstraint {
  std::string axiom_id;
  std::string cls;
  PropertyRef property;
  std::string filler;
  unsigned max = 0;
};

struct InformationalNote {
  std::string axiom_id;
  std::string message;
};

struct CompiledTheory {
  std::vector<ExistentialRule> inference_rules;
  std::vector<ExistentialRule> generating_rules;
  std::vector<RangeConstraint> ranges;
  std::vector<ExistenceConstraint> existentials;
  std::vector<CardinalityConstraint> cardinalities;
  std::vector<InformationalNote> informational;

  // Every axiom id that produced some compiled item, in compile order.
  std::vector<std::string> axiom_ids() const;
};

// Classifies every axiom by shape. Throws std::invalid_argument for shapes
// outside the supported set.
CompiledTheory compile(const std::vector<Axiom>& axioms);

}  // namespace swkg
