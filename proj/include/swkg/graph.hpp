#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "swkg/term.hpp"

namespace swkg {

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Throws StructuralError for a literal/ill-typed subject or a non-IRI
// predicate.
void check_triple(const Triple& t);

// prefix -> namespace IRI.
class PrefixMap {
 public:
  void set(std::string prefix, std::string ns) {
    map_[std::move(prefix)] = std::move(ns);
  }
  std::optional<std::string> expand(std::string_view prefix,
                                    std::string_view local) const;
  bool contains(std::string_view prefix) const {
    return map_.find(std::string(prefix)) != map_.end();
  }
  // Longest-namespace compaction to `prefix:local`, if the local part is a
  // plain name.
  std::optional<std::string> compact(std::string_view iri) const;
  void merge(const PrefixMap& other);
  const std::map<std::string, std::string>& entries() const { return map_; }
  bool empty() const { return map_.empty(); }

 private:
  std::map<std::string, std::string> map_;
};

// The standard rdf/rdfs/owl/xsd prefixes plus `:` bound to the corpus
// namespace.
PrefixMap default_prefixes();

struct Variable {
  std::string name;
  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

using PatternTerm = std::variant<Term, Variable>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;

  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

// Throws StructuralError when the predicate position holds a literal or null.
void check_pattern(const TriplePattern& p);
std::vector<std::string> pattern_variables(std::span<const TriplePattern> ps);

// Variable name -> bound term. std::map keeps bindings comparable and ordered.
using Binding = std::map<std::string, Term>;

using TermId = std::uint32_t;
using IdTriple = std::array<TermId, 3>;

// Duplicate-free triple set with SPO/POS/OSP indexes over an interned term
// dictionary. Single writer; concurrent readers are fine once mutation stops.
class Graph {
 public:
  // Returns true iff the triple was absent.
  bool insert(const Triple& t);
  bool insert(Term s, Term p, Term o) {
    return insert(Triple{std::move(s), std::move(p), std::move(o)});
  }
  bool contains(const Triple& t) const;
  std::size_t size() const { return spo_.size(); }
  bool empty() const { return spo_.empty(); }

  // All triples sorted by (subject, predicate, object) lexical form.
  std::vector<Triple> triples() const;
  // Distinct nulls occurring in the graph, sorted.
  std::vector<Term> nulls() const;

  PrefixMap& prefixes() { return prefixes_; }
  const PrefixMap& prefixes() const { return prefixes_; }

  // A chase-generated null not occurring in the graph and never returned
  // before by this graph.
  Term fresh_null();
  // A parsed-blank null with the same freshness guarantee.
  Term fresh_blank();

  // Bindings of the pattern's variables, sorted.
  std::vector<Binding> match(const TriplePattern& pattern) const;

  // Adds every triple of `other`, renaming its nulls to fresh ones of the same
  // origin. Prefixes are merged.
  void merge(const Graph& other);

  std::optional<TermId> find(const Term& t) const;
  const Term& term(TermId id) const { return terms_[id]; }

  // Calls `fn` for every stored triple matching the bound positions; stops
  // early when `fn` returns false.
  void scan(std::optional<TermId> s, std::optional<TermId> p,
            std::optional<TermId> o,
            const std::function<bool(const IdTriple&)>& fn) const;

 private:
  TermId intern(const Term& t);
  bool contains_id(const IdTriple& t) const { return spo_.count(t) != 0; }

  std::vector<Term> terms_;
  std::unordered_map<Term, TermId> ids_;
  std::set<IdTriple> spo_, pos_, osp_;
  PrefixMap prefixes_;
  std::uint64_t null_counter_ = 0;
  std::uint64_t blank_counter_ = 0;
};

// Enumerates every extension of `seed` that maps all patterns into `graph`.
// The callback returns false to stop the enumeration.
void for_each_homomorphism(const Graph& graph,
                           std::span<const TriplePattern> patterns,
                           const Binding& seed,
                           const std::function<bool(const Binding&)>& fn);

bool has_homomorphism(const Graph& graph,
                      std::span<const TriplePattern> patterns,
                      const Binding& seed);

// True iff some bijection between the graphs' nulls maps one triple set onto
// the other exactly. Exhaustive search; corpus graphs hold few nulls.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace swkg
