#pragma once

// Shared fixtures and brute-force oracles. The oracles deliberately avoid the
// library's indexes and search code: they enumerate every assignment over the
// graph's term universe and test membership triple by triple.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "swkg/axioms.hpp"
#include "swkg/corpus.hpp"
#include "swkg/graph.hpp"
#include "swkg/query.hpp"
#include "swkg/turtle.hpp"
#include "swkg/validator.hpp"
#include "swkg/vocab.hpp"

namespace swkg::test {

inline const Corpus& corpus() {
  static const Corpus c = load_corpus();
  return c;
}

inline Term sw(const std::string& local) { return Term::iri(vocab::sw(local)); }
inline Term rdf_type() { return Term::iri(vocab::rdf_type()); }

// Parses Turtle with the default prefixes in scope.
inline Graph ttl(const std::string& text) {
  turtle::ParseOptions opts;
  opts.prefixes = default_prefixes();
  return turtle::parse(text, opts);
}

inline std::vector<Axiom> dlx(const std::string& text) {
  return parse_axioms(text, default_prefixes());
}

inline std::set<Term> universe(const Graph& g) {
  std::set<Term> u;
  for (const auto& t : g.triples()) {
    u.insert(t.subject);
    u.insert(t.predicate);
    u.insert(t.object);
  }
  return u;
}

inline std::set<Triple> triple_set(const Graph& g) {
  const auto ts = g.triples();
  return {ts.begin(), ts.end()};
}

inline Term resolve(const PatternTerm& p, const Binding& b) {
  if (const auto* v = std::get_if<Variable>(&p)) return b.at(v->name);
  return std::get<Term>(p);
}

// Every total assignment of the patterns' free variables over `terms` that
// extends `seed` and maps each pattern onto a member of `triples`. Variables
// are assigned in first-occurrence order; a pattern is checked once all of
// its variables are assigned.
inline std::vector<Binding> brute_force_matches(
    const std::set<Triple>& triples, const std::set<Term>& terms,
    const std::vector<TriplePattern>& patterns, const Binding& seed = {}) {
  std::vector<std::string> vars;
  auto note = [&](const PatternTerm& p) {
    const auto* v = std::get_if<Variable>(&p);
    if (v && !seed.count(v->name) &&
        std::find(vars.begin(), vars.end(), v->name) == vars.end()) {
      vars.push_back(v->name);
    }
  };
  for (const auto& p : patterns) {
    note(p.subject);
    note(p.predicate);
    note(p.object);
  }
  // ready[i]: patterns whose last free variable is vars[i-1] (ready[0]: ground).
  std::vector<std::vector<const TriplePattern*>> ready(vars.size() + 1);
  for (const auto& p : patterns) {
    std::size_t last = 0;
    for (const auto* pt : {&p.subject, &p.predicate, &p.object}) {
      const auto* v = std::get_if<Variable>(pt);
      if (!v || seed.count(v->name)) continue;
      const auto at = static_cast<std::size_t>(
          std::find(vars.begin(), vars.end(), v->name) - vars.begin());
      last = std::max(last, at + 1);
    }
    ready[last].push_back(&p);
  }
  std::vector<Term> pool(terms.begin(), terms.end());
  std::vector<Binding> out;
  Binding b = seed;
  auto holds = [&](std::size_t level) {
    for (const auto* p : ready[level]) {
      Triple t{resolve(p->subject, b), resolve(p->predicate, b),
               resolve(p->object, b)};
      if (!triples.count(t)) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == vars.size()) {
      out.push_back(b);
      return;
    }
    for (const auto& t : pool) {
      b.insert_or_assign(vars[i], t);
      if (holds(i + 1)) rec(i + 1);
    }
    b.erase(vars[i]);
  };
  if (holds(0)) rec(0);
  return out;
}

// Query oracle: distinct projected rows of all brute-force matches, sorted.
inline std::vector<std::vector<Term>> brute_force_query(
    const Graph& g, const ConjunctiveQuery& q) {
  std::set<std::vector<Term>> rows;
  for (const auto& b : brute_force_matches(triple_set(g), universe(g),
                                           q.patterns)) {
    std::vector<Term> row;
    for (const auto& v : q.projection) row.push_back(b.at(v));
    rows.insert(row);
  }
  return {rows.begin(), rows.end()};
}

// Isomorphism oracle: tries every injective map from a's nulls to b's nulls.
inline bool brute_force_isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  const auto na = a.nulls();
  auto nb = b.nulls();
  if (na.size() != nb.size()) return false;
  // Compare nulls by label only: origin is irrelevant to graph shape.
  auto key = [](const Term& t) { return t.lexical(); };
  std::sort(nb.begin(), nb.end());
  const auto target = triple_set(b);
  do {
    std::map<std::string, Term> m;
    for (std::size_t i = 0; i < na.size(); ++i) m.emplace(key(na[i]), nb[i]);
    auto map = [&](const Term& t) {
      return t.is_null() ? m.at(key(t)) : t;
    };
    bool ok = true;
    for (const auto& t : a.triples()) {
      if (!target.count({map(t.subject), map(t.predicate), map(t.object)})) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(nb.begin(), nb.end()));
  return false;
}

// Validator oracle for the closed reading. Supports Named<=Named,
// Some<=Named (scoped domain), Named<=All, Named<=Some, Named<=Max and
// Named<=Min(0). Saturation is a naive fixpoint over the triple set.
struct OracleFinding {
  std::string axiom;
  ViolationKind kind;
  Term focus;
  friend auto operator<=>(const OracleFinding& a, const OracleFinding& b) {
    if (auto c = a.axiom <=> b.axiom; c != 0) return c;
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.focus <=> b.focus;
  }
  friend bool operator==(const OracleFinding&, const OracleFinding&) = default;
};

inline std::vector<Term> oracle_successors(const std::set<Triple>& g,
                                           const Term& x,
                                           const PropertyRef& p) {
  std::set<Term> out;
  const Term prop = Term::iri(p.iri);
  for (const auto& t : g) {
    if (t.predicate != prop) continue;
    if (!p.inverse && t.subject == x) out.insert(t.object);
    if (p.inverse && t.object == x) out.insert(t.subject);
  }
  return {out.begin(), out.end()};
}

inline std::set<OracleFinding> brute_force_validate(
    const Graph& graph, const std::vector<Axiom>& axioms) {
  auto g = triple_set(graph);
  const Term type = rdf_type();
  auto typed = [&](const Term& y, const std::string& c) {
    return g.count({y, type, Term::iri(c)}) != 0;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& a : axioms) {
      if (a.rhs.kind != ExprKind::Named) continue;
      const Term target = Term::iri(a.rhs.class_iri);
      std::vector<Term> add;
      if (a.lhs.kind == ExprKind::Named) {
        for (const auto& t : g) {
          if (t.predicate == type && t.object == Term::iri(a.lhs.class_iri)) {
            add.push_back(t.subject);
          }
        }
      } else if (a.lhs.kind == ExprKind::SomeValues) {
        const Term prop = Term::iri(a.lhs.property.iri);
        for (const auto& t : g) {
          if (t.predicate != prop) continue;
          const Term& x = a.lhs.property.inverse ? t.object : t.subject;
          const Term& y = a.lhs.property.inverse ? t.subject : t.object;
          if (typed(y, a.lhs.class_iri)) add.push_back(x);
        }
      }
      for (const auto& x : add) {
        if (x.is_literal()) continue;
        changed |= g.insert({x, type, target}).second;
      }
    }
  }
  std::set<OracleFinding> out;
  for (const auto& a : axioms) {
    if (a.lhs.kind != ExprKind::Named || a.rhs.kind == ExprKind::Named) continue;
    for (const auto& t : g) {
      if (t.predicate != type || t.object != Term::iri(a.lhs.class_iri)) continue;
      const Term& x = t.subject;
      const auto succ = oracle_successors(g, x, a.rhs.property);
      const auto n_typed = std::count_if(succ.begin(), succ.end(), [&](const Term& y) {
        return typed(y, a.rhs.class_iri);
      });
      switch (a.rhs.kind) {
        case ExprKind::AllValues:
          if (n_typed != static_cast<long>(succ.size())) {
            out.insert({a.id, ViolationKind::RangeBreach, x});
          }
          break;
        case ExprKind::SomeValues:
          if (n_typed == 0) out.insert({a.id, ViolationKind::MissingWitness, x});
          break;
        case ExprKind::MaxCard:
          if (n_typed > static_cast<long>(a.rhs.cardinality)) {
            out.insert({a.id, ViolationKind::CardinalityExceeded, x});
          }
          break;
        default:
          break;
      }
    }
  }
  return out;
}

inline std::set<OracleFinding> findings(const ValidationReport& r) {
  std::set<OracleFinding> out;
  for (const auto& v : r.violations) out.insert({v.axiom_id, v.kind, v.focus});
  return out;
}

}  // namespace swkg::test
