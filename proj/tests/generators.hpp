#pragma once

// Seeded random graphs, queries, axioms, and rules for property tests.
// Generated rules are terminating by construction: existential heads only use
// properties (r, s) and a class (D) that never occur in a rule body.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "support.hpp"
#include "swkg/rules.hpp"

namespace swkg::test {

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  std::mt19937& rng() { return rng_; }

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

  Term node() { return sw("n" + std::to_string(uniform(0, 7))); }
  Term cls() { return sw("C" + std::to_string(uniform(0, 2))); }
  Term prop() { return sw("p" + std::to_string(uniform(0, 2))); }
  Term literal() {
    static const std::vector<std::string> lex{
        "l0", "l1", "with \"quotes\"", "two\nlines", "tab\tand \\ slash",
        "caf\xc3\xa9"};
    return Term::literal(pick(lex));
  }

  Graph graph(int n) { return build(n, {}); }

  Graph graph_with_nulls(int n, int nulls) {
    std::vector<Term> extra;
    for (int i = 0; i < nulls; ++i) {
      extra.push_back(Term::null("b" + std::to_string(i + 1), NullOrigin::ParsedBlank));
    }
    return build(n, extra);
  }

  // Same graph with nulls consistently renamed in a random order.
  Graph relabel(const Graph& g) {
    auto nulls = g.nulls();
    std::vector<int> ids(nulls.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    std::shuffle(ids.begin(), ids.end(), rng_);
    std::map<Term, Term> m;
    for (std::size_t i = 0; i < nulls.size(); ++i) {
      m.emplace(nulls[i], Term::null("b" + std::to_string(100 + ids[i]),
                                     NullOrigin::ParsedBlank));
    }
    auto map = [&](const Term& t) { return t.is_null() ? m.at(t) : t; };
    Graph out;
    for (const auto& t : g.triples()) {
      out.insert(map(t.subject), t.predicate, map(t.object));
    }
    return out;
  }

  // Replaces one triple, reusing the graph's own nulls.
  Graph perturb(const Graph& g) {
    auto ts = g.triples();
    if (ts.empty()) return g;
    ts.erase(ts.begin() + uniform(0, static_cast<int>(ts.size()) - 1));
    const auto nulls = g.nulls();
    auto any = [&]() {
      return (!nulls.empty() && uniform(0, 1)) ? pick(nulls) : node();
    };
    Graph out;
    for (const auto& t : ts) out.insert(t);
    out.insert(any(), prop(), any());
    return out;
  }

  // 1-4 triple patterns over variables ?a..?d and the graph vocabulary.
  ConjunctiveQuery query(int patterns) {
    static const std::vector<std::string> vars{"a", "b", "c", "d"};
    std::string where;
    std::vector<std::string> used;
    auto var = [&]() {
      const auto& v = pick(vars);
      if (std::find(used.begin(), used.end(), v) == used.end()) used.push_back(v);
      return "?" + v;
    };
    for (int i = 0; i < patterns; ++i) {
      const bool typed = uniform(0, 3) == 0;
      std::string s = uniform(0, 9) < 7 ? var() : compact(node());
      std::string p = typed ? "a" : (uniform(0, 9) < 2 ? var() : compact(prop()));
      std::string o;
      if (typed) {
        o = uniform(0, 1) ? var() : compact(cls());
      } else {
        const int r = uniform(0, 9);
        o = r < 6 ? var() : r < 9 ? compact(node()) : "\"l0\"";
      }
      where += s + " " + p + " " + o + " . ";
    }
    if (used.empty()) {
      where += "?a a ?b . ";
      used = {"a", "b"};
    }
    std::string select;
    for (const auto& v : used) {
      if (select.empty() || uniform(0, 2) != 0) select += " ?" + v;
    }
    return parse_query("SELECT" + select + " WHERE { " + where + "}",
                       default_prefixes());
  }

  // Nodes x0..x5 typed with A/B/C and linked by p/q, plus a few literals.
  Graph typed_graph(int n) {
    static const std::vector<std::string> classes{"A", "B", "C"};
    static const std::vector<std::string> props{"p", "q"};
    Graph g;
    for (int i = 0; i < n * 4 && static_cast<int>(g.size()) < n; ++i) {
      const Term x = sw("x" + std::to_string(uniform(0, 5)));
      if (uniform(0, 1)) {
        g.insert(x, rdf_type(), sw(pick(classes)));
      } else {
        const Term o = uniform(0, 9) == 0 ? Term::literal("v")
                                          : sw("x" + std::to_string(uniform(0, 5)));
        g.insert(x, sw(pick(props)), o);
      }
    }
    return g;
  }

  // One axiom of a supported shape over A/B/C and p/q.
  Axiom axiom(const std::string& id) {
    static const std::vector<std::string> classes{"A", "B", "C"};
    const std::string a = pick(classes), b = pick(classes);
    const std::string p = std::string(uniform(0, 2) == 0 ? "inverse " : "") +
                          (uniform(0, 1) ? "p" : "q");
    std::string text;
    switch (uniform(0, 4)) {
      case 0: text = a + " SubClassOf " + b; break;
      case 1: text = p + " some " + b + " SubClassOf " + a; break;
      case 2: text = a + " SubClassOf " + p + " only " + b; break;
      case 3: text = a + " SubClassOf " + p + " some " + b; break;
      default:
        text = a + " SubClassOf " + p + " max " + std::to_string(uniform(0, 1)) +
               " " + b;
        break;
    }
    return dlx(id + ": " + text).front();
  }

  std::vector<ExistentialRule> rules(int n) {
    std::string text;
    for (int i = 0; i < n; ++i) {
      text += "g" + std::to_string(i) + ": " +
              (uniform(0, 1) ? datalog_body_head() : existential_body_head()) + "\n";
    }
    return parse_rules(text, default_prefixes());
  }

  std::vector<ExistentialRule> datalog_rules(int n) {
    std::string text;
    for (int i = 0; i < n; ++i) {
      text += "d" + std::to_string(i) + ": " + datalog_body_head() + "\n";
    }
    return parse_rules(text, default_prefixes());
  }

 private:
  Graph build(int n, const std::vector<Term>& extra) {
    Graph g;
    auto subject = [&]() {
      return (!extra.empty() && uniform(0, 2) == 0) ? pick(extra) : node();
    };
    for (int i = 0; i < n * 4 && static_cast<int>(g.size()) < n; ++i) {
      const int r = uniform(0, 9);
      if (r < 3) {
        g.insert(subject(), rdf_type(), cls());
      } else if (r < 8) {
        g.insert(subject(), prop(), subject());
      } else {
        g.insert(subject(), prop(), literal());
      }
    }
    return g;
  }

  static std::string compact(const Term& t) {
    return default_prefixes().compact(t.value()).value();
  }

  std::string c() { return std::string(1, static_cast<char>('A' + uniform(0, 2))); }
  std::string pq() { return uniform(0, 1) ? "p" : "q"; }

  std::string datalog_body_head() {
    switch (uniform(0, 3)) {
      case 0: return "type(x, " + c() + ") -> type(x, " + c() + ") .";
      case 1: return pq() + "(x, y) -> type(y, " + c() + ") .";
      case 2:
        return pq() + "(x, y), type(y, " + c() + ") -> type(x, " + c() + ") .";
      default: return pq() + "(x, y) -> " + pq() + "(y, x) .";
    }
  }

  std::string existential_body_head() {
    switch (uniform(0, 2)) {
      case 0: return "type(x, " + c() + ") -> exists z . r(x, z), type(z, D) .";
      case 1:
        return pq() + "(x, y), type(y, " + c() + ") -> exists z . r(y, z) .";
      default:
        return "type(x, " + c() + ") -> exists z, w . r(x, z), s(z, w), type(w, D) .";
    }
  }

  std::mt19937 rng_;
};

}  // namespace swkg::test
