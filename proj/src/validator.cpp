#include "swkg/validator.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "swkg/chase.hpp"
#include "swkg/vocab.hpp"

namespace swkg {

ValidationMode parse_mode(std::string_view text) {
  if (text == "closed") return ValidationMode::Closed;
  if (text == "materialize-first") return ValidationMode::MaterializeFirst;
  throw std::invalid_argument("unknown validation mode '" + std::string(text) +
                              "' (expected closed or materialize-first)");
}

std::string_view to_string(ValidationMode mode) {
  return mode == ValidationMode::Closed ? "closed" : "materialize-first";
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::MissingWitness: return "missing-witness";
    case ViolationKind::RangeBreach: return "range-breach";
    case ViolationKind::CardinalityExceeded: return "cardinality-exceeded";
  }
  return "?";
}

namespace {

class Checker {
 public:
  explicit Checker(const Graph& g)
      : g_(g), type_(g.find(Term::iri(vocab::rdf_type()))) {}

  std::vector<Term> instances(const std::string& cls) {
    std::vector<Term> out;
    auto c = g_.find(Term::iri(cls));
    if (!type_ || !c) return out;
    g_.scan(std::nullopt, type_, c, [&](const IdTriple& t) {
      out.push_back(g_.term(t[0]));
      return true;
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  // Distinct R-successors (R^- predecessors when inverse), sorted.
  std::vector<Term> successors(const Term& x, const PropertyRef& p) {
    std::set<Term> out;
    auto xid = g_.find(x);
    auto pid = g_.find(Term::iri(p.iri));
    if (!xid || !pid) return {};
    if (p.inverse) {
      g_.scan(std::nullopt, pid, xid, [&](const IdTriple& t) {
        out.insert(g_.term(t[0]));
        return true;
      });
    } else {
      g_.scan(xid, pid, std::nullopt, [&](const IdTriple& t) {
        out.insert(g_.term(t[2]));
        return true;
      });
    }
    return {out.begin(), out.end()};
  }

  bool has_type(const Term& y, const std::string& cls) {
    if (y.is_literal()) return false;
    return g_.contains(
        Triple{y, Term::iri(vocab::rdf_type()), Term::iri(cls)});
  }

 private:
  const Graph& g_;
  std::optional<TermId> type_;
};

std::string describe(const PropertyRef& p) {
  return (p.inverse ? "inverse <" : "<") + p.iri + ">";
}

}  // namespace

ValidationReport validate(const Graph& graph, const CompiledTheory& theory,
                          ValidationMode mode) {
  ValidationReport report;
  report.info = theory.informational;

  Graph work = graph;
  if (mode == ValidationMode::MaterializeFirst) {
    std::vector<ExistentialRule> rules = theory.inference_rules;
    rules.insert(rules.end(), theory.generating_rules.begin(),
                 theory.generating_rules.end());
    const auto r = chase(work, rules, kDefaultMaxRounds);
    report.stats.derived = r.added.size();
    report.stats.nulls_created = r.nulls_created;
    if (!r.terminated) {
      report.info.push_back(
          {"", "materialization stopped at the round budget before "
               "reaching a fixpoint"});
    }
  } else {
    report.stats.derived = saturate(work, theory.inference_rules).added.size();
  }

  Checker check(work);
  std::set<Term> focus_nodes;
  auto add = [&](const std::string& id, ViolationKind kind, const Term& focus,
                 std::vector<Term> witnesses, std::string message) {
    report.violations.push_back(
        {id, kind, focus, std::move(witnesses), std::move(message)});
  };

  for (const auto& c : theory.ranges) {
    for (const auto& x : check.instances(c.cls)) {
      ++report.stats.checks;
      focus_nodes.insert(x);
      for (const auto& y : check.successors(x, c.property)) {
        if (check.has_type(y, c.filler)) continue;
        add(c.axiom_id, ViolationKind::RangeBreach, x, {y},
            y.lexical() + " reached via " + describe(c.property) +
                " is not typed <" + c.filler + ">");
      }
    }
  }
  if (mode == ValidationMode::Closed) {
    for (const auto& c : theory.existentials) {
      for (const auto& x : check.instances(c.cls)) {
        ++report.stats.checks;
        focus_nodes.insert(x);
        const auto succ = check.successors(x, c.property);
        const bool witnessed =
            std::any_of(succ.begin(), succ.end(), [&](const Term& y) {
              return check.has_type(y, c.filler);
            });
        if (!witnessed) {
          add(c.axiom_id, ViolationKind::MissingWitness, x, {},
              "no " + describe(c.property) + " successor typed <" +
                  c.filler + ">");
        }
      }
    }
  }
  for (const auto& c : theory.cardinalities) {
    for (const auto& x : check.instances(c.cls)) {
      ++report.stats.checks;
      focus_nodes.insert(x);
      std::vector<Term> typed;
      for (const auto& y : check.successors(x, c.property)) {
        if (check.has_type(y, c.filler)) typed.push_back(y);
      }
      if (typed.size() > c.max) {
        const auto n = typed.size();
        add(c.axiom_id, ViolationKind::CardinalityExceeded, x,
            std::move(typed),
            std::to_string(n) + " distinct " + describe(c.property) +
                " fillers typed <" + c.filler + ">, at most " +
                std::to_string(c.max) + " allowed");
      }
    }
  }

  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.axiom_id, a.focus, a.kind, a.witnesses) <
                     std::tie(b.axiom_id, b.focus, b.kind, b.witnesses);
            });
  report.stats.nodes = focus_nodes.size();
  report.conforms = report.violations.empty();
  return report;
}

}  // namespace swkg
