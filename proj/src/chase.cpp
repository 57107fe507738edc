#include "swkg/chase.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "swkg/vocab.hpp"

namespace swkg {

namespace {

Term instantiate(const PatternTerm& t, const Binding& b) {
  if (const auto* v = std::get_if<Variable>(&t)) return b.at(v->name);
  return std::get<Term>(t);
}

struct PreparedRule {
  const ExistentialRule* rule;
  std::vector<TriplePattern> body;
  std::vector<TriplePattern> head;
};

// True when the head would put a literal in subject position.
bool literal_subject(const std::vector<TriplePattern>& head,
                     const Binding& binding) {
  return std::any_of(head.begin(), head.end(), [&](const TriplePattern& p) {
    const auto* v = std::get_if<Variable>(&p.subject);
    if (!v) return false;
    auto it = binding.find(v->name);
    return it != binding.end() && it->second.is_literal();
  });
}

ChaseResult run_chase(Graph& graph, const std::vector<ExistentialRule>& rules,
                      std::size_t max_rounds) {
  std::vector<PreparedRule> prepared;
  prepared.reserve(rules.size());
  for (const auto& r : rules) {
    check_rule(r);
    prepared.push_back({&r, to_patterns(r.body), to_patterns(r.head)});
  }
  std::stable_sort(prepared.begin(), prepared.end(),
                   [](const PreparedRule& a, const PreparedRule& b) {
                     return a.rule->id < b.rule->id;
                   });

  ChaseResult result;
  for (std::size_t round = 1; round <= max_rounds; ++round) {
    result.rounds = round;
    std::vector<std::pair<const PreparedRule*, Binding>> triggers;
    for (const auto& pr : prepared) {
      std::vector<Binding> matches;
      for_each_homomorphism(graph, pr.body, {}, [&](const Binding& b) {
        matches.push_back(b);
        return true;
      });
      std::sort(matches.begin(), matches.end());
      for (auto& m : matches) triggers.emplace_back(&pr, std::move(m));
    }

    std::size_t fired = 0;
    for (auto& [pr, binding] : triggers) {
      // Restricted chase: skip triggers whose head is already satisfied.
      if (has_homomorphism(graph, pr->head, binding)) continue;
      if (literal_subject(pr->head, binding)) continue;
      Binding extended = binding;
      for (const auto& v : pr->rule->existentials) {
        extended.insert_or_assign(v, graph.fresh_null());
        ++result.nulls_created;
      }
      for (const auto& p : pr->head) {
        Triple t{instantiate(p.subject, extended),
                 instantiate(p.predicate, extended),
                 instantiate(p.object, extended)};
        if (graph.insert(t)) result.added.push_back(std::move(t));
      }
      ++fired;
    }
    result.firings += fired;
    if (fired == 0) {
      result.terminated = true;
      break;
    }
  }
  return result;
}

}  // namespace

ChaseResult saturate(Graph& graph, const std::vector<ExistentialRule>& rules) {
  for (const auto& r : rules) {
    if (!r.is_datalog()) {
      throw std::invalid_argument("saturate: rule " + r.id +
                                  " has existential variables");
    }
  }
  // Datalog saturation cannot mint terms, so it terminates on its own.
  return run_chase(graph, rules, std::numeric_limits<std::size_t>::max());
}

ChaseResult chase(Graph& graph, const std::vector<ExistentialRule>& rules,
                  std::size_t max_rounds) {
  if (max_rounds == 0) {
    throw std::invalid_argument("chase: max_rounds must be at least 1");
  }
  return run_chase(graph, rules, max_rounds);
}

ChainVocabulary ChainVocabulary::space_weather() {
  return {vocab::sw("requiresResponse"), vocab::sw("hasFirstResponse"),
          vocab::sw("hasNextResponse")};
}

namespace {

std::vector<Term> objects(const Graph& g, const Term& s,
                          const std::string& property) {
  std::vector<Term> out;
  auto sid = g.find(s);
  auto pid = g.find(Term::iri(property));
  if (!sid || !pid) return out;
  g.scan(sid, pid, std::nullopt, [&](const IdTriple& t) {
    out.push_back(g.term(t[2]));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Term> single(const Graph& g, const Term& s,
                           const std::string& property) {
  auto os = objects(g, s, property);
  if (os.empty()) return std::nullopt;
  if (os.size() > 1) {
    throw ChainError("branching: " + s.lexical() + " has " +
                     std::to_string(os.size()) + " <" + property +
                     "> successors");
  }
  return os.front();
}

}  // namespace

std::vector<Term> response_chain(const Graph& graph, const Term& solar_event,
                                 const ChainVocabulary& vocab) {
  if (!graph.find(solar_event)) {
    throw ChainError(solar_event.lexical() + " does not occur in the graph");
  }
  std::vector<Term> chain;
  auto sequence = single(graph, solar_event, vocab.requires_response);
  if (!sequence) return chain;
  auto current = single(graph, *sequence, vocab.has_first_response);
  std::set<Term> seen;
  while (current) {
    if (!seen.insert(*current).second) {
      throw ChainError("cycle: " + current->lexical() +
                       " is revisited along <" + vocab.has_next_response +
                       ">");
    }
    chain.push_back(*current);
    current = single(graph, *current, vocab.has_next_response);
  }
  return chain;
}

}  // namespace swkg
