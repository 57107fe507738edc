#include "swkg/graph.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "swkg/vocab.hpp"

namespace swkg {

void check_triple(const Triple& t) {
  if (t.subject.is_literal()) {
    throw StructuralError("literal in subject position: " +
                          t.subject.lexical());
  }
  if (!t.predicate.is_iri()) {
    throw StructuralError("predicate must be an IRI: " +
                          t.predicate.lexical());
  }
}

void check_pattern(const TriplePattern& p) {
  if (const auto* t = std::get_if<Term>(&p.predicate); t && !t->is_iri()) {
    throw StructuralError("pattern predicate must be an IRI or variable: " +
                          t->lexical());
  }
  if (const auto* t = std::get_if<Term>(&p.subject); t && t->is_literal()) {
    throw StructuralError("literal in pattern subject: " + t->lexical());
  }
}

std::vector<std::string> pattern_variables(std::span<const TriplePattern> ps) {
  std::vector<std::string> out;
  auto add = [&](const PatternTerm& pt) {
    if (const auto* v = std::get_if<Variable>(&pt)) {
      if (std::find(out.begin(), out.end(), v->name) == out.end()) {
        out.push_back(v->name);
      }
    }
  };
  for (const auto& p : ps) {
    add(p.subject);
    add(p.predicate);
    add(p.object);
  }
  return out;
}

// ---------------------------------------------------------------------------
// PrefixMap

namespace {

bool is_local_name(std::string_view s) {
  if (s.empty() || s.front() == '-' || s.front() == '.' || s.back() == '.') {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c == '.';
  });
}

}  // namespace

std::optional<std::string> PrefixMap::expand(std::string_view prefix,
                                             std::string_view local) const {
  auto it = map_.find(std::string(prefix));
  if (it == map_.end()) return std::nullopt;
  return it->second + std::string(local);
}

std::optional<std::string> PrefixMap::compact(std::string_view iri) const {
  const std::pair<const std::string, std::string>* best = nullptr;
  for (const auto& entry : map_) {
    const auto& ns = entry.second;
    if (ns.size() < iri.size() && iri.substr(0, ns.size()) == ns &&
        is_local_name(iri.substr(ns.size())) &&
        (best == nullptr || ns.size() > best->second.size())) {
      best = &entry;
    }
  }
  if (best == nullptr) return std::nullopt;
  return best->first + ":" + std::string(iri.substr(best->second.size()));
}

void PrefixMap::merge(const PrefixMap& other) {
  for (const auto& [p, ns] : other.map_) map_.emplace(p, ns);
}

PrefixMap default_prefixes() {
  PrefixMap m;
  m.set("rdf", std::string(vocab::kRdf));
  m.set("rdfs", std::string(vocab::kRdfs));
  m.set("owl", std::string(vocab::kOwl));
  m.set("xsd", std::string(vocab::kXsd));
  m.set("opla", std::string(vocab::kOpla));
  m.set("", std::string(vocab::kSpaceWeather));
  return m;
}

// ---------------------------------------------------------------------------
// Graph

TermId Graph::intern(const Term& t) {
  if (auto it = ids_.find(t); it != ids_.end()) return it->second;
  if (t.is_null()) {
    const auto other = t.origin() == NullOrigin::ParsedBlank
                           ? NullOrigin::ChaseGenerated
                           : NullOrigin::ParsedBlank;
    if (ids_.count(Term::null(t.value(), other)) != 0) {
      throw StructuralError("null identifier reused across origins: " +
                            t.lexical());
    }
  }
  const auto id = static_cast<TermId>(terms_.size());
  terms_.push_back(t);
  ids_.emplace(t, id);
  return id;
}

std::optional<TermId> Graph::find(const Term& t) const {
  if (auto it = ids_.find(t); it != ids_.end()) return it->second;
  return std::nullopt;
}

bool Graph::insert(const Triple& t) {
  check_triple(t);
  const IdTriple key{intern(t.subject), intern(t.predicate),
                     intern(t.object)};
  if (!spo_.insert(key).second) return false;
  pos_.insert({key[1], key[2], key[0]});
  osp_.insert({key[2], key[0], key[1]});
  return true;
}

bool Graph::contains(const Triple& t) const {
  auto s = find(t.subject);
  auto p = find(t.predicate);
  auto o = find(t.object);
  return s && p && o && contains_id({*s, *p, *o});
}

std::vector<Triple> Graph::triples() const {
  std::vector<Triple> out;
  out.reserve(spo_.size());
  for (const auto& [s, p, o] : spo_) {
    out.push_back({terms_[s], terms_[p], terms_[o]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Term> Graph::nulls() const {
  std::set<TermId> seen;
  for (const auto& [s, p, o] : spo_) {
    if (terms_[s].is_null()) seen.insert(s);
    if (terms_[o].is_null()) seen.insert(o);
  }
  std::vector<Term> out;
  for (auto id : seen) out.push_back(terms_[id]);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool null_id_taken(const std::unordered_map<Term, TermId>& ids,
                   const std::string& id) {
  return ids.count(Term::null(id, NullOrigin::ChaseGenerated)) != 0 ||
         ids.count(Term::null(id, NullOrigin::ParsedBlank)) != 0;
}

}  // namespace

Term Graph::fresh_null() {
  for (;;) {
    auto id = "n" + std::to_string(null_counter_++);
    if (!null_id_taken(ids_, id)) {
      return Term::null(std::move(id), NullOrigin::ChaseGenerated);
    }
  }
}

Term Graph::fresh_blank() {
  for (;;) {
    auto id = "b" + std::to_string(blank_counter_++);
    if (!null_id_taken(ids_, id)) {
      return Term::null(std::move(id), NullOrigin::ParsedBlank);
    }
  }
}

void Graph::merge(const Graph& other) {
  prefixes_.merge(other.prefixes_);
  std::map<Term, Term> renamed;
  auto map_term = [&](const Term& t) -> Term {
    if (!t.is_null()) return t;
    auto it = renamed.find(t);
    if (it == renamed.end()) {
      auto fresh = t.origin() == NullOrigin::ChaseGenerated ? fresh_null()
                                                            : fresh_blank();
      it = renamed.emplace(t, std::move(fresh)).first;
    }
    return it->second;
  };
  for (const auto& t : other.triples()) {
    insert(map_term(t.subject), t.predicate, map_term(t.object));
  }
}

void Graph::scan(std::optional<TermId> s, std::optional<TermId> p,
                 std::optional<TermId> o,
                 const std::function<bool(const IdTriple&)>& fn) const {
  constexpr TermId kMin = 0;
  constexpr TermId kMax = std::numeric_limits<TermId>::max();
  auto range = [&](const std::set<IdTriple>& index, std::optional<TermId> a,
                   std::optional<TermId> b, auto&& to_spo) {
    const IdTriple lo{a.value_or(kMin), b.value_or(kMin), kMin};
    const IdTriple hi{a.value_or(kMax), b.value_or(kMax), kMax};
    for (auto it = index.lower_bound(lo); it != index.end() && !(hi < *it);
         ++it) {
      const IdTriple spo = to_spo(*it);
      if ((s && spo[0] != *s) || (p && spo[1] != *p) || (o && spo[2] != *o)) {
        continue;
      }
      if (!fn(spo)) return;
    }
  };
  if (s) {
    // (s, p?, o?) via SPO; when only s and o are bound, use OSP.
    if (!p && o) {
      range(osp_, o, s, [](const IdTriple& t) {
        return IdTriple{t[1], t[2], t[0]};
      });
    } else {
      range(spo_, s, p, [](const IdTriple& t) { return t; });
    }
  } else if (p) {
    range(pos_, p, o, [](const IdTriple& t) {
      return IdTriple{t[2], t[0], t[1]};
    });
  } else if (o) {
    range(osp_, o, std::nullopt, [](const IdTriple& t) {
      return IdTriple{t[1], t[2], t[0]};
    });
  } else {
    for (const auto& t : spo_) {
      if (!fn(t)) return;
    }
  }
}

std::vector<Binding> Graph::match(const TriplePattern& pattern) const {
  std::vector<Binding> out;
  const std::array<TriplePattern, 1> ps{pattern};
  for_each_homomorphism(*this, ps, {}, [&](const Binding& b) {
    out.push_back(b);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphism search

namespace {

struct Slot {
  bool is_var = false;
  TermId id = 0;   // constant
  std::size_t var = 0;
};

class HomomorphismSearch {
 public:
  HomomorphismSearch(const Graph& g, std::span<const TriplePattern> patterns,
                     const Binding& seed,
                     const std::function<bool(const Binding&)>& fn)
      : graph_(g), fn_(fn) {
    names_ = pattern_variables(patterns);
    values_.assign(names_.size(), std::nullopt);
    for (const auto& [name, term] : seed) {
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) {
        passthrough_.emplace(name, term);
        continue;
      }
      auto id = graph_.find(term);
      if (!id) {
        feasible_ = false;
        return;
      }
      values_[static_cast<std::size_t>(it - names_.begin())] = *id;
    }
    for (const auto& p : patterns) {
      std::array<Slot, 3> slots;
      const PatternTerm* parts[3] = {&p.subject, &p.predicate, &p.object};
      for (int k = 0; k < 3; ++k) {
        if (const auto* v = std::get_if<Variable>(parts[k])) {
          slots[k].is_var = true;
          slots[k].var = static_cast<std::size_t>(
              std::find(names_.begin(), names_.end(), v->name) -
              names_.begin());
        } else {
          auto id = graph_.find(std::get<Term>(*parts[k]));
          if (!id) {
            feasible_ = false;
            return;
          }
          slots[k].id = *id;
        }
      }
      patterns_.push_back(slots);
    }
    done_.assign(patterns_.size(), false);
  }

  void run() {
    if (feasible_) search(0);
  }

 private:
  std::optional<TermId> resolve(const Slot& s) const {
    if (!s.is_var) return s.id;
    return values_[s.var];
  }

  std::size_t pick() const {
    std::size_t best = patterns_.size();
    int best_bound = -1;
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
      if (done_[i]) continue;
      int bound = 0;
      for (const auto& s : patterns_[i]) bound += resolve(s) ? 1 : 0;
      if (bound > best_bound) {
        best_bound = bound;
        best = i;
      }
    }
    return best;
  }

  void search(std::size_t depth) {
    if (stop_) return;
    if (depth == patterns_.size()) {
      emit();
      return;
    }
    const std::size_t i = pick();
    done_[i] = true;
    const auto& slots = patterns_[i];
    graph_.scan(resolve(slots[0]), resolve(slots[1]), resolve(slots[2]),
                [&](const IdTriple& t) {
                  std::array<std::size_t, 3> bound_here{};
                  std::size_t n_bound = 0;
                  bool ok = true;
                  for (int k = 0; k < 3 && ok; ++k) {
                    if (!slots[k].is_var) continue;
                    auto& v = values_[slots[k].var];
                    if (v) {
                      ok = *v == t[k];
                    } else {
                      v = t[k];
                      bound_here[n_bound++] = slots[k].var;
                    }
                  }
                  if (ok) search(depth + 1);
                  for (std::size_t k = 0; k < n_bound; ++k) {
                    values_[bound_here[k]].reset();
                  }
                  return !stop_;
                });
    done_[i] = false;
  }

  void emit() {
    Binding b = passthrough_;
    for (std::size_t v = 0; v < names_.size(); ++v) {
      // Unbound only when the variable never occurs (cannot happen) or the
      // pattern list is empty.
      if (values_[v]) b.insert_or_assign(names_[v], graph_.term(*values_[v]));
    }
    if (!fn_(b)) stop_ = true;
  }

  const Graph& graph_;
  const std::function<bool(const Binding&)>& fn_;
  std::vector<std::string> names_;
  std::vector<std::optional<TermId>> values_;
  std::vector<std::array<Slot, 3>> patterns_;
  std::vector<bool> done_;
  Binding passthrough_;
  bool feasible_ = true;
  bool stop_ = false;
};

}  // namespace

void for_each_homomorphism(const Graph& graph,
                           std::span<const TriplePattern> patterns,
                           const Binding& seed,
                           const std::function<bool(const Binding&)>& fn) {
  HomomorphismSearch search(graph, patterns, seed, fn);
  search.run();
}

bool has_homomorphism(const Graph& graph,
                      std::span<const TriplePattern> patterns,
                      const Binding& seed) {
  bool found = false;
  for_each_homomorphism(graph, patterns, seed, [&](const Binding&) {
    found = true;
    return false;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

using Signature = std::vector<std::string>;

// Structural fingerprint of a null: its incident edges with other nulls
// blanked out.
std::map<Term, Signature> null_signatures(const std::vector<Triple>& ts) {
  std::map<Term, Signature> sig;
  auto label = [](const Term& t) {
    return t.is_null() ? std::string("*") : t.lexical();
  };
  for (const auto& t : ts) {
    if (t.subject.is_null()) {
      sig[t.subject].push_back("s " + t.predicate.lexical() + " " +
                               label(t.object));
    }
    if (t.object.is_null()) {
      sig[t.object].push_back("o " + t.predicate.lexical() + " " +
                              label(t.subject));
    }
  }
  for (auto& [_, s] : sig) std::sort(s.begin(), s.end());
  return sig;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b)
      : a_triples_(a.triples()), b_triples_(b.triples()) {
    b_set_.insert(b_triples_.begin(), b_triples_.end());
    sig_a_ = null_signatures(a_triples_);
    sig_b_ = null_signatures(b_triples_);
    for (const auto& [n, _] : sig_a_) a_nulls_.push_back(n);
    for (const auto& [n, _] : sig_b_) b_nulls_.push_back(n);
    // Most constrained first.
    std::stable_sort(a_nulls_.begin(), a_nulls_.end(),
                     [&](const Term& x, const Term& y) {
                       return sig_a_[x].size() > sig_a_[y].size();
                     });
    for (std::size_t i = 0; i < a_triples_.size(); ++i) {
      const auto& t = a_triples_[i];
      if (t.subject.is_null()) touching_[t.subject].push_back(i);
      if (t.object.is_null() && t.object != t.subject) {
        touching_[t.object].push_back(i);
      }
    }
  }

  bool run() {
    if (a_triples_.size() != b_triples_.size() ||
        a_nulls_.size() != b_nulls_.size()) {
      return false;
    }
    for (const auto& t : a_triples_) {
      if (!t.subject.is_null() && !t.object.is_null() && !b_set_.count(t)) {
        return false;
      }
    }
    return assign(0);
  }

 private:
  std::optional<Term> mapped(const Term& t) const {
    if (!t.is_null()) return t;
    if (auto it = mapping_.find(t); it != mapping_.end()) return it->second;
    return std::nullopt;
  }

  bool consistent(const Term& n) const {
    auto it = touching_.find(n);
    if (it == touching_.end()) return true;
    for (auto i : it->second) {
      const auto& t = a_triples_[i];
      auto s = mapped(t.subject);
      auto o = mapped(t.object);
      if (s && o && !b_set_.count(Triple{*s, t.predicate, *o})) return false;
    }
    return true;
  }

  bool assign(std::size_t k) {
    if (k == a_nulls_.size()) return true;
    const Term& n = a_nulls_[k];
    for (const auto& candidate : b_nulls_) {
      if (used_.count(candidate) || sig_a_[n] != sig_b_[candidate]) continue;
      mapping_.emplace(n, candidate);
      used_.insert(candidate);
      if (consistent(n) && assign(k + 1)) return true;
      mapping_.erase(n);
      used_.erase(candidate);
    }
    return false;
  }

  std::vector<Triple> a_triples_, b_triples_;
  std::set<Triple> b_set_;
  std::map<Term, Signature> sig_a_, sig_b_;
  std::vector<Term> a_nulls_, b_nulls_;
  std::map<Term, std::vector<std::size_t>> touching_;
  std::map<Term, Term> mapping_;
  std::set<Term> used_;
};

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  return IsomorphismSearch(a, b).run();
}

}  // namespace swkg
