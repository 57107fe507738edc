#include "swkg/rules.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lexer.hpp"
#include "swkg/vocab.hpp"

namespace swkg {

using detail::Lexer;
using detail::Tok;
using detail::Token;

TriplePattern to_pattern(const Atom& atom) {
  if (const auto* p = std::get_if<PropertyAtom>(&atom)) {
    return {p->subject, Term::iri(p->property), p->object};
  }
  const auto& t = std::get<TypeAtom>(atom);
  return {t.arg, Term::iri(vocab::rdf_type()), Term::iri(t.class_iri)};
}

std::vector<TriplePattern> to_patterns(const std::vector<Atom>& atoms) {
  std::vector<TriplePattern> out;
  out.reserve(atoms.size());
  for (const auto& a : atoms) out.push_back(to_pattern(a));
  return out;
}

namespace {

std::vector<std::string> atom_variables(const std::vector<Atom>& atoms) {
  const auto ps = to_patterns(atoms);
  return pattern_variables(ps);
}

}  // namespace

std::vector<std::string> ExistentialRule::frontier() const {
  const auto b = atom_variables(body);
  std::vector<std::string> out;
  for (const auto& v : atom_variables(head)) {
    if (std::find(b.begin(), b.end(), v) != b.end()) out.push_back(v);
  }
  return out;
}

void check_rule(const ExistentialRule& rule) {
  if (rule.body.empty()) {
    throw StructuralError("rule " + rule.id + " has an empty body");
  }
  const auto b = atom_variables(rule.body);
  std::set<std::string> ex(rule.existentials.begin(), rule.existentials.end());
  if (ex.size() != rule.existentials.size()) {
    throw StructuralError("rule " + rule.id +
                          " declares an existential variable twice");
  }
  for (const auto& v : rule.existentials) {
    if (std::find(b.begin(), b.end(), v) != b.end()) {
      throw StructuralError("rule " + rule.id + ": existential variable '" +
                            v + "' also occurs in the body");
    }
  }
  for (const auto& v : atom_variables(rule.head)) {
    if (std::find(b.begin(), b.end(), v) == b.end() && !ex.count(v)) {
      throw StructuralError("rule " + rule.id + ": head variable '" + v +
                            "' is neither a body variable nor existential");
    }
  }
  for (const auto& p : to_patterns(rule.body)) check_pattern(p);
  for (const auto& p : to_patterns(rule.head)) check_pattern(p);
}

namespace {

class RuleParser {
 public:
  RuleParser(std::string_view text, const PrefixMap& prefixes)
      : lx_(text), prefixes_(prefixes) {}

  std::vector<ExistentialRule> run() {
    std::vector<ExistentialRule> rules;
    std::set<std::string> ids;
    while (!lx_.at(Tok::End)) {
      if (lx_.at(Tok::AtWord)) {
        const Token kw = lx_.next();
        if (kw.text != "prefix") lx_.fail(kw, "unknown directive");
        detail::read_prefix_directive(lx_, prefixes_, false);
        continue;
      }
      const Token start = lx_.peek();
      auto rule = read_rule();
      if (!ids.insert(rule.id).second) {
        lx_.fail(start, "duplicate rule id '" + rule.id + "'");
      }
      try {
        check_rule(rule);
      } catch (const StructuralError& e) {
        lx_.fail(start, e.what());
      }
      rules.push_back(std::move(rule));
    }
    return rules;
  }

 private:
  ExistentialRule read_rule() {
    ExistentialRule rule;
    const Token id = lx_.next();
    if (id.kind != Tok::PName || !id.local.empty() || id.text.empty()) {
      lx_.fail(id, "expected a rule label such as 'r1:'");
    }
    rule.id = id.text;
    rule.body = read_atoms();
    lx_.expect(Tok::Arrow, "'->'");
    if (lx_.at_name("exists")) {
      lx_.next();
      for (;;) {
        const Token v = lx_.next();
        if (v.kind != Tok::Name && v.kind != Tok::Var) {
          lx_.fail(v, "expected an existential variable name");
        }
        rule.existentials.push_back(v.text);
        if (!lx_.at(Tok::Comma)) break;
        lx_.next();
      }
      lx_.expect(Tok::Dot, "'.' after existential variable list");
    }
    rule.head = read_atoms();
    lx_.expect(Tok::Dot, "'.' at end of rule");
    return rule;
  }

  std::vector<Atom> read_atoms() {
    std::vector<Atom> atoms;
    for (;;) {
      atoms.push_back(read_atom());
      if (!lx_.at(Tok::Comma)) return atoms;
      lx_.next();
    }
  }

  Atom read_atom() {
    const Token pred = lx_.next();
    lx_.expect(Tok::LParen, "'(' after predicate name");
    PatternTerm first = read_arg();
    lx_.expect(Tok::Comma, "',' between atom arguments");
    if (pred.kind == Tok::Name && pred.text == "type") {
      const Token cls = lx_.next();
      const auto iri = detail::resolve_iri(lx_, cls, prefixes_, true);
      lx_.expect(Tok::RParen, "')'");
      return TypeAtom{iri, std::move(first)};
    }
    const auto iri = detail::resolve_iri(lx_, pred, prefixes_, true);
    PatternTerm second = read_arg();
    lx_.expect(Tok::RParen, "')'");
    return PropertyAtom{iri, std::move(first), std::move(second)};
  }

  PatternTerm read_arg() {
    const Token t = lx_.next();
    switch (t.kind) {
      case Tok::Name:
      case Tok::Var:
        return Variable{t.text};
      case Tok::IriRef:
      case Tok::PName:
        return Term::iri(detail::resolve_iri(lx_, t, prefixes_, false));
      case Tok::String:
        if (lx_.at(Tok::DoubleCaret)) {
          lx_.next();
          const Token dt = lx_.next();
          return Term::literal(t.text,
                               detail::resolve_iri(lx_, dt, prefixes_, false));
        }
        return Term::literal(t.text);
      default:
        lx_.fail(t, "expected a variable, constant, or string");
    }
  }

  Lexer lx_;
  PrefixMap prefixes_;
};

std::string format_arg(const PatternTerm& t) {
  if (const auto* v = std::get_if<Variable>(&t)) return v->name;
  return std::get<Term>(t).lexical();
}

std::string format_atoms(const std::vector<Atom>& atoms) {
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ", ";
    if (const auto* p = std::get_if<PropertyAtom>(&atoms[i])) {
      out += "<" + p->property + ">(" + format_arg(p->subject) + ", " +
             format_arg(p->object) + ")";
    } else {
      const auto& t = std::get<TypeAtom>(atoms[i]);
      out += "type(" + format_arg(t.arg) + ", <" + t.class_iri + ">)";
    }
  }
  return out;
}

}  // namespace

std::vector<ExistentialRule> parse_rules(std::string_view text,
                                         const PrefixMap& prefixes) {
  return RuleParser(text, prefixes).run();
}

std::string format_rule(const ExistentialRule& rule) {
  std::string out = rule.id + ": " + format_atoms(rule.body) + " -> ";
  if (!rule.existentials.empty()) {
    out += "exists ";
    for (std::size_t i = 0; i < rule.existentials.size(); ++i) {
      if (i) out += ", ";
      out += rule.existentials[i];
    }
    out += " . ";
  }
  return out + format_atoms(rule.head) + " .";
}

}  // namespace swkg
