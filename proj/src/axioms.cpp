#include "swkg/axioms.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "lexer.hpp"
#include "swkg/vocab.hpp"

namespace swkg {

using detail::Lexer;
using detail::Tok;
using detail::Token;

std::string_view to_string(ExprKind kind) {
  switch (kind) {
    case ExprKind::Named: return "Named";
    case ExprKind::AllValues: return "AllValues";
    case ExprKind::SomeValues: return "SomeValues";
    case ExprKind::MinCard: return "MinCard";
    case ExprKind::MaxCard: return "MaxCard";
  }
  return "?";
}

std::string shape_of(const Axiom& axiom) {
  auto part = [](const ClassExpr& e) {
    std::string s(to_string(e.kind));
    if (e.kind == ExprKind::MinCard || e.kind == ExprKind::MaxCard) {
      s += "(" + std::to_string(e.cardinality) + ")";
    }
    if (e.kind != ExprKind::Named && e.property.inverse) s += "^-";
    return s;
  };
  return part(axiom.lhs) + "<=" + part(axiom.rhs);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

const std::set<std::string, std::less<>> kKeywords = {
    "SubClassOf", "inverse", "only", "some", "min", "max"};

class AxiomLineParser {
 public:
  AxiomLineParser(std::string_view line, std::size_t line_no,
                  PrefixMap& prefixes)
      : lx_(line, line_no), prefixes_(prefixes) {}

  // Returns false for blank/comment/directive lines.
  bool parse(Axiom& out) {
    if (lx_.at(Tok::End)) return false;
    if (lx_.at(Tok::AtWord)) {
      const Token kw = lx_.next();
      if (kw.text != "prefix") lx_.fail(kw, "unknown directive");
      detail::read_prefix_directive(lx_, prefixes_, false);
      expect_end();
      return false;
    }
    const Token id = lx_.next();
    if (id.kind != Tok::PName || !id.local.empty() || id.text.empty()) {
      lx_.fail(id, "expected an axiom id such as 'dt-01:'");
    }
    out.id = id.text;
    out.lhs = class_expr();
    lx_.expect_name("SubClassOf");
    out.rhs = class_expr();
    while (lx_.at(Tok::Semicolon)) {
      lx_.next();
      const Token prop = lx_.next();
      const auto prop_iri = detail::resolve_iri(lx_, prop, prefixes_, true);
      const Token value = lx_.next();
      if (value.kind == Tok::String) {
        out.annotations.emplace_back(prop_iri, Term::literal(value.text));
      } else {
        out.annotations.emplace_back(
            prop_iri,
            Term::iri(detail::resolve_iri(lx_, value, prefixes_, true)));
      }
    }
    expect_end();
    return true;
  }

 private:
  void expect_end() {
    if (!lx_.at(Tok::End)) {
      if (lx_.at(Tok::Name) && kKeywords.count(lx_.peek().text)) {
        lx_.fail_here("unsupported shape: nested class expressions");
      }
      lx_.fail_here("unexpected trailing input");
    }
  }

  std::string name() {
    const Token t = lx_.next();
    if (t.kind == Tok::Name && kKeywords.count(t.text)) {
      lx_.fail(t, "expected a class or property name");
    }
    if (t.kind == Tok::LParen) {
      lx_.fail(t, "unsupported shape: nested class expressions");
    }
    return detail::resolve_iri(lx_, t, prefixes_, true);
  }

  unsigned number() {
    const Token t = lx_.expect(Tok::Number, "a cardinality");
    return static_cast<unsigned>(std::stoul(t.text));
  }

  ClassExpr class_expr() {
    bool inverse = false;
    if (lx_.at_name("inverse")) {
      lx_.next();
      inverse = true;
    }
    const std::string first = name();
    const bool restriction =
        lx_.at_name("only") || lx_.at_name("some") || lx_.at_name("min") ||
        lx_.at_name("max");
    if (!restriction) {
      if (inverse) lx_.fail_here("expected 'only', 'some', 'min' or 'max'");
      return ClassExpr::named(first);
    }
    const PropertyRef p{first, inverse};
    const std::string op = lx_.next().text;
    if (op == "only") return ClassExpr::all(p, name());
    if (op == "some") return ClassExpr::some(p, name());
    const unsigned n = number();
    if (op == "min") return ClassExpr::min(n, p, name());
    return ClassExpr::max(n, p, name());
  }

  Lexer lx_;
  PrefixMap& prefixes_;
};

}  // namespace

std::vector<Axiom> parse_axioms(std::string_view text,
                                const PrefixMap& prefixes) {
  PrefixMap scope = prefixes;
  std::vector<Axiom> out;
  std::set<std::string> ids;
  std::size_t line_no = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(start, end - start);
    Axiom axiom;
    if (AxiomLineParser(line, line_no, scope).parse(axiom)) {
      if (!ids.insert(axiom.id).second) {
        throw ParseError(line_no, 1, "duplicate axiom id", axiom.id);
      }
      out.push_back(std::move(axiom));
    }
    ++line_no;
    start = end + 1;
  }
  return out;
}

namespace {

std::string write_name(const PrefixMap& prefixes, const std::string& iri) {
  if (auto pname = prefixes.compact(iri)) {
    if (pname->front() == ':' && !kKeywords.count(pname->substr(1))) {
      return pname->substr(1);
    }
    return *pname;
  }
  return "<" + iri + ">";
}

std::string write_expr(const PrefixMap& prefixes, const ClassExpr& e) {
  if (e.kind == ExprKind::Named) return write_name(prefixes, e.class_iri);
  std::string out = e.property.inverse ? "inverse " : "";
  out += write_name(prefixes, e.property.iri);
  switch (e.kind) {
    case ExprKind::AllValues: out += " only "; break;
    case ExprKind::SomeValues: out += " some "; break;
    case ExprKind::MinCard:
      out += " min " + std::to_string(e.cardinality) + " ";
      break;
    case ExprKind::MaxCard:
      out += " max " + std::to_string(e.cardinality) + " ";
      break;
    case ExprKind::Named: break;
  }
  return out + write_name(prefixes, e.class_iri);
}

}  // namespace

std::string format_axioms(const std::vector<Axiom>& axioms,
                          const PrefixMap& prefixes) {
  std::ostringstream out;
  for (const auto& [p, ns] : prefixes.entries()) {
    out << "@prefix " << p << ": <" << ns << "> .\n";
  }
  if (!prefixes.empty() && !axioms.empty()) out << "\n";
  for (const auto& a : axioms) {
    out << a.id << ": " << write_expr(prefixes, a.lhs) << " SubClassOf "
        << write_expr(prefixes, a.rhs);
    for (const auto& [prop, value] : a.annotations) {
      out << " ; " << write_name(prefixes, prop) << " ";
      if (value.is_iri()) {
        out << write_name(prefixes, value.value());
      } else {
        out << "\"" << escape_string(value.value()) << "\"";
      }
    }
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Template instantiation

void RenameMap::check_injective() const {
  std::map<std::string, std::string> seen;
  for (const auto& [from, to] : mapping) {
    if (from.empty() || to.empty()) {
      throw std::invalid_argument("rename map entries must be IRIs");
    }
    auto [it, fresh] = seen.emplace(to, from);
    if (!fresh) {
      throw std::invalid_argument("rename map is not injective: <" +
                                  it->second + "> and <" + from +
                                  "> both map to <" + to + ">");
    }
  }
}

RenameMap parse_rename_map(std::string_view text, const PrefixMap& prefixes) {
  PrefixMap scope = prefixes;
  Lexer lx(text);
  RenameMap map;
  while (!lx.at(Tok::End)) {
    if (lx.at(Tok::AtWord)) {
      const Token kw = lx.next();
      if (kw.text == "prefix") {
        detail::read_prefix_directive(lx, scope, false);
        continue;
      }
      if (kw.text == "pattern") {
        map.source_pattern = detail::resolve_iri(lx, lx.next(), scope, true);
      } else if (kw.text == "annotation") {
        map.annotation_property =
            detail::resolve_iri(lx, lx.next(), scope, true);
      } else if (kw.text == "suffix") {
        map.module_suffix = lx.expect(Tok::Name, "a suffix name").text;
      } else {
        lx.fail(kw, "unknown directive");
      }
      lx.expect(Tok::Dot, "'.' after directive");
      continue;
    }
    const Token from_tok = lx.next();
    const auto from = detail::resolve_iri(lx, from_tok, scope, true);
    lx.expect(Tok::Arrow, "'->'");
    const auto to = detail::resolve_iri(lx, lx.next(), scope, true);
    if (!map.mapping.emplace(from, to).second) {
      lx.fail(from_tok, "name mapped twice");
    }
  }
  return map;
}

std::vector<Axiom> instantiate_template(const std::vector<Axiom>& axioms,
                                        const RenameMap& map) {
  map.check_injective();
  const std::string annotation = map.annotation_property.empty()
                                     ? vocab::opla_reuses_pattern()
                                     : map.annotation_property;
  auto rename = [&](const std::string& iri) {
    auto it = map.mapping.find(iri);
    return it == map.mapping.end() ? iri : it->second;
  };
  auto rename_expr = [&](ClassExpr e) {
    e.class_iri = rename(e.class_iri);
    if (e.kind != ExprKind::Named) e.property.iri = rename(e.property.iri);
    return e;
  };
  std::vector<Axiom> out;
  out.reserve(axioms.size());
  for (const auto& a : axioms) {
    Axiom b;
    b.id = map.module_suffix.empty() ? a.id : a.id + "." + map.module_suffix;
    b.lhs = rename_expr(a.lhs);
    b.rhs = rename_expr(a.rhs);
    b.annotations = a.annotations;
    if (!map.source_pattern.empty()) {
      b.annotations.emplace_back(annotation, Term::iri(map.source_pattern));
    }
    out.push_back(std::move(b));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Compilation

namespace {

PropertyAtom edge(const PropertyRef& p, const std::string& from,
                  const std::string& to) {
  if (p.inverse) return PropertyAtom{p.iri, Variable{to}, Variable{from}};
  return PropertyAtom{p.iri, Variable{from}, Variable{to}};
}

[[noreturn]] void unsupported(const Axiom& a) {
  throw std::invalid_argument("axiom " + a.id + ": unsupported shape " +
                              shape_of(a));
}

}  // namespace

std::vector<std::string> CompiledTheory::axiom_ids() const {
  std::vector<std::string> out;
  for (const auto& r : inference_rules) out.push_back(r.source);
  for (const auto& c : ranges) out.push_back(c.axiom_id);
  for (const auto& c : existentials) out.push_back(c.axiom_id);
  for (const auto& c : cardinalities) out.push_back(c.axiom_id);
  for (const auto& n : informational) out.push_back(n.axiom_id);
  return out;
}

CompiledTheory compile(const std::vector<Axiom>& axioms) {
  CompiledTheory theory;
  for (const auto& a : axioms) {
    const auto& lhs = a.lhs;
    const auto& rhs = a.rhs;
    if (lhs.kind == ExprKind::SomeValues && rhs.kind == ExprKind::Named) {
      // Scoped domain: R(x,y), y:B => x:A.
      ExistentialRule r;
      r.id = a.id;
      r.source = a.id;
      r.body = {edge(lhs.property, "x", "y"),
                TypeAtom{lhs.class_iri, Variable{"y"}}};
      r.head = {TypeAtom{rhs.class_iri, Variable{"x"}}};
      theory.inference_rules.push_back(std::move(r));
      continue;
    }
    if (lhs.kind != ExprKind::Named) unsupported(a);
    switch (rhs.kind) {
      case ExprKind::Named: {
        ExistentialRule r;
        r.id = a.id;
        r.source = a.id;
        r.body = {TypeAtom{lhs.class_iri, Variable{"x"}}};
        r.head = {TypeAtom{rhs.class_iri, Variable{"x"}}};
        theory.inference_rules.push_back(std::move(r));
        break;
      }
      case ExprKind::AllValues:
        theory.ranges.push_back(
            {a.id, lhs.class_iri, rhs.property, rhs.class_iri});
        break;
      case ExprKind::MinCard:
        if (rhs.cardinality == 0) {
          theory.informational.push_back(
              {a.id, "structural tautology: a minimum cardinality of 0 is "
                     "vacuous; it documents intended usage and compiles to "
                     "no check"});
          break;
        }
        if (rhs.cardinality > 1) unsupported(a);
        [[fallthrough]];
      case ExprKind::SomeValues: {
        theory.existentials.push_back(
            {a.id, lhs.class_iri, rhs.property, rhs.class_iri});
        ExistentialRule r;
        r.id = a.id;
        r.source = a.id;
        r.body = {TypeAtom{lhs.class_iri, Variable{"x"}}};
        r.existentials = {"y"};
        r.head = {edge(rhs.property, "x", "y"),
                  TypeAtom{rhs.class_iri, Variable{"y"}}};
        theory.generating_rules.push_back(std::move(r));
        break;
      }
      case ExprKind::MaxCard:
        theory.cardinalities.push_back(
            {a.id, lhs.class_iri, rhs.property, rhs.class_iri,
             rhs.cardinality});
        break;
    }
  }
  return theory;
}

}  // namespace swkg
