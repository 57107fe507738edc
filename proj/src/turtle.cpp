#include "swkg/turtle.hpp"

#include <map>
#include <sstream>

#include "lexer.hpp"
#include "swkg/vocab.hpp"

namespace swkg::turtle {

using detail::Lexer;
using detail::Tok;
using detail::Token;

namespace {

class Parser {
 public:
  Parser(Graph& graph, std::string_view text, const ParseOptions& options)
      : graph_(graph), lx_(text), base_(options.base_iri) {
    graph_.prefixes().merge(options.prefixes);
  }

  void run() {
    while (!lx_.at(Tok::End)) statement();
  }

 private:
  void statement() {
    const Token& t = lx_.peek();
    if (t.kind == Tok::AtWord) {
      const Token kw = lx_.next();
      if (kw.text == "prefix") {
        detail::read_prefix_directive(lx_, graph_.prefixes(), false);
      } else if (kw.text == "base") {
        base_ = lx_.expect(Tok::IriRef, "base IRI").text;
        lx_.expect(Tok::Dot, "'.' after @base directive");
      } else {
        lx_.fail(kw, "unknown directive");
      }
      return;
    }
    if (t.kind == Tok::Name && (t.text == "PREFIX" || t.text == "prefix")) {
      lx_.next();
      detail::read_prefix_directive(lx_, graph_.prefixes(), true);
      return;
    }
    const Term subject = read_subject();
    predicate_object_list(subject);
    lx_.expect(Tok::Dot, "'.' at end of statement");
  }

  void predicate_object_list(const Term& subject) {
    for (;;) {
      const Term predicate = read_verb();
      for (;;) {
        graph_.insert(subject, predicate, read_object());
        if (!lx_.at(Tok::Comma)) break;
        lx_.next();
      }
      if (!lx_.at(Tok::Semicolon)) return;
      // Repeated or trailing ';' are legal.
      while (lx_.at(Tok::Semicolon)) lx_.next();
      if (lx_.at(Tok::Dot)) return;
    }
  }

  [[noreturn]] void unsupported(const Token& t) {
    lx_.fail(t, "unsupported construct: collections and '[ ]' blank node "
                "property lists are not part of the accepted Turtle subset");
  }

  Term iri_term(const Token& t) {
    std::string iri = detail::resolve_iri(lx_, t, graph_.prefixes(), false);
    if (t.kind == Tok::IriRef && !base_.empty() &&
        iri.find(':') == std::string::npos) {
      iri = base_ + iri;
    }
    try {
      return Term::iri(std::move(iri));
    } catch (const StructuralError& e) {
      lx_.fail(t, e.what());
    }
  }

  Term blank(const Token& t) {
    auto it = blanks_.find(t.text);
    if (it == blanks_.end()) {
      it = blanks_.emplace(t.text, graph_.fresh_blank()).first;
    }
    return it->second;
  }

  Term read_subject() {
    const Token t = lx_.next();
    switch (t.kind) {
      case Tok::IriRef:
      case Tok::PName:
        return iri_term(t);
      case Tok::Blank:
        return blank(t);
      case Tok::LBracket:
      case Tok::LParen:
        unsupported(t);
      case Tok::String:
        lx_.fail(t, "literal in subject position");
      default:
        lx_.fail(t, "expected a subject");
    }
  }

  Term read_verb() {
    const Token t = lx_.next();
    if (t.kind == Tok::Name && t.text == "a") {
      return Term::iri(vocab::rdf_type());
    }
    if (t.kind == Tok::IriRef || t.kind == Tok::PName) return iri_term(t);
    lx_.fail(t, "expected a predicate");
  }

  Term read_object() {
    const Token t = lx_.next();
    switch (t.kind) {
      case Tok::IriRef:
      case Tok::PName:
        return iri_term(t);
      case Tok::Blank:
        return blank(t);
      case Tok::String: {
        if (lx_.at(Tok::AtWord)) {
          lx_.fail_here("language tags are not supported");
        }
        if (lx_.at(Tok::DoubleCaret)) {
          lx_.next();
          const Token dt = lx_.next();
          if (dt.kind != Tok::IriRef && dt.kind != Tok::PName) {
            lx_.fail(dt, "expected a datatype IRI");
          }
          return Term::literal(t.text, iri_term(dt).value());
        }
        return Term::literal(t.text);
      }
      case Tok::LBracket:
      case Tok::LParen:
        unsupported(t);
      case Tok::Number:
        lx_.fail(t, "numeric literals are not supported; quote the value");
      default:
        lx_.fail(t, "expected an object");
    }
  }

  Graph& graph_;
  Lexer lx_;
  std::string base_;
  std::map<std::string, Term> blanks_;
};

std::string write_iri(const PrefixMap& prefixes, const std::string& iri) {
  if (auto pname = prefixes.compact(iri)) return *pname;
  return "<" + iri + ">";
}

std::string write_term(const PrefixMap& prefixes, const Term& t) {
  switch (t.kind()) {
    case TermKind::Iri:
      return write_iri(prefixes, t.value());
    case TermKind::Null:
      return "_:" + t.value();
    case TermKind::Literal: {
      std::string out = "\"" + escape_string(t.value()) + "\"";
      if (t.datatype() != vocab::xsd_string()) {
        out += "^^" + write_iri(prefixes, t.datatype());
      }
      return out;
    }
  }
  return {};
}

}  // namespace

void parse_into(Graph& graph, std::string_view text,
                const ParseOptions& options) {
  Parser(graph, text, options).run();
}

Graph parse(std::string_view text, const ParseOptions& options) {
  Graph g;
  parse_into(g, text, options);
  return g;
}

std::string serialize(const Graph& graph) {
  std::ostringstream out;
  const auto& prefixes = graph.prefixes();
  for (const auto& [p, ns] : prefixes.entries()) {
    out << "@prefix " << p << ": <" << ns << "> .\n";
  }
  const auto triples = graph.triples();
  if (!triples.empty()) out << "\n";
  const std::string rdf_type = vocab::rdf_type();
  for (std::size_t i = 0; i < triples.size();) {
    const Term& subject = triples[i].subject;
    out << write_term(prefixes, subject);
    bool first_predicate = true;
    while (i < triples.size() && triples[i].subject == subject) {
      const Term& predicate = triples[i].predicate;
      out << (first_predicate ? " " : " ;\n    ");
      first_predicate = false;
      out << (predicate.value() == rdf_type ? std::string("a")
                                            : write_term(prefixes, predicate));
      bool first_object = true;
      while (i < triples.size() && triples[i].subject == subject &&
             triples[i].predicate == predicate) {
        out << (first_object ? " " : " , ");
        first_object = false;
        out << write_term(prefixes, triples[i].object);
        ++i;
      }
    }
    out << " .\n";
  }
  return out.str();
}

}  // namespace swkg::turtle
