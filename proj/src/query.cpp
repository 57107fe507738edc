#include "swkg/query.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lexer.hpp"
#include "swkg/vocab.hpp"

namespace swkg {

using detail::Lexer;
using detail::Tok;
using detail::Token;

namespace {

class QueryParser {
 public:
  QueryParser(std::string_view text, const PrefixMap& prefixes)
      : lx_(text), prefixes_(prefixes) {}

  ConjunctiveQuery run() {
    while (lx_.at_name("PREFIX") || lx_.at_name("prefix")) {
      lx_.next();
      detail::read_prefix_directive(lx_, prefixes_, true);
    }
    if (!lx_.at_name("SELECT") && !lx_.at_name("select")) {
      lx_.fail_here("expected SELECT");
    }
    lx_.next();
    if (lx_.at_name("DISTINCT") || lx_.at_name("distinct")) lx_.next();

    ConjunctiveQuery q;
    std::vector<Token> projected;
    bool star = false;
    if (lx_.at(Tok::Star)) {
      lx_.next();
      star = true;
    } else {
      while (lx_.at(Tok::Var)) projected.push_back(lx_.next());
      if (projected.empty()) lx_.fail_here("expected projected variables");
    }
    if (lx_.at_name("WHERE") || lx_.at_name("where")) lx_.next();
    const Token open = lx_.expect(Tok::LBrace, "'{'");
    while (!lx_.at(Tok::RBrace)) {
      q.patterns.push_back(triple_pattern());
      if (lx_.at(Tok::Dot)) {
        lx_.next();
      } else if (!lx_.at(Tok::RBrace)) {
        lx_.fail_here("expected '.' or '}'");
      }
    }
    lx_.next();
    if (!lx_.at(Tok::End)) lx_.fail_here("unexpected input after query");
    if (q.patterns.empty()) lx_.fail(open, "empty graph pattern");

    const auto vars = pattern_variables(q.patterns);
    if (star) {
      q.projection = vars;
    } else {
      for (const auto& v : projected) {
        if (std::find(vars.begin(), vars.end(), v.text) == vars.end()) {
          lx_.fail(v, "projected variable does not occur in the pattern");
        }
        if (std::find(q.projection.begin(), q.projection.end(), v.text) ==
            q.projection.end()) {
          q.projection.push_back(v.text);
        }
      }
    }
    return q;
  }

 private:
  PatternTerm term(bool predicate_position) {
    const Token t = lx_.next();
    switch (t.kind) {
      case Tok::Var:
        return Variable{t.text};
      case Tok::IriRef:
      case Tok::PName:
        return Term::iri(detail::resolve_iri(lx_, t, prefixes_, false));
      case Tok::Name:
        if (predicate_position && t.text == "a") {
          return Term::iri(vocab::rdf_type());
        }
        break;
      case Tok::String:
        if (predicate_position) lx_.fail(t, "literal in predicate position");
        if (lx_.at(Tok::DoubleCaret)) {
          lx_.next();
          const Token dt = lx_.next();
          return Term::literal(t.text,
                               detail::resolve_iri(lx_, dt, prefixes_, false));
        }
        return Term::literal(t.text);
      case Tok::Blank:
        lx_.fail(t, "blank nodes are not supported in queries; use a variable");
      default:
        break;
    }
    lx_.fail(t, "expected a variable, IRI, or literal");
  }

  TriplePattern triple_pattern() {
    const Token start = lx_.peek();
    TriplePattern p{term(false), term(true), term(false)};
    try {
      check_pattern(p);
    } catch (const StructuralError& e) {
      lx_.fail(start, e.what());
    }
    return p;
  }

  Lexer lx_;
  PrefixMap prefixes_;
};

}  // namespace

ConjunctiveQuery parse_query(std::string_view text, const PrefixMap& prefixes) {
  return QueryParser(text, prefixes).run();
}

BindingTable evaluate(const Graph& graph, const ConjunctiveQuery& query) {
  BindingTable table;
  table.columns = query.projection;
  std::set<std::vector<Term>> rows;
  for_each_homomorphism(graph, query.patterns, {}, [&](const Binding& b) {
    std::vector<Term> row;
    row.reserve(query.projection.size());
    for (const auto& v : query.projection) row.push_back(b.at(v));
    rows.insert(std::move(row));
    return true;
  });
  table.rows.assign(rows.begin(), rows.end());
  return table;
}

std::string format_table(const BindingTable& table, const PrefixMap& prefixes) {
  auto cell = [&](const Term& t) -> std::string {
    if (t.is_iri()) {
      if (auto p = prefixes.compact(t.value())) return *p;
    }
    return t.lexical();
  };
  std::vector<std::vector<std::string>> text;
  std::vector<std::size_t> width;
  std::vector<std::string> header;
  for (const auto& c : table.columns) {
    header.push_back("?" + c);
    width.push_back(c.size() + 1);
  }
  for (const auto& row : table.rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(cell(row[i]));
      width[i] = std::max(width[i], line.back().size());
    }
    text.push_back(std::move(line));
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << line[i];
      if (i + 1 < line.size()) {
        out << std::string(width[i] - line[i].size() + 2, ' ');
      }
    }
    out << "\n";
  };
  emit(header);
  for (const auto& line : text) emit(line);
  out << "(" << table.rows.size() << (table.rows.size() == 1 ? " row" : " rows")
      << ")\n";
  return out.str();
}

std::string_view to_string(CqStatus status) {
  switch (status) {
    case CqStatus::Executable: return "executable";
    case CqStatus::VocabularyPending: return "vocabulary-pending";
    case CqStatus::DocumentedOnly: return "documented-only";
  }
  return "?";
}

CompetencyQuestion parse_competency_question(std::string_view text,
                                             const PrefixMap& prefixes) {
  CompetencyQuestion cq;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.rfind("#@", 0) != 0) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError(line_no, 1, "expected '#@ key: value'", line);
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const auto key = trim(line.substr(2, colon - 2));
    const auto value = trim(line.substr(colon + 1));
    if (key == "name") {
      cq.name = value;
    } else if (key == "question") {
      cq.question = value;
    } else if (key == "data") {
      cq.data = value;
    } else if (key == "note") {
      cq.note += (cq.note.empty() ? "" : " ") + value;
    } else if (key == "status") {
      if (value == "executable") {
        cq.status = CqStatus::Executable;
      } else if (value == "vocabulary-pending") {
        cq.status = CqStatus::VocabularyPending;
      } else if (value == "documented-only") {
        cq.status = CqStatus::DocumentedOnly;
      } else {
        throw ParseError(line_no, colon + 2, "unknown status", value);
      }
    } else {
      throw ParseError(line_no, 3, "unknown header key", key);
    }
  }
  if (cq.status == CqStatus::Executable) {
    cq.query = parse_query(text, prefixes);
    cq.query->name = cq.name;
  }
  return cq;
}

}  // namespace swkg
