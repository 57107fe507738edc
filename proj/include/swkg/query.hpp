#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swkg/graph.hpp"
#include "swkg/parse_error.hpp"

namespace swkg {

struct ConjunctiveQuery {
  std::string name;
  std::vector<std::string> projection;  // variable names without '?'
  std::vector<TriplePattern> patterns;
};

// Parses `PREFIX p: <iri>` lines followed by
// `SELECT [DISTINCT] ?v ... | * WHERE { tp . tp . ... }`.
// Throws ParseError for syntax errors, an empty pattern, or a projected
// variable that the pattern never mentions.
ConjunctiveQuery parse_query(std::string_view text,
                             const PrefixMap& prefixes = {});

struct BindingTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Term>> rows;  // distinct, sorted
};

// Projected homomorphisms of the pattern into the graph. Nulls are ordinary
// bindings.
BindingTable evaluate(const Graph& graph, const ConjunctiveQuery& query);

// Aligned-column text rendering with IRIs compacted by `prefixes`.
std::string format_table(const BindingTable& table, const PrefixMap& prefixes);

enum class CqStatus { Executable, VocabularyPending, DocumentedOnly };

std::string_view to_string(CqStatus status);

// A bundled competency question. Files carry `#@ key: value` headers (name,
// question, status, data, note) followed by the query text for executable
// questions.
struct CompetencyQuestion {
  std::string name;
  std::string question;
  CqStatus status = CqStatus::Executable;
  std::string data;  // default data file, relative to the corpus data dir
  std::string note;
  std::optional<ConjunctiveQuery> query;
};

CompetencyQuestion parse_competency_question(std::string_view text,
                                             const PrefixMap& prefixes = {});

}  // namespace swkg
