#pragma once

#include <string>
#include <string_view>

#include "swkg/graph.hpp"
#include "swkg/parse_error.hpp"

namespace swkg::turtle {

struct ParseOptions {
  // Resolves relative `<...>` IRIs by concatenation; empty leaves them as is.
  std::string base_iri;
  // Prefixes in scope before the document's own directives.
  PrefixMap prefixes;
};

// Parses the Turtle subset: @prefix, prefixed names, <IRI>, `a`, `;` and `,`
// lists, blank node labels, short and long string literals with optional
// `^^datatype`. Collections and `[ ]` property lists are rejected.
// Throws ParseError.
Graph parse(std::string_view text, const ParseOptions& options = {});

// Parses into an existing graph; blank labels are relabelled freshly so they
// never collide with nulls already present.
void parse_into(Graph& graph, std::string_view text,
                const ParseOptions& options = {});

// Deterministic serialization: sorted prefixes, subjects grouped with `;`,
// objects with `,`. Nulls are written as `_:<id>`.
std::string serialize(const Graph& graph);

}  // namespace swkg::turtle
