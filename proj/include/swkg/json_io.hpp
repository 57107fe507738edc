#pragma once

// Machine-readable output for reports, chase results, and query tables.
// Key order is fixed so equal inputs serialize to identical bytes.

#include "json.hpp"
#include "swkg/chase.hpp"
#include "swkg/query.hpp"
#include "swkg/validator.hpp"

namespace swkg {

using Json = nlohmann::ordered_json;

// {"type": "iri"|"literal"|"null", "value": ..., ["datatype": ...]}
Json to_json(const Term& term);

// {added, nulls, rounds, terminated}
Json to_json(const ChaseResult& result);

// {conforms, violations: [{axiom, kind, focus, witnesses, message}], info,
//  stats}
Json to_json(const ValidationReport& report);

// {columns, rows}
Json to_json(const BindingTable& table);

}  // namespace swkg
