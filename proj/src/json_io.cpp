#include "swkg/json_io.hpp"

#include "swkg/vocab.hpp"

namespace swkg {

Json to_json(const Term& term) {
  Json j;
  switch (term.kind()) {
    case TermKind::Iri:
      j["type"] = "iri";
      j["value"] = term.value();
      break;
    case TermKind::Literal:
      j["type"] = "literal";
      j["value"] = term.value();
      if (term.datatype() != vocab::xsd_string()) {
        j["datatype"] = term.datatype();
      }
      break;
    case TermKind::Null:
      j["type"] = "null";
      j["value"] = term.value();
      break;
  }
  return j;
}

Json to_json(const ChaseResult& result) {
  Json j;
  j["added"] = result.added.size();
  j["nulls"] = result.nulls_created;
  j["rounds"] = result.rounds;
  j["terminated"] = result.terminated;
  return j;
}

Json to_json(const ValidationReport& report) {
  Json j;
  j["conforms"] = report.conforms;
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json e;
    e["axiom"] = v.axiom_id;
    e["kind"] = std::string(to_string(v.kind));
    e["focus"] = v.focus.lexical();
    Json w = Json::array();
    for (const auto& t : v.witnesses) w.push_back(t.lexical());
    e["witnesses"] = std::move(w);
    e["message"] = v.message;
    violations.push_back(std::move(e));
  }
  j["violations"] = std::move(violations);
  Json info = Json::array();
  for (const auto& n : report.info) {
    Json e;
    e["axiom"] = n.axiom_id;
    e["message"] = n.message;
    info.push_back(std::move(e));
  }
  j["info"] = std::move(info);
  Json stats;
  stats["checks"] = report.stats.checks;
  stats["nodes"] = report.stats.nodes;
  stats["derived"] = report.stats.derived;
  stats["nulls"] = report.stats.nulls_created;
  j["stats"] = std::move(stats);
  return j;
}

Json to_json(const BindingTable& table) {
  Json j;
  j["columns"] = table.columns;
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json r = Json::array();
    for (const auto& t : row) r.push_back(to_json(t));
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace swkg
