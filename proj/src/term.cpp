#include "swkg/term.hpp"

#include <algorithm>
#include <cctype>

#include "swkg/vocab.hpp"

namespace swkg {

Term::Term(TermKind kind, std::string value, std::string datatype,
           NullOrigin origin)
    : kind_(kind),
      origin_(origin),
      value_(std::move(value)),
      datatype_(std::move(datatype)) {
  switch (kind_) {
    case TermKind::Iri:
      key_ = "<" + value_ + ">";
      break;
    case TermKind::Literal:
      key_ = "\"" + escape_string(value_) + "\"";
      if (datatype_ != vocab::xsd_string()) key_ += "^^<" + datatype_ + ">";
      break;
    case TermKind::Null:
      key_ = "_:" + value_;
      break;
  }
}

Term Term::iri(std::string value) {
  if (value.empty()) throw StructuralError("IRI must be non-empty");
  if (std::any_of(value.begin(), value.end(),
                  [](unsigned char c) { return std::isspace(c) != 0; })) {
    throw StructuralError("IRI contains whitespace: " + value);
  }
  return Term(TermKind::Iri, std::move(value), {}, NullOrigin::ParsedBlank);
}

Term Term::literal(std::string lexical, std::string datatype) {
  if (datatype.empty()) datatype = vocab::xsd_string();
  return Term(TermKind::Literal, std::move(lexical), std::move(datatype),
              NullOrigin::ParsedBlank);
}

Term Term::null(std::string id, NullOrigin origin) {
  if (id.empty()) throw StructuralError("null identifier must be non-empty");
  return Term(TermKind::Null, std::move(id), {}, origin);
}

std::string escape_string(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace swkg
