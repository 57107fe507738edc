#pragma once

#include <string>
#include <string_view>

// IRIs shared across the toolkit.
namespace swkg::vocab {

inline constexpr std::string_view kRdf =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs =
    "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kOpla =
    "http://ontologydesignpatterns.org/opla#";
// Namespace of the bundled space-weather corpus.
inline constexpr std::string_view kSpaceWeather =
    "https://example.org/spaceweather#";

inline std::string rdf(std::string_view local) {
  return std::string(kRdf) + std::string(local);
}
inline std::string xsd(std::string_view local) {
  return std::string(kXsd) + std::string(local);
}
inline std::string owl(std::string_view local) {
  return std::string(kOwl) + std::string(local);
}
inline std::string opla(std::string_view local) {
  return std::string(kOpla) + std::string(local);
}
inline std::string sw(std::string_view local) {
  return std::string(kSpaceWeather) + std::string(local);
}

inline const std::string& rdf_type() {
  static const std::string s = rdf("type");
  return s;
}
inline const std::string& xsd_string() {
  static const std::string s = xsd("string");
  return s;
}

// Default annotation property marking a module axiom with its source pattern.
inline const std::string& opla_reuses_pattern() {
  static const std::string s = opla("reusesPatternAsTemplate");
  return s;
}

}  // namespace swkg::vocab
