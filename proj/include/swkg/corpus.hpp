#pragma once

// The bundled, checksummed corpus: axiom sets, rules, instance data, the
// rename map, competency questions, and expected-findings fixtures.

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "swkg/axioms.hpp"
#include "swkg/graph.hpp"
#include "swkg/query.hpp"
#include "swkg/rules.hpp"

namespace swkg {

// Fixture files are JSON; Doc files are only checksummed.
enum class ArtifactKind { Axioms, Rules, Turtle, Query, Map, Fixture, Doc };

std::string_view to_string(ArtifactKind kind);
ArtifactKind parse_artifact_kind(std::string_view text);

struct ManifestEntry {
  std::string path;  // relative to the corpus root
  ArtifactKind kind;
  std::string anchor;
  std::string sha256;
};

struct CorpusManifest {
  std::vector<ManifestEntry> entries;

  const ManifestEntry* find(std::string_view path) const;
};

// Checksum mismatch, missing file, or a file its kind's parser rejects.
class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Corpus {
  std::filesystem::path root;
  CorpusManifest manifest;

  std::vector<Axiom> pattern_axioms;        // data transformation, 32
  std::vector<Axiom> pattern_axioms_prose;  // alternate role-side reading
  std::vector<Axiom> module_base;           // instantiated pattern, 32
  std::vector<Axiom> module_additions;      // 3
  std::vector<Axiom> vocabulary_axioms;
  RenameMap rename_map;

  std::vector<ExistentialRule> rules_printed;
  std::vector<ExistentialRule> rules_resolved;
  std::vector<ExistentialRule> rules_enriched;

  Graph section35;
  Graph trigger;
  Graph trigger_literal;
  Graph synthetic_transformation;
  Graph synthetic_simulation;
  Graph lone_transformation;
  Graph vocabulary;

  std::map<std::string, CompetencyQuestion> questions;  // by name

  // module_base followed by module_additions.
  std::vector<Axiom> module_axioms() const;

  std::filesystem::path path(std::string_view relative) const;
};

// SWKG_CORPUS if set, otherwise the corpus directory of the source tree.
std::filesystem::path default_corpus_root();

std::string read_file(const std::filesystem::path& path);
std::string sha256_hex(std::string_view bytes);

CorpusManifest parse_manifest(std::string_view json_text);
std::string format_manifest(const CorpusManifest& manifest);

// Reads manifest.json, checks every listed file's checksum, and parses each
// one with its kind's parser. Throws CorpusError.
Corpus load_corpus(const std::filesystem::path& root = default_corpus_root());

// Recomputes the checksum of every listed file.
CorpusManifest rehash(const std::filesystem::path& root);

}  // namespace swkg
