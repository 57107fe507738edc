#include "swkg/corpus.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include "swkg/json_io.hpp"
#include "swkg/turtle.hpp"

#ifndef SWKG_CORPUS_DIR
#define SWKG_CORPUS_DIR "corpus"
#endif

namespace swkg {

namespace fs = std::filesystem;

std::string_view to_string(ArtifactKind kind) {
  switch (kind) {
    case ArtifactKind::Axioms: return "axioms";
    case ArtifactKind::Rules: return "rules";
    case ArtifactKind::Turtle: return "turtle";
    case ArtifactKind::Query: return "query";
    case ArtifactKind::Map: return "map";
    case ArtifactKind::Fixture: return "fixture";
    case ArtifactKind::Doc: return "doc";
  }
  return "?";
}

ArtifactKind parse_artifact_kind(std::string_view text) {
  for (auto k : {ArtifactKind::Axioms, ArtifactKind::Rules,
                 ArtifactKind::Turtle, ArtifactKind::Query, ArtifactKind::Map,
                 ArtifactKind::Fixture, ArtifactKind::Doc}) {
    if (to_string(k) == text) return k;
  }
  throw CorpusError("unknown artifact kind '" + std::string(text) + "'");
}

const ManifestEntry* CorpusManifest::find(std::string_view path) const {
  for (const auto& e : entries) {
    if (e.path == path) return &e;
  }
  return nullptr;
}

std::vector<Axiom> Corpus::module_axioms() const {
  auto all = module_base;
  all.insert(all.end(), module_additions.begin(), module_additions.end());
  return all;
}

fs::path Corpus::path(std::string_view relative) const {
  return root / fs::path(std::string(relative));
}

fs::path default_corpus_root() {
  if (const char* env = std::getenv("SWKG_CORPUS"); env && *env) return env;
  return SWKG_CORPUS_DIR;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(
      EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) {
    out << std::hex << std::setw(2) << std::setfill('0')
        << static_cast<int>(digest[i]);
  }
  return out.str();
}

CorpusManifest parse_manifest(std::string_view json_text) {
  CorpusManifest m;
  try {
    const auto j = Json::parse(json_text);
    for (const auto& e : j.at("files")) {
      m.entries.push_back({e.at("path").get<std::string>(),
                           parse_artifact_kind(e.at("kind").get<std::string>()),
                           e.at("anchor").get<std::string>(),
                           e.at("sha256").get<std::string>()});
    }
  } catch (const Json::exception& e) {
    throw CorpusError(std::string("malformed manifest: ") + e.what());
  }
  return m;
}

std::string format_manifest(const CorpusManifest& manifest) {
  Json files = Json::array();
  for (const auto& e : manifest.entries) {
    Json f;
    f["path"] = e.path;
    f["kind"] = std::string(to_string(e.kind));
    f["anchor"] = e.anchor;
    f["sha256"] = e.sha256;
    files.push_back(std::move(f));
  }
  Json j;
  j["files"] = std::move(files);
  return j.dump(2) + "\n";
}

namespace {

CorpusManifest read_manifest(const fs::path& root) {
  const auto path = root / "manifest.json";
  if (!fs::exists(path)) {
    throw CorpusError("no manifest.json under " + root.string());
  }
  return parse_manifest(read_file(path));
}

// Parses one artifact; the result is discarded when only checking.
template <typename Fn>
auto parse_checked(const ManifestEntry& e, const std::string& text, Fn fn) {
  try {
    return fn(text);
  } catch (const std::exception& ex) {
    throw CorpusError(e.path + ": " + ex.what());
  }
}

void check_parses(const ManifestEntry& e, const std::string& text) {
  const auto prefixes = default_prefixes();
  parse_checked(e, text, [&](const std::string& t) {
    switch (e.kind) {
      case ArtifactKind::Axioms: compile(parse_axioms(t, prefixes)); break;
      case ArtifactKind::Rules: parse_rules(t, prefixes); break;
      case ArtifactKind::Turtle: turtle::parse(t); break;
      case ArtifactKind::Query: parse_competency_question(t, prefixes); break;
      case ArtifactKind::Map: parse_rename_map(t, prefixes).check_injective(); break;
      case ArtifactKind::Fixture:
        if (!Json::accept(t)) throw std::runtime_error("invalid JSON");
        break;
      case ArtifactKind::Doc: break;
    }
    return 0;
  });
}

}  // namespace

Corpus load_corpus(const fs::path& root) {
  Corpus c;
  c.root = root;
  c.manifest = read_manifest(root);

  std::map<std::string, std::string> text;
  for (const auto& e : c.manifest.entries) {
    const auto file = root / e.path;
    if (!fs::exists(file)) throw CorpusError(e.path + ": listed but missing");
    auto bytes = read_file(file);
    const auto digest = sha256_hex(bytes);
    if (digest != e.sha256) {
      throw CorpusError(e.path + ": checksum mismatch (expected " + e.sha256 +
                        ", found " + digest + ")");
    }
    check_parses(e, bytes);
    text.emplace(e.path, std::move(bytes));
  }

  auto get = [&](const std::string& path) -> const std::string& {
    auto it = text.find(path);
    if (it == text.end()) throw CorpusError(path + ": not in manifest");
    return it->second;
  };
  const auto prefixes = default_prefixes();
  auto axioms = [&](const std::string& p) { return parse_axioms(get(p), prefixes); };
  auto rules = [&](const std::string& p) { return parse_rules(get(p), prefixes); };
  auto graph = [&](const std::string& p) { return turtle::parse(get(p)); };

  c.pattern_axioms = axioms("axioms/data_transformation.dlx");
  c.pattern_axioms_prose = axioms("axioms/data_transformation_prose.dlx");
  c.module_base = axioms("axioms/simulation_activity_base.dlx");
  c.module_additions = axioms("axioms/simulation_activity_additions.dlx");
  c.vocabulary_axioms = axioms("axioms/space_weather_vocabulary.dlx");
  c.rename_map = parse_rename_map(get("maps/simulation_activity.map"), prefixes);

  c.rules_printed = rules("rules/solar_flare_printed.rules");
  c.rules_resolved = rules("rules/solar_flare.rules");
  c.rules_enriched = rules("rules/solar_flare_enriched.rules");

  c.section35 = graph("data/section35.ttl");
  c.trigger = graph("data/solar_flare_trigger.ttl");
  c.trigger_literal = graph("data/solar_flare_trigger_literal.ttl");
  c.synthetic_transformation = graph("data/synthetic_data_transformation.ttl");
  c.synthetic_simulation = graph("data/synthetic_simulation.ttl");
  c.lone_transformation = graph("data/lone_data_transformation.ttl");
  c.vocabulary = graph("data/space_weather_vocabulary.ttl");

  for (const auto& e : c.manifest.entries) {
    if (e.kind != ArtifactKind::Query) continue;
    auto cq = parse_competency_question(get(e.path), prefixes);
    if (cq.name.empty()) throw CorpusError(e.path + ": missing name header");
    const auto name = cq.name;
    if (!c.questions.emplace(name, std::move(cq)).second) {
      throw CorpusError(e.path + ": duplicate question name " + name);
    }
  }
  return c;
}

CorpusManifest rehash(const fs::path& root) {
  auto m = read_manifest(root);
  for (auto& e : m.entries) e.sha256 = sha256_hex(read_file(root / e.path));
  return m;
}

}  // namespace swkg
