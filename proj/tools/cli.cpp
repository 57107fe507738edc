#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "swkg/axioms.hpp"
#include "swkg/chase.hpp"
#include "swkg/corpus.hpp"
#include "swkg/json_io.hpp"
#include "swkg/query.hpp"
#include "swkg/rules.hpp"
#include "swkg/turtle.hpp"
#include "swkg/validator.hpp"

namespace swkg::cli {

namespace fs = std::filesystem;

namespace {

// A failure that maps to a specific exit code.
struct Exit : std::runtime_error {
  Exit(int code, const std::string& message)
      : std::runtime_error(message), code(code) {}
  int code;
};

struct Options {
  std::vector<std::string> data;
  std::vector<std::string> axioms;
  std::vector<std::string> rules;
  std::string query;
  std::string map;
  std::string out;
  std::string prefixes;
  std::string format = "json";
  std::string mode = "closed";
  std::size_t max_rounds = kDefaultMaxRounds;
  std::string name;
  std::string event;
  std::string root;
};

// Reads a file, attaching the path to any parse error.
class Loader {
 public:
  explicit Loader(const Options& o) : prefixes_(default_prefixes()) {
    if (!o.prefixes.empty()) {
      prefixes_.merge(turtle::parse(read(o.prefixes)).prefixes());
    }
  }

  const PrefixMap& prefixes() const { return prefixes_; }

  std::string read(const std::string& path) const {
    try {
      return read_file(path);
    } catch (const std::exception& e) {
      throw Exit(kLoadError, e.what());
    }
  }

  template <typename Fn>
  auto parse(const std::string& path, Fn fn) const {
    const auto text = read(path);
    try {
      return fn(text);
    } catch (const std::exception& e) {
      throw Exit(kLoadError, path + ": " + e.what());
    }
  }

  Graph graph(const std::vector<std::string>& paths) const {
    Graph g;
    turtle::ParseOptions opts;
    opts.prefixes = prefixes_;
    for (const auto& p : paths) {
      parse(p, [&](const std::string& t) {
        turtle::parse_into(g, t, opts);
        return 0;
      });
    }
    return g;
  }

  std::vector<Axiom> axioms(const std::vector<std::string>& paths) const {
    std::vector<Axiom> all;
    for (const auto& p : paths) {
      auto part = parse(p, [&](const std::string& t) {
        return parse_axioms(t, prefixes_);
      });
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }

  std::vector<ExistentialRule> rules(const std::vector<std::string>& paths) const {
    std::vector<ExistentialRule> all;
    for (const auto& p : paths) {
      auto part = parse(p, [&](const std::string& t) {
        return parse_rules(t, prefixes_);
      });
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }

 private:
  PrefixMap prefixes_;
};

void write_output(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Exit(kLoadError, "cannot write " + path);
}

std::string render(const Term& t, const PrefixMap& prefixes) {
  if (t.is_iri()) {
    if (auto c = prefixes.compact(t.value())) return *c;
  }
  return t.lexical();
}

int cmd_parse(const Options& o, std::ostream& out) {
  Loader load(o);
  const Graph g = load.graph(o.data);
  if (!o.out.empty()) write_output(o.out, turtle::serialize(g));
  out << g.size() << (g.size() == 1 ? " triple\n" : " triples\n");
  return kOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  Loader load(o);
  const Graph g = load.graph(o.data);
  const auto axioms = load.axioms(o.axioms);
  CompiledTheory theory;
  try {
    theory = compile(axioms);
  } catch (const std::exception& e) {
    throw Exit(kLoadError, e.what());
  }
  const auto report = validate(g, theory, parse_mode(o.mode));
  if (o.format == "json") {
    out << to_json(report).dump(2) << "\n";
  } else {
    for (const auto& v : report.violations) {
      out << v.axiom_id << "  " << to_string(v.kind) << "  "
          << render(v.focus, load.prefixes()) << "  " << v.message << "\n";
    }
    for (const auto& n : report.info) {
      out << (n.axiom_id.empty() ? "-" : n.axiom_id) << "  info  "
          << n.message << "\n";
    }
    out << (report.conforms ? "conforms" : "does not conform") << " ("
        << report.violations.size() << " violations, " << report.stats.checks
        << " checks)\n";
  }
  return report.conforms ? kOk : kViolations;
}

int cmd_chase(const Options& o, std::ostream& out) {
  Loader load(o);
  Graph g = load.graph(o.data);
  const auto rules = load.rules(o.rules);
  const auto result = chase(g, rules, o.max_rounds);
  if (!o.out.empty()) write_output(o.out, turtle::serialize(g));
  if (o.format == "json") {
    out << to_json(result).dump(2) << "\n";
  } else {
    out << "added " << result.added.size() << " triples, "
        << result.nulls_created << " nulls, " << result.rounds << " rounds, "
        << (result.terminated ? "terminated" : "budget exhausted") << "\n";
  }
  if (!result.terminated) {
    throw Exit(kBudgetExhausted, "chase did not terminate within " +
                                     std::to_string(o.max_rounds) + " rounds");
  }
  return kOk;
}

int cmd_instantiate(const Options& o, std::ostream& out) {
  Loader load(o);
  const auto axioms = load.axioms(o.axioms);
  const auto map = load.parse(o.map, [&](const std::string& t) {
    return parse_rename_map(t, load.prefixes());
  });
  std::vector<Axiom> module;
  try {
    module = instantiate_template(axioms, map);
  } catch (const std::invalid_argument& e) {
    throw Exit(kLoadError, o.map + ": " + e.what());
  }
  const auto text = format_axioms(module, load.prefixes());
  if (o.out.empty()) {
    out << text;
  } else {
    write_output(o.out, text);
    out << module.size() << " axioms written to " << o.out << "\n";
  }
  return kOk;
}

void print_table(const BindingTable& table, const Options& o,
                 const PrefixMap& prefixes, std::ostream& out) {
  if (o.format == "json") {
    out << to_json(table).dump(2) << "\n";
  } else {
    out << format_table(table, prefixes);
  }
}

int cmd_query(const Options& o, std::ostream& out) {
  Loader load(o);
  const Graph g = load.graph(o.data);
  const auto q = load.parse(o.query, [&](const std::string& t) {
    return parse_query(t, load.prefixes());
  });
  print_table(evaluate(g, q), o, load.prefixes(), out);
  return kOk;
}

fs::path corpus_root(const Options& o) {
  return o.root.empty() ? default_corpus_root() : fs::path(o.root);
}

int cmd_cq(const Options& o, std::ostream& out) {
  Loader load(o);
  const auto root = corpus_root(o);
  const auto file = root / "queries" / (o.name + ".cq");
  if (!fs::exists(file)) {
    throw Exit(kUsage, "unknown competency question '" + o.name + "'");
  }
  const auto cq = load.parse(file.string(), [&](const std::string& t) {
    return parse_competency_question(t, load.prefixes());
  });
  if (cq.status != CqStatus::Executable) {
    std::string msg = o.name + " is " + std::string(to_string(cq.status)) +
                      ": documented, not executable";
    if (!cq.note.empty()) msg += ". " + cq.note;
    throw Exit(kUnsupportedQuestion, msg);
  }
  std::vector<std::string> data = o.data;
  if (data.empty()) {
    if (cq.data.empty()) {
      throw Exit(kUsage, o.name + " names no default data; pass --data");
    }
    data.push_back((root / "data" / cq.data).string());
  }
  const Graph g = load.graph(data);
  print_table(evaluate(g, *cq.query), o, load.prefixes(), out);
  return kOk;
}

Term resolve_event(const std::string& text, const PrefixMap& prefixes) {
  if (text.size() > 2 && text.front() == '<' && text.back() == '>') {
    return Term::iri(text.substr(1, text.size() - 2));
  }
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    if (auto iri = prefixes.expand(text.substr(0, colon), text.substr(colon + 1))) {
      return Term::iri(*iri);
    }
    if (text.find("://") != std::string::npos) return Term::iri(text);
  }
  throw Exit(kUsage, "cannot resolve event '" + text + "'");
}

int cmd_chain(const Options& o, std::ostream& out) {
  Loader load(o);
  const Graph g = load.graph(o.data);
  const Term event = resolve_event(o.event, load.prefixes());
  std::vector<Term> chain;
  try {
    chain = response_chain(g, event);
  } catch (const ChainError& e) {
    throw Exit(kLoadError, e.what());
  }
  if (o.format == "json") {
    Json j = Json::array();
    for (const auto& t : chain) j.push_back(to_json(t));
    out << j.dump(2) << "\n";
  } else {
    for (const auto& t : chain) out << render(t, load.prefixes()) << "\n";
  }
  return kOk;
}

int cmd_corpus_verify(const Options& o, std::ostream& out) {
  Corpus c;
  try {
    c = load_corpus(corpus_root(o));
  } catch (const std::exception& e) {
    throw Exit(kLoadError, e.what());
  }
  if (o.format == "json") {
    Json j;
    j["root"] = c.root.string();
    j["files"] = c.manifest.entries.size();
    j["pattern_axioms"] = c.pattern_axioms.size();
    j["module_axioms"] = c.module_axioms().size();
    j["section35_triples"] = c.section35.size();
    j["questions"] = c.questions.size();
    out << j.dump(2) << "\n";
  } else {
    out << c.manifest.entries.size() << " files verified under "
        << c.root.string() << "\n";
  }
  return kOk;
}

int cmd_corpus_rehash(const Options& o, std::ostream& out) {
  const auto root = corpus_root(o);
  CorpusManifest m;
  try {
    m = rehash(root);
  } catch (const std::exception& e) {
    throw Exit(kLoadError, e.what());
  }
  write_output((root / "manifest.json").string(), format_manifest(m));
  out << m.entries.size() << " checksums written\n";
  return kOk;
}

void add_common(CLI::App* cmd, Options& o, bool with_format) {
  cmd->add_option("--prefixes", o.prefixes,
                  "Turtle file whose @prefix directives are added to the "
                  "prefix table");
  if (with_format) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Space-weather ontology toolkit", "swkg"};
  app.require_subcommand(1);

  auto* parse = app.add_subcommand("parse", "Parse Turtle files and count triples");
  parse->add_option("files", o.data, "Turtle files")->required();
  parse->add_option("--out", o.out, "Write the merged graph as Turtle");
  add_common(parse, o, false);

  auto* val = app.add_subcommand("validate", "Validate data against axioms");
  val->add_option("--data", o.data, "Turtle data files")->required();
  val->add_option("--axioms", o.axioms, "Axiom files")->required();
  val->add_option("--mode", o.mode, "Validation mode")
      ->check(CLI::IsMember({"closed", "materialize-first"}))
      ->capture_default_str();
  add_common(val, o, true);

  auto* ch = app.add_subcommand("chase", "Run the restricted chase");
  ch->add_option("--data", o.data, "Turtle data files")->required();
  ch->add_option("--rules", o.rules, "Rule files")->required();
  ch->add_option("--max-rounds", o.max_rounds, "Round budget")
      ->check(CLI::Validator(
          [](std::string& v) {
            return v.find_first_not_of("0123456789") == std::string::npos &&
                           v.find_first_not_of('0') != std::string::npos
                       ? std::string()
                       : "--max-rounds must be a positive integer";
          },
          "POSITIVE"))
      ->capture_default_str();
  ch->add_option("--out", o.out, "Write the chased graph as Turtle");
  add_common(ch, o, true);

  auto* inst = app.add_subcommand("instantiate",
                                  "Instantiate a pattern with a rename map");
  inst->add_option("--axioms", o.axioms, "Pattern axiom files")->required();
  inst->add_option("--map", o.map, "Rename map")->required();
  inst->add_option("--out", o.out, "Write the module axioms here");
  add_common(inst, o, false);

  auto* qry = app.add_subcommand("query", "Evaluate a conjunctive query");
  qry->add_option("--data", o.data, "Turtle data files")->required();
  qry->add_option("--query", o.query, "Query file")->required();
  add_common(qry, o, true);

  auto* cq = app.add_subcommand("cq", "Run a bundled competency question");
  cq->add_option("name", o.name, "Question name, e.g. cq1")->required();
  cq->add_option("--data", o.data, "Turtle data files (default: bundled)");
  cq->add_option("--corpus", o.root, "Corpus root");
  add_common(cq, o, true);

  auto* chain = app.add_subcommand("chain", "List an event's response chain");
  chain->add_option("--data", o.data, "Turtle data files")->required();
  chain->add_option("--event", o.event, "Event IRI, <iri> or prefix:name")
      ->required();
  add_common(chain, o, true);

  auto* corpus = app.add_subcommand("corpus", "Check or rehash the corpus");
  corpus->require_subcommand(1);
  auto* verify = corpus->add_subcommand("verify", "Verify checksums and parse");
  verify->add_option("--corpus", o.root, "Corpus root");
  add_common(verify, o, true);
  auto* rehash_cmd = corpus->add_subcommand("rehash", "Rewrite checksums");
  rehash_cmd->add_option("--corpus", o.root, "Corpus root");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (parse->parsed()) return cmd_parse(o, out);
    if (val->parsed()) return cmd_validate(o, out);
    if (ch->parsed()) return cmd_chase(o, out);
    if (inst->parsed()) return cmd_instantiate(o, out);
    if (qry->parsed()) return cmd_query(o, out);
    if (cq->parsed()) return cmd_cq(o, out);
    if (chain->parsed()) return cmd_chain(o, out);
    if (verify->parsed()) return cmd_corpus_verify(o, out);
    if (rehash_cmd->parsed()) return cmd_corpus_rehash(o, out);
  } catch (const Exit& e) {
    err << "swkg: " << e.what() << "\n";
    return e.code;
  } catch (const std::exception& e) {
    err << "swkg: " << e.what() << "\n";
    return kLoadError;
  }
  return kUsage;
}

}  // namespace swkg::cli
