#include "balagha/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "balagha/annotation.hpp"
#include "balagha/api.hpp"
#include "balagha/concordance.hpp"
#include "balagha/errors.hpp"
#include "balagha/report_io.hpp"
#include "balagha/scoring.hpp"
#include "balagha/taxonomy.hpp"
#include "balagha/utf8.hpp"

namespace balagha::cli {

namespace fs = std::filesystem;

namespace {

// Carries an exit code out of a subcommand.
struct Exit {
  int code;
};

struct Options {
  std::string file;
  std::string format = "text";
  std::string lexicon;
  std::string text;
  bool text_given = false;
  std::string domain;
  std::string part;
  std::string output;
  std::string counts = "10,5";
  int assessors = 10;
  int max_mark = 2;
  double spread = 0.6;
  std::uint64_t seed = 1;
  bool csv = false;
  std::string host = "127.0.0.1";
  int port = 0;
};

std::string read_file(const fs::path& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << path.string() << '\n';
    throw Exit{kExitIo};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    err << "error: cannot read " << path.string() << '\n';
    throw Exit{kExitIo};
  }
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << content;
  if (!file) {
    err << "error: cannot write " << path << '\n';
    throw Exit{kExitIo};
  }
}

std::string describe(const FormatError& e) {
  std::string msg = e.what();
  if (!e.field().empty() && msg.find(e.field()) == std::string::npos) {
    msg += " (field " + e.field() + ")";
  }
  return msg;
}

// Parses a document file; format and encoding problems exit 1.
Document load_document(const fs::path& path, std::ostream& err) {
  const std::string content = read_file(path, err);
  try {
    return parse_document(content);
  } catch (const FormatError& e) {
    err << "error: " << path.string() << ": " << describe(e) << '\n';
  } catch (const EncodingError& e) {
    err << "error: " << path.string() << ": " << e.what() << '\n';
  }
  throw Exit{kExitInvalid};
}

Segmenter make_segmenter(const std::string& lexicon_path, std::ostream& err) {
  if (lexicon_path.empty()) return Segmenter();
  ExceptionLexicon lexicon = ExceptionLexicon::builtin();
  std::ifstream in(lexicon_path, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << lexicon_path << '\n';
    throw Exit{kExitIo};
  }
  try {
    lexicon.merge(ExceptionLexicon::parse(in));
  } catch (const LexiconError& e) {
    err << "error: " << lexicon_path << ": " << e.what() << '\n';
    throw Exit{kExitInvalid};
  }
  return Segmenter(std::move(lexicon));
}

DeviceFilter make_filter(const Options& o, std::ostream& err) {
  DeviceFilter filter;
  if (!o.domain.empty()) {
    filter.domain = parse_domain(o.domain);
    if (!filter.domain) {
      err << "error: unknown domain '" << o.domain << "'\n";
      throw Exit{kExitUsage};
    }
  }
  if (!o.part.empty()) {
    filter.part = parse_part(o.part);
    if (!filter.part) {
      err << "error: unknown part '" << o.part << "'\n";
      throw Exit{kExitUsage};
    }
  }
  return filter;
}

void print_diagnostics(const std::vector<Diagnostic>& diagnostics,
                       std::ostream& stream) {
  for (const Diagnostic& d : diagnostics) {
    stream << io::diagnostic_text(d) << '\n';
  }
}

int cmd_score(const Options& o, std::ostream& out, std::ostream& err) {
  const Taxonomy& taxonomy = load_taxonomy();
  const Segmenter segmenter = make_segmenter(o.lexicon, err);
  const Document doc = load_document(o.file, err);
  ScoreReport report;
  try {
    report = score_document(doc, taxonomy, segmenter);
  } catch (const ValidationFailed& e) {
    print_diagnostics(e.diagnostics(), err);
    return kExitInvalid;
  } catch (const ZeroMorphemes& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  const auto warnings = validate_document(doc, taxonomy);
  if (o.format == "json") {
    out << io::scored_json(report, warnings).dump(2) << '\n';
  } else if (o.format == "csv") {
    out << io::report_csv_header() << io::report_csv_row(report);
  } else {
    out << io::report_text(report, taxonomy);
  }
  if (o.format != "json") print_diagnostics(warnings, err);
  return kExitOk;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const Document doc = load_document(o.file, err);
  const auto diagnostics = validate_document(doc, load_taxonomy());
  if (o.format == "json") {
    out << io::diagnostics_json(diagnostics).dump(2) << '\n';
  } else {
    print_diagnostics(diagnostics, out);
    if (diagnostics.empty()) out << "ok\n";
  }
  return has_errors(diagnostics) ? kExitInvalid : kExitOk;
}

int cmd_morphemes(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.text_given == !o.file.empty()) {
    err << "error: give exactly one of FILE or --text\n";
    return kExitUsage;
  }
  const Segmenter segmenter = make_segmenter(o.lexicon, err);
  std::string text = o.text;
  if (!o.file.empty()) {
    text = o.file.ends_with(".json") ? load_document(o.file, err).text
                                     : read_file(o.file, err);
  }
  if (utf8::find_invalid(text) != std::string::npos) {
    err << "error: input is not valid UTF-8\n";
    return kExitInvalid;
  }
  const MorphemeCount count = segmenter.count(text);
  if (o.format == "json") {
    out << io::morphemes_json(count).dump(2) << '\n';
  } else {
    out << io::morphemes_text(count);
  }
  return kExitOk;
}

int cmd_taxonomy_list(const Options& o, std::ostream& out, std::ostream& err) {
  const DeviceFilter filter = make_filter(o, err);
  try {
    out << io::taxonomy_text(load_taxonomy().list(filter));
  } catch (const InvalidFilter& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_taxonomy_export(const Options& o, std::ostream& out,
                        std::ostream& err) {
  const DeviceFilter filter = make_filter(o, err);
  std::string content;
  try {
    content = io::taxonomy_json(load_taxonomy(), filter).dump(2) + "\n";
  } catch (const InvalidFilter& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  write_output(o.output, content, out, err);
  return kExitOk;
}

std::vector<int> parse_counts(const std::string& text, std::ostream& err) {
  std::vector<int> counts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      counts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      err << "error: --counts expects comma-separated integers\n";
      throw Exit{kExitUsage};
    }
  }
  return counts;
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
  SimulationConfig config;
  config.true_ld_counts = parse_counts(o.counts, err);
  config.assessor_count = o.assessors;
  config.max_mark = o.max_mark;
  config.generosity_spread = o.spread;
  config.seed = o.seed;
  SimulationResult result;
  try {
    result = simulate(config);
  } catch (const InvalidConfig& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (o.csv) {
    out << io::simulation_csv(result);
  } else if (o.format == "json") {
    out << io::simulation_json(config, result).dump(2) << '\n';
  } else {
    out << io::simulation_text(config, result);
  }
  return kExitOk;
}

int cmd_batch(const Options& o, std::ostream& out, std::ostream& err) {
  std::error_code ec;
  if (!fs::is_directory(o.file, ec)) {
    err << "error: " << o.file << " is not a readable directory\n";
    return kExitIo;
  }
  std::vector<fs::path> files;
  for (auto it = fs::recursive_directory_iterator(o.file, ec);
       !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (it->is_regular_file() &&
        it->path().filename().string().ends_with(".balagha.json")) {
      files.push_back(it->path());
    }
  }
  if (ec) {
    err << "error: cannot walk " << o.file << ": " << ec.message() << '\n';
    return kExitIo;
  }
  std::sort(files.begin(), files.end());

  const Taxonomy& taxonomy = load_taxonomy();
  const Segmenter segmenter = make_segmenter(o.lexicon, err);
  std::string csv = io::report_csv_header();
  int skipped = 0;
  for (const fs::path& path : files) {
    try {
      const Document doc = load_document(path, err);
      csv += io::report_csv_row(score_document(doc, taxonomy, segmenter));
    } catch (const Exit&) {
      ++skipped;
    } catch (const ValidationFailed& e) {
      err << "error: " << path.string() << ": " << e.what() << '\n';
      print_diagnostics(e.diagnostics(), err);
      ++skipped;
    } catch (const ZeroMorphemes& e) {
      err << "error: " << path.string() << ": " << e.what() << '\n';
      ++skipped;
    }
  }
  write_output(o.output, csv, out, err);
  return skipped == 0 ? kExitOk : kExitInvalid;
}

int cmd_serve(const Options& o, std::ostream& out, std::ostream& err) {
  const Segmenter segmenter = make_segmenter(o.lexicon, err);
  const Api api(load_taxonomy(), segmenter);
  HttpServer server(api);
  const int port = o.port > 0 ? o.port : default_port();
  if (server.bind(o.host, port) < 0) {
    err << "error: cannot listen on " << o.host << ':' << port << '\n';
    return kExitIo;
  }
  out << "listening on http://" << o.host << ':' << port << std::endl;
  server.run();
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Literary-device density scoring for Arabic texts", "balagha"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats = {"text", "json", "csv"};

  auto* score = app.add_subcommand("score", "Score a .balagha.json document");
  score->add_option("FILE", o.file, "Document")->required();
  score->add_option("--format", o.format, "text, json or csv")
      ->check(CLI::IsMember(formats));
  score->add_option("--lexicon", o.lexicon, "Extra exception lexicon (TSV)");

  auto* validate = app.add_subcommand("validate", "Check a document");
  validate->add_option("FILE", o.file, "Document")->required();
  validate->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* morphemes =
      app.add_subcommand("morphemes", "Show the rule-based morpheme breakdown");
  morphemes->add_option("FILE", o.file,
                        "Plain UTF-8 text, or a document ending in .json");
  morphemes->add_option("--text", o.text, "Inline text")
      ->each([&o](const std::string&) { o.text_given = true; });
  morphemes->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  morphemes->add_option("--lexicon", o.lexicon,
                        "Extra exception lexicon (TSV)");

  auto* taxonomy = app.add_subcommand("taxonomy", "Inspect the catalogue");
  taxonomy->require_subcommand(1);
  auto* list = taxonomy->add_subcommand("list", "Print devices");
  auto* exp = taxonomy->add_subcommand("export", "Write the catalogue as JSON");
  for (auto* sub : {list, exp}) {
    sub->add_option("--domain", o.domain, "A, B or C");
    sub->add_option("--part", o.part, "A to G (domain C only)");
  }
  exp->add_option("--output,-o", o.output, "Output path (default stdout)");

  auto* sim = app.add_subcommand("simulate", "Simulate assessor spread");
  sim->add_option("--counts", o.counts, "True device counts per text")
      ->capture_default_str();
  sim->add_option("--assessors", o.assessors)->capture_default_str();
  sim->add_option("--max-mark", o.max_mark, "2 or 10")->capture_default_str();
  sim->add_option("--spread", o.spread, "Generosity spread in [0,1]")
      ->capture_default_str();
  sim->add_option("--seed", o.seed)->capture_default_str();
  sim->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  sim->add_flag("--csv", o.csv, "Emit the score matrix as CSV");

  auto* batch = app.add_subcommand(
      "batch", "Score every .balagha.json under DIR into one CSV");
  batch->add_option("DIR", o.file, "Directory")->required();
  batch->add_option("--output,-o", o.output, "Output path (default stdout)");
  batch->add_option("--lexicon", o.lexicon, "Extra exception lexicon (TSV)");

  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--port", o.port, "Port (default $BALAGHA_PORT or 8080)")
      ->check(CLI::Range(1, 65535));
  serve->add_option("--host", o.host)->capture_default_str();
  serve->add_option("--lexicon", o.lexicon, "Extra exception lexicon (TSV)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (score->parsed()) return cmd_score(o, out, err);
    if (validate->parsed()) return cmd_validate(o, out, err);
    if (morphemes->parsed()) return cmd_morphemes(o, out, err);
    if (list->parsed()) return cmd_taxonomy_list(o, out, err);
    if (exp->parsed()) return cmd_taxonomy_export(o, out, err);
    if (sim->parsed()) return cmd_simulate(o, out, err);
    if (batch->parsed()) return cmd_batch(o, out, err);
    if (serve->parsed()) return cmd_serve(o, out, err);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitUsage;
}

}  // namespace balagha::cli
