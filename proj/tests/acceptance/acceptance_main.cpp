// Acceptance gate: one PASS/FAIL line per criterion, exit 1 on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "balagha/annotation.hpp"
#include "balagha/concordance.hpp"
#include "balagha/errors.hpp"
#include "balagha/morphology.hpp"
#include "balagha/scoring.hpp"
#include "balagha/taxonomy.hpp"
#include "balagha/utf8.hpp"
#include "support/generators.hpp"

using namespace balagha;

namespace {

constexpr double kReproductionSeconds = 1.0;
constexpr double kSimulationSeconds = 5.0;
constexpr double kCalibrationTolerance = 0.0005;  // printed values carry 3 decimals
constexpr int kSimulationSeeds = 50;
constexpr int kPropertyCases = 500;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string strip_spaces(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

Outcome sample_reproduction() {
  struct Row {
    const char* file;
    const char* density;
    const char* summary;
  };
  const std::vector<Row> rows = {
      {"sampleA", "0.02174", "A1 B0 C0 / 46"},
      {"sampleB", "0.10204", "A2 B2 C6 / 98"},
      {"sampleC", "0.10625", "A2 B10 C5 / 160"},
      {"sampleD", "0.27692", "A3 B6 C9 / 65"},
      {"sampleE", "0.58974", "A6 B7 C10 / 39"},
  };
  Outcome o;
  const auto start = Clock::now();
  for (const Row& row : rows) {
    const Document doc = parse_document(
        read_file(std::string(BALAGHA_FIXTURES) + "/" + row.file + ".balagha.json"));
    if (has_errors(validate_document(doc, load_taxonomy()))) {
      o.fail(std::string(row.file) + " has validation errors");
      continue;
    }
    const ScoreReport r = score_document(doc, load_taxonomy());
    if (r.density.str() != row.density) {
      o.fail(std::string(row.file) + " density " + r.density.str());
    }
    if (r.summary_text != row.summary ||
        strip_spaces(r.summary_text) != strip_spaces(row.summary)) {
      o.fail(std::string(row.file) + " summary " + r.summary_text);
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= kReproductionSeconds) o.fail("took " + fmt(elapsed) + " s");
  if (o.pass) o.detail = "5/5 exact in " + fmt(elapsed) + " s";
  return o;
}

Annotation mark_span(const std::string& text, const std::string& phrase,
                     const char* device) {
  const std::u32string hay = utf8::decode(text);
  const std::u32string needle = utf8::decode(phrase);
  const auto at = hay.find(needle);
  if (at == std::u32string::npos) throw std::runtime_error("phrase not in text");
  return {device, static_cast<std::int64_t>(at),
          static_cast<std::int64_t>(at + needle.size()), 1, std::nullopt};
}

Outcome calibration() {
  const std::string s1 = "مساحة بيتي 200 متر مربع.";
  const std::string s2 = "بيتي كبير جداً، مثل قصر.";
  const std::string s3 = "يستحق الشخص الناجح إقامة التي تعكس مكانته الاجتماعية.";
  std::vector<Document> docs(3);
  docs[0].id = "factual";
  docs[0].text = s1;
  docs[1].id = "figurative";
  docs[1].text = s2;
  docs[1].annotations = {mark_span(s2, "كبير", "A-14"),
                         mark_span(s2, "مثل قصر", "B-2")};
  docs[2].id = "evasive";
  docs[2].text = s3;
  docs[2].annotations = {mark_span(s3, s3.substr(0, s3.size() - 1), "CE-10"),
                         mark_span(s3, "الشخص الناجح", "A-13"),
                         mark_span(s3, "إقامة", "CA-3"),
                         mark_span(s3, "مكانته الاجتماعية", "B-4"),
                         mark_span(s3, "يستحق", "A-14"),
                         mark_span(s3, "يستحق الشخص الناجح", "CE-3")};

  const int counts[] = {6, 6, 9};
  const char* exact[] = {"0.00000", "0.33333", "0.66667"};
  const double printed[] = {0.0, 0.333, 0.667};
  Outcome o;
  std::string got;
  for (int i = 0; i < 3; ++i) {
    const Document& d = docs[static_cast<std::size_t>(i)];
    if (has_errors(validate_document(d, load_taxonomy()))) {
      o.fail(d.id + " has validation errors");
      continue;
    }
    const ScoreReport r = score_document(d, load_taxonomy());
    got += (i ? " " : "") + std::to_string(r.morpheme_count) + ":" + r.density.str();
    if (r.morpheme_count != counts[i]) {
      o.fail(d.id + " counted " + std::to_string(r.morpheme_count));
    }
    if (r.density.str() != exact[i] ||
        std::fabs(r.density.to_double() - printed[i]) > kCalibrationTolerance) {
      o.fail(d.id + " density " + r.density.str());
    }
  }
  if (o.pass) o.detail = got;
  return o;
}

Outcome cardinality() {
  const Taxonomy& t = load_taxonomy();
  Outcome o;
  if (t.devices().size() != 84) o.fail("device count " + std::to_string(t.devices().size()));
  const std::pair<Domain, std::size_t> domains[] = {
      {Domain::kA, 14}, {Domain::kB, 6}, {Domain::kC, 64}};
  for (const auto& [domain, n] : domains) {
    const auto got = t.list({domain, std::nullopt}).size();
    if (got != n) o.fail("domain size " + std::to_string(got));
  }
  const std::pair<Part, std::size_t> parts[] = {
      {Part::kA, 14}, {Part::kB, 5}, {Part::kC, 7}, {Part::kD, 7},
      {Part::kE, 22}, {Part::kF, 8}, {Part::kG, 1}};
  for (const auto& [part, n] : parts) {
    const auto got = t.list({Domain::kC, part}).size();
    if (got != n) o.fail("part size " + std::to_string(got));
  }
  int deduction = 0;
  for (const Device& d : t.devices()) {
    if (d.allowed_marks.contains(-1)) {
      ++deduction;
      if (d.code.str() != "CG-1" || d.allowed_marks != std::set<int>{-1, 0}) {
        o.fail(d.code.str() + " allows a deduction");
      }
    } else if (d.allowed_marks != std::set<int>{0, 1, 2}) {
      o.fail(d.code.str() + " marks " + format_marks(d.allowed_marks));
    }
  }
  if (deduction != 1) o.fail("deduction devices: " + std::to_string(deduction));
  if (o.pass) o.detail = "84 = 14+6+64, parts 14/5/7/7/22/8/1, CG-1 {-1,0}";
  return o;
}

Outcome assessor_ranges() {
  const std::vector<double> ten1 = {60, 70, 70, 90, 80, 70, 100, 80, 70, 80};
  const std::vector<double> ten2 = {40, 50, 70, 60, 70, 50, 40, 30, 60, 50};
  const std::vector<double> two1 = {10, 10, 20, 10, 10, 20, 10, 20, 10, 20};
  const std::vector<double> two2 = {0, 0, 10, 0, 0, 10, 0, 0, 10, 0};
  const SeparabilityReport ten = analyze_ranges(ten1, ten2);
  const SeparabilityReport two = analyze_ranges(two1, two2);
  Outcome o;
  if (!(ten.first.min == 60 && ten.first.max == 100 && ten.second.min == 30 &&
        ten.second.max == 70)) {
    o.fail("ten-point ranges");
  }
  if (ten.overlap_length != 10 || ten.separable) o.fail("ten-point overlap");
  if (!(two.first.min == 10 && two.first.max == 20 && two.second.min == 0 &&
        two.second.max == 10)) {
    o.fail("two-point ranges");
  }
  if (two.overlap_length != 0 || !two.separable) o.fail("two-point overlap");
  if (o.pass) {
    o.detail = "0-10 overlap " + fmt(ten.overlap_length, 0) + ", 0-2 separable";
  }
  return o;
}

Outcome simulation() {
  Outcome o;
  const auto start = Clock::now();
  double sum2 = 0;
  double sum10 = 0;
  for (int seed = 0; seed < kSimulationSeeds; ++seed) {
    SimulationConfig c;
    c.true_ld_counts = {10, 5};
    c.assessor_count = 10;
    c.generosity_spread = 0.6;
    c.seed = static_cast<std::uint64_t>(seed);
    c.max_mark = 2;
    sum2 += simulate(c).pairs.at(0).overlap_fraction;
    c.max_mark = 10;
    sum10 += simulate(c).pairs.at(0).overlap_fraction;
  }
  const double mean2 = sum2 / kSimulationSeeds;
  const double mean10 = sum10 / kSimulationSeeds;
  const double elapsed = seconds_since(start);
  if (!(mean2 <= mean10)) o.fail("mean overlap " + fmt(mean2) + " > " + fmt(mean10));
  if (elapsed >= kSimulationSeconds) o.fail("took " + fmt(elapsed) + " s");
  if (o.pass) {
    o.detail = std::to_string(kSimulationSeeds) + " seeds, mean overlap " +
               fmt(mean2) + " (0-2) <= " + fmt(mean10) + " (0-10) in " +
               fmt(elapsed) + " s";
  }
  return o;
}

// Empty when the document has no morphemes.
std::optional<ScoreReport> score_or_empty(const Document& d) {
  try {
    return score_document(d, load_taxonomy());
  } catch (const ZeroMorphemes&) {
    return std::nullopt;
  }
}

Outcome properties() {
  const Taxonomy& t = load_taxonomy();
  testing::Gen gen(2024);
  Outcome o;
  int round_trip = 0;
  int order = 0;
  int additive = 0;
  int diacritics = 0;
  int injected = 0;
  int caught = 0;
  const std::vector<std::string> unknown = {"Q-1", "A-15", "B-7", "CH-1",
                                            "CG-2", "cg-1", "", "CE15"};
  for (int i = 0; i < kPropertyCases; ++i) {
    const Document d = gen.document(t);
    if (parse_document(serialize_document(d)) == d) ++round_trip;

    Document shuffled = d;
    std::shuffle(shuffled.annotations.begin(), shuffled.annotations.end(),
                 gen.engine());
    if (score_or_empty(shuffled) == score_or_empty(d)) ++order;

    const std::string a = gen.arabic_text(0, 10);
    const std::string b = gen.arabic_text(0, 10);
    if (count_morphemes(a + " " + b).total ==
        count_morphemes(a).total + count_morphemes(b).total) {
      ++additive;
    }
    if (count_morphemes(gen.add_diacritics(a)).total == count_morphemes(a).total) {
      ++diacritics;
    }

    Document faulty = d;
    const auto length = static_cast<std::int64_t>(utf8::length(d.text));
    Annotation bad = gen.annotation(t, length);
    std::string expected;
    if (gen.chance(0.5)) {
      bad.mark = gen.chance(0.5) ? gen.range(3, 9) : gen.range(-9, -2);
      expected = "mark_out_of_range";
    } else {
      bad.device = gen.pick(unknown);
      expected = "unknown_device";
    }
    const auto at = static_cast<std::size_t>(
        gen.range(0, static_cast<int>(faulty.annotations.size())));
    faulty.annotations.insert(faulty.annotations.begin() + static_cast<long>(at), bad);
    ++injected;
    const auto diags = validate_document(faulty, t);
    if (std::any_of(diags.begin(), diags.end(), [&](const Diagnostic& x) {
          return x.severity == Severity::kError && x.code == expected &&
                 x.annotation_index == at;
        })) {
      ++caught;
    }
  }
  const auto check = [&](const char* name, int n) {
    if (n != kPropertyCases) {
      o.fail(std::string(name) + " " + std::to_string(n) + "/" +
             std::to_string(kPropertyCases));
    }
  };
  check("round-trip", round_trip);
  check("order invariance", order);
  check("additivity", additive);
  check("diacritic insensitivity", diacritics);
  if (caught != injected) {
    o.fail("faults caught " + std::to_string(caught) + "/" + std::to_string(injected));
  }
  if (o.pass) {
    o.detail = std::to_string(kPropertyCases) + " cases each, faults caught " +
               std::to_string(caught) + "/" + std::to_string(injected);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"five-sample density and summary reproduction", sample_reproduction},
      {"calibration sentence counts and densities", calibration},
      {"taxonomy cardinality", cardinality},
      {"assessor table range separability", assessor_ranges},
      {"narrow scale overlaps no more than wide scale", simulation},
      {"property suites", properties},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << "\n";
  }
  std::cout << (failures == 0 ? "all criteria met" : "criteria failed: " +
                                                         std::to_string(failures))
            << "\n";
  return failures == 0 ? 0 : 1;
}
