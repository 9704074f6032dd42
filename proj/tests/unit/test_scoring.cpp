#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "balagha/errors.hpp"
#include "balagha/scoring.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using namespace balagha;

namespace {

// Independent oracle: six digits by long division, then round the sixth.
std::string density_oracle(long long total, long long morphemes) {
  const bool negative = total < 0;
  long long num = negative ? -total : total;
  std::string digits = std::to_string(num / morphemes);
  long long rem = num % morphemes;
  std::string frac;
  for (int i = 0; i < 6; ++i) {
    rem *= 10;
    frac += static_cast<char>('0' + rem / morphemes);
    rem %= morphemes;
  }
  // Half away from zero on the magnitude: the sixth digit decides.
  long long scaled = std::stoll(digits) * 100000 + std::stoll(frac.substr(0, 5));
  if (frac[5] >= '5') ++scaled;
  std::string f = std::to_string(scaled % 100000);
  f.insert(0, 5 - f.size(), '0');
  const std::string body = std::to_string(scaled / 100000) + "." + f;
  return (negative && scaled != 0 ? "-" : "") + body;
}

Document doc_with(std::vector<std::pair<std::string, int>> marks,
                  std::optional<std::int64_t> morphemes,
                  std::string text = "نص قصير") {
  Document d;
  d.id = "t";
  d.text = std::move(text);
  d.manual_morpheme_count = morphemes;
  for (auto& [code, mark] : marks) {
    d.annotations.push_back({code, 0, 0, mark, std::nullopt});
  }
  return d;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("Decimal5 rendering") {
  CHECK(Decimal5::from_scaled(0).str() == "0.00000");
  CHECK(Decimal5::from_scaled(2174).str() == "0.02174");
  CHECK(Decimal5::from_scaled(100000).str() == "1.00000");
  CHECK(Decimal5::from_scaled(-10000).str() == "-0.10000");
  CHECK(Decimal5::from_scaled(1234567).str() == "12.34567");
}

TEST_CASE("compute_density printed values") {
  CHECK(compute_density(1, 46).str() == "0.02174");
  CHECK(compute_density(0, 46).str() == "0.00000");
  CHECK(compute_density(18, 65).str() == "0.27692");
  CHECK(compute_density(10, 98).str() == "0.10204");
  CHECK(compute_density(17, 160).str() == "0.10625");
  CHECK(compute_density(23, 39).str() == "0.58974");
  CHECK(compute_density(13, 121).str() == "0.10744");
  CHECK(compute_density(2, 10).str() == "0.20000");
  CHECK_THROWS_AS(compute_density(1, 0), ZeroMorphemes);
}

TEST_CASE("compute_density rounds half away from zero at exact ties") {
  // 1/64 = 0.015625 is a tie at the sixth digit.
  CHECK(compute_density(1, 64).str() == "0.01563");
  CHECK(compute_density(-1, 64).str() == "-0.01563");
  CHECK(compute_density(1, 200000).str() == "0.00001");   // 0.000005
  CHECK(compute_density(-1, 200000).str() == "-0.00001");
  CHECK(compute_density(1, 200001).str() == "0.00000");
  CHECK(compute_density(-1, 3).str() == "-0.33333");
  CHECK(compute_density(2, 3).str() == "0.66667");
}

TEST_CASE("property: compute_density agrees with long division") {
  testing::Gen gen(31);
  for (int i = 0; i < 5000; ++i) {
    const long long total = gen.range(-500, 5000);
    const long long morphemes = gen.range(1, 100000);
    CAPTURE(total);
    CAPTURE(morphemes);
    CHECK(compute_density(total, morphemes).str() ==
          density_oracle(total, morphemes));
  }
}

TEST_CASE("score_document sums marks by domain") {
  const Taxonomy& t = load_taxonomy();
  const ScoreReport r = score_document(
      doc_with({{"A-1", 2}, {"A-11", 1}, {"CG-1", -1}}, 10), t);
  CHECK(r.total_marks == 2);
  CHECK(r.domain_sums == DomainSums{3, 0, -1});
  CHECK(r.density.str() == "0.20000");
  CHECK(r.summary_text == "A3 B0 C-1 / 10");
  CHECK(r.morpheme_source == MorphemeSource::kManualOverride);
  CHECK(r.rule_based_morpheme_count == 2);
  REQUIRE(r.per_device_tally.size() == 3);
  CHECK(r.per_device_tally.begin()->first.str() == "A-1");
  CHECK(r.per_device_tally.rbegin()->first.str() == "CG-1");
  CHECK(r.per_device_tally.at(*DeviceCode::parse("CG-1")) ==
        DeviceTally{1, -1});
}

TEST_CASE("the tally is in catalogue order and counts occurrences") {
  const Taxonomy& t = load_taxonomy();
  const ScoreReport r = score_document(
      doc_with({{"CE-15", 2}, {"A-2", 1}, {"CA-13", 1}, {"CA-13", 1},
                {"B-6", 0}, {"A-10", 1}},
               50),
      t);
  std::vector<std::string> order;
  for (const auto& [code, tally] : r.per_device_tally) order.push_back(code.str());
  CHECK(order == std::vector<std::string>{"A-2", "A-10", "B-6", "CA-13", "CE-15"});
  CHECK(r.per_device_tally.at(*DeviceCode::parse("CA-13")) == DeviceTally{2, 2});
  CHECK(r.per_device_tally.at(*DeviceCode::parse("B-6")) == DeviceTally{1, 0});
}

TEST_CASE("rule-based count is used without a manual count") {
  const Taxonomy& t = load_taxonomy();
  const ScoreReport r = score_document(
      doc_with({{"A-1", 1}, {"B-1", 1}}, std::nullopt,
               "بيتي كبير جداً، مثل قصر."),
      t);
  CHECK(r.morpheme_source == MorphemeSource::kRuleBased);
  CHECK(r.morpheme_count == 6);
  CHECK(r.density.str() == "0.33333");
  CHECK(r.summary_text == "A1 B1 C0 / 6");
}

TEST_CASE("scoring failures") {
  const Taxonomy& t = load_taxonomy();
  CHECK_THROWS_AS(score_document(doc_with({}, std::nullopt, "، ."), t),
                  ZeroMorphemes);
  try {
    score_document(doc_with({{"B-1", 3}, {"Q-1", 1}}, 10), t);
    FAIL("expected ValidationFailed");
  } catch (const ValidationFailed& e) {
    REQUIRE(e.diagnostics().size() == 2);
    CHECK(e.diagnostics()[0].code == "mark_out_of_range");
    CHECK(e.diagnostics()[1].code == "unknown_device");
  }
  // Warnings alone never block scoring.
  CHECK_NOTHROW(score_document(doc_with({{"B-1", 0}, {"CG-1", 0}}, 4), t));
}

TEST_CASE("render_summary formats without padding") {
  ScoreReport r;
  r.domain_sums = {0, 0, 0};
  r.morpheme_count = 46;
  CHECK(render_summary(r) == "A0 B0 C0 / 46");
  r.domain_sums = {3, 6, 9};
  r.morpheme_count = 65;
  CHECK(render_summary(r) == "A3 B6 C9 / 65");
}

TEST_CASE("fixture documents reproduce the published table") {
  const Taxonomy& t = load_taxonomy();
  const std::tuple<const char*, const char*, const char*> rows[] = {
      {"sampleA", "0.02174", "A1 B0 C0 / 46"},
      {"sampleB", "0.10204", "A2 B2 C6 / 98"},
      {"sampleC", "0.10625", "A2 B10 C5 / 160"},
      {"sampleD", "0.27692", "A3 B6 C9 / 65"},
      {"sampleE", "0.58974", "A6 B7 C10 / 39"},
  };
  for (const auto& [name, density, summary] : rows) {
    CAPTURE(name);
    const ScoreReport r = score_document(
        parse_document(slurp(std::string(BALAGHA_FIXTURES) + "/" + name +
                             ".balagha.json")),
        t);
    CHECK(r.density.str() == density);
    CHECK(r.summary_text == summary);
  }
}

TEST_CASE("property: partition and rounding bound") {
  const Taxonomy& t = load_taxonomy();
  testing::Gen gen(32);
  for (int i = 0; i < 300; ++i) {
    const Document d = gen.document(t);
    ScoreReport r;
    try {
      r = score_document(d, t);
    } catch (const ZeroMorphemes&) {
      CHECK_FALSE(d.manual_morpheme_count.has_value());
      continue;
    }
    const DomainSums& s = r.domain_sums;
    CHECK(s.a_sum + s.b_sum + s.c_sum == r.total_marks);
    long long mark_sum = 0;
    for (const auto& a : d.annotations) mark_sum += a.mark;
    CHECK(r.total_marks == mark_sum);
    // |density * m - total| < m * 5e-6, in scaled integers.
    const long long lhs =
        std::llabs(r.density.scaled() * r.morpheme_count - r.total_marks * 100000);
    CHECK(2 * lhs <= r.morpheme_count);
    CHECK(r.summary_text == render_summary(r));
  }
}

TEST_CASE("property: annotation order never changes the report") {
  const Taxonomy& t = load_taxonomy();
  testing::Gen gen(33);
  for (int i = 0; i < 200; ++i) {
    Document d = gen.document(t, 20);
    d.manual_morpheme_count = gen.range(1, 300);
    const ScoreReport base = score_document(d, t);
    for (int k = 0; k < 3; ++k) {
      std::shuffle(d.annotations.begin(), d.annotations.end(), gen.engine());
      CHECK(score_document(d, t) == base);
    }
  }
}

TEST_CASE("property: monotonicity under added marks") {
  const Taxonomy& t = load_taxonomy();
  testing::Gen gen(34);
  for (int i = 0; i < 200; ++i) {
    Document d = gen.document(t);
    d.manual_morpheme_count = gen.range(1, 5000);
    const Decimal5 before = score_document(d, t).density;

    Document up = d;
    Annotation plus = gen.annotation(t, 0);
    while (plus.device == "CG-1") plus = gen.annotation(t, 0);
    plus.mark = gen.range(1, 2);
    up.annotations.push_back(plus);
    CHECK(score_document(up, t).density > before);

    Document down = d;
    down.annotations.push_back({"CG-1", 0, 0, -1, std::nullopt});
    CHECK(score_document(down, t).density < before);
  }
}
