#include "balagha/scoring.hpp"

#include <cstdlib>

#include "balagha/errors.hpp"

namespace balagha {

std::string Decimal5::str() const {
  const bool negative = scaled_ < 0;
  const std::uint64_t magnitude =
      negative ? 0 - static_cast<std::uint64_t>(scaled_)
               : static_cast<std::uint64_t>(scaled_);
  std::string frac = std::to_string(magnitude % kScale);
  frac.insert(0, 5 - frac.size(), '0');
  return (negative ? "-" : "") + std::to_string(magnitude / kScale) + "." +
         frac;
}

Decimal5 compute_density(std::int64_t total_marks, std::int64_t morphemes) {
  if (morphemes == 0) throw ZeroMorphemes();
  if (morphemes < 0) throw Error("morpheme count must be positive");
  const bool negative = total_marks < 0;
  const unsigned __int128 numerator =
      static_cast<unsigned __int128>(negative ? -static_cast<__int128>(total_marks)
                                              : total_marks) *
      Decimal5::kScale;
  const auto m = static_cast<unsigned __int128>(morphemes);
  unsigned __int128 q = numerator / m;
  if (2 * (numerator % m) >= m) ++q;
  const auto scaled = static_cast<std::int64_t>(q);
  return Decimal5::from_scaled(negative ? -scaled : scaled);
}

std::string render_summary(const ScoreReport& report) {
  const DomainSums& s = report.domain_sums;
  return "A" + std::to_string(s.a_sum) + " B" + std::to_string(s.b_sum) +
         " C" + std::to_string(s.c_sum) + " / " +
         std::to_string(report.morpheme_count);
}

ScoreReport score_document(const Document& doc, const Taxonomy& taxonomy,
                           const Segmenter& segmenter) {
  auto diagnostics = validate_document(doc, taxonomy);
  if (has_errors(diagnostics)) throw ValidationFailed(std::move(diagnostics));

  ScoreReport report;
  report.document_id = doc.id;
  report.rule_based_morpheme_count = segmenter.count(doc.text).total;
  if (doc.manual_morpheme_count) {
    report.morpheme_count = *doc.manual_morpheme_count;
    report.morpheme_source = MorphemeSource::kManualOverride;
  } else {
    report.morpheme_count = report.rule_based_morpheme_count;
    report.morpheme_source = MorphemeSource::kRuleBased;
  }
  if (report.morpheme_count == 0) throw ZeroMorphemes();

  for (const Annotation& a : doc.annotations) {
    const Device& device = taxonomy.get(a.device);
    switch (device.domain) {
      case Domain::kA:
        report.domain_sums.a_sum += a.mark;
        break;
      case Domain::kB:
        report.domain_sums.b_sum += a.mark;
        break;
      case Domain::kC:
        report.domain_sums.c_sum += a.mark;
        break;
    }
    DeviceTally& tally = report.per_device_tally[device.code];
    ++tally.occurrences;
    tally.mark_sum += a.mark;
  }
  const DomainSums& s = report.domain_sums;
  report.total_marks = s.a_sum + s.b_sum + s.c_sum;
  report.density = compute_density(report.total_marks, report.morpheme_count);
  report.summary_text = render_summary(report);
  return report;
}

ScoreReport score_document(const Document& doc, const Taxonomy& taxonomy) {
  static const Segmenter segmenter;
  return score_document(doc, taxonomy, segmenter);
}

}  // namespace balagha
