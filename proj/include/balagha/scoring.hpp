#ifndef BALAGHA_SCORING_HPP
#define BALAGHA_SCORING_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "balagha/annotation.hpp"
#include "balagha/device_code.hpp"
#include "balagha/morphology.hpp"
#include "balagha/taxonomy.hpp"

namespace balagha {

// Fixed-point decimal with exactly five fractional digits.
class Decimal5 {
 public:
  static constexpr std::int64_t kScale = 100000;

  constexpr Decimal5() = default;
  static constexpr Decimal5 from_scaled(std::int64_t scaled) {
    Decimal5 d;
    d.scaled_ = scaled;
    return d;
  }

  constexpr std::int64_t scaled() const { return scaled_; }
  double to_double() const { return static_cast<double>(scaled_) / kScale; }

  // Always five decimals, e.g. "0.02174", "-0.10000".
  std::string str() const;

  friend constexpr auto operator<=>(Decimal5, Decimal5) = default;

 private:
  std::int64_t scaled_ = 0;
};

// total / morphemes rounded half away from zero to five decimals, computed
// exactly. Throws ZeroMorphemes when morphemes is 0.
Decimal5 compute_density(std::int64_t total_marks, std::int64_t morphemes);

struct DomainSums {
  std::int64_t a_sum = 0;
  std::int64_t b_sum = 0;
  std::int64_t c_sum = 0;

  friend bool operator==(const DomainSums&, const DomainSums&) = default;
};

struct DeviceTally {
  int occurrences = 0;
  std::int64_t mark_sum = 0;

  friend bool operator==(const DeviceTally&, const DeviceTally&) = default;
};

struct ScoreReport {
  std::string document_id;
  std::int64_t total_marks = 0;
  DomainSums domain_sums;
  std::int64_t morpheme_count = 0;
  MorphemeSource morpheme_source = MorphemeSource::kRuleBased;
  std::int64_t rule_based_morpheme_count = 0;
  Decimal5 density;
  std::string summary_text;
  std::map<DeviceCode, DeviceTally> per_device_tally;  // proforma order

  friend bool operator==(const ScoreReport&, const ScoreReport&) = default;
};

// "A{a} B{b} C{c} / {m}".
std::string render_summary(const ScoreReport& report);

// Validates, counts morphemes (the manual count wins when present) and sums
// marks per domain. Throws ValidationFailed or ZeroMorphemes.
ScoreReport score_document(const Document& doc, const Taxonomy& taxonomy,
                           const Segmenter& segmenter);
ScoreReport score_document(const Document& doc, const Taxonomy& taxonomy);

}  // namespace balagha

#endif  // BALAGHA_SCORING_HPP
