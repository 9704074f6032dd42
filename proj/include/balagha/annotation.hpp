#ifndef BALAGHA_ANNOTATION_HPP
#define BALAGHA_ANNOTATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "balagha/errors.hpp"
#include "balagha/taxonomy.hpp"

namespace balagha {

// A scored occurrence of one device over [start, end) in Unicode scalar
// offsets. Zero-width spans anchor whole-text devices at a position.
//
// The device is kept as written so that unknown codes survive parsing and
// are reported by validate_document rather than rejected as malformed.
struct Annotation {
  std::string device;
  std::int64_t start = 0;
  std::int64_t end = 0;
  std::int64_t mark = 0;
  std::optional<std::string> note;

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct Document {
  std::string id;
  std::map<std::string, std::string> metadata;
  std::string text;
  std::optional<std::int64_t> manual_morpheme_count;
  std::vector<Annotation> annotations;

  friend bool operator==(const Document&, const Document&) = default;
};

enum class Severity { kError, kWarning };

const char* to_string(Severity severity);

struct Diagnostic {
  Severity severity;
  std::string code;
  std::string message;
  std::optional<std::size_t> annotation_index;
  std::optional<std::pair<std::int64_t, std::int64_t>> span;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// Raised by scoring when validation reports errors.
class ValidationFailed : public Error {
 public:
  explicit ValidationFailed(std::vector<Diagnostic> diagnostics)
      : Error("document has validation errors"),
        diagnostics_(std::move(diagnostics)) {}
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// Diagnostic codes.
inline constexpr std::string_view kUnknownDevice = "unknown_device";
inline constexpr std::string_view kMarkOutOfRange = "mark_out_of_range";
inline constexpr std::string_view kSpanOutOfBounds = "span_out_of_bounds";
inline constexpr std::string_view kInvertedSpan = "inverted_span";
inline constexpr std::string_view kFigurativeDoubleScore =
    "figurative_double_score";
inline constexpr std::string_view kZeroMark = "zero_mark";
inline constexpr std::string_view kDeductionSign = "deduction_sign";

// Parses a `.balagha.json` document. Throws EncodingError for invalid UTF-8
// and FormatError for malformed JSON, unknown fields or mistyped values.
Document parse_document(std::string_view content);

// Canonical form: top-level keys id, metadata, text, manual_morpheme_count
// (when present), annotations; annotation keys device, start, end, mark,
// note (when present); metadata keys sorted. Two-space indent, trailing
// newline.
std::string serialize_document(const Document& doc);

// Checks a parsed document against the catalogue. Diagnostics come in
// annotation order; same-span figurative warnings are attached to the later
// annotation of each pair.
std::vector<Diagnostic> validate_document(const Document& doc,
                                          const Taxonomy& taxonomy);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

}  // namespace balagha

#endif  // BALAGHA_ANNOTATION_HPP
