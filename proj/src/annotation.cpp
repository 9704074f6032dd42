#include "balagha/annotation.hpp"

#include <algorithm>
#include <cstdint>

#include "balagha/utf8.hpp"
#include "json.hpp"

namespace balagha {

using nlohmann::json;
using nlohmann::ordered_json;

const char* to_string(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

namespace {

constexpr std::string_view kDocumentFields[] = {
    "id", "metadata", "text", "manual_morpheme_count", "annotations"};
constexpr std::string_view kAnnotationFields[] = {"device", "start", "end",
                                                  "mark", "note"};

template <std::size_t N>
void reject_unknown_fields(const json& object,
                           const std::string_view (&allowed)[N],
                           const std::string& path) {
  for (const auto& [key, value] : object.items()) {
    if (std::find(std::begin(allowed), std::end(allowed), key) ==
        std::end(allowed)) {
      const std::string field = path.empty() ? key : path + "." + key;
      throw FormatError("unknown field '" + field + "'", std::nullopt,
                        std::nullopt, field);
    }
  }
}

[[noreturn]] void type_error(const std::string& field,
                             const std::string& expected) {
  throw FormatError("field '" + field + "' must be " + expected, std::nullopt,
                    std::nullopt, field);
}

const json& required(const json& object, const char* key,
                     const std::string& path) {
  const auto it = object.find(key);
  if (it == object.end()) {
    const std::string field = path.empty() ? key : path + "." + key;
    throw FormatError("missing field '" + field + "'", std::nullopt,
                      std::nullopt, field);
  }
  return *it;
}

std::string as_string(const json& value, const std::string& field) {
  if (!value.is_string()) type_error(field, "a string");
  return value.get<std::string>();
}

std::int64_t as_integer(const json& value, const std::string& field) {
  if (!value.is_number_integer()) type_error(field, "an integer");
  if (value.is_number_unsigned() &&
      value.get<std::uint64_t>() >
          static_cast<std::uint64_t>(INT64_MAX)) {
    type_error(field, "an integer in 64-bit range");
  }
  return value.get<std::int64_t>();
}

// 1-based line and column (in scalars) of the byte before `byte_pos`.
std::pair<std::size_t, std::size_t> locate(std::string_view content,
                                           std::size_t byte_pos) {
  const std::size_t upto = std::min(byte_pos > 0 ? byte_pos - 1 : 0,
                                    content.size());
  std::size_t line = 1;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < upto; ++i) {
    if (content[i] == '\n') {
      ++line;
      line_start = i + 1;
    }
  }
  std::size_t column = 1;
  for (std::size_t i = line_start; i < upto; ++i) {
    if ((static_cast<unsigned char>(content[i]) & 0xC0) != 0x80) ++column;
  }
  return {line, column};
}

Annotation parse_annotation(const json& value, std::size_t index) {
  const std::string path = "annotations[" + std::to_string(index) + "]";
  if (!value.is_object()) type_error(path, "an object");
  reject_unknown_fields(value, kAnnotationFields, path);
  Annotation a;
  a.device = as_string(required(value, "device", path), path + ".device");
  a.start = as_integer(required(value, "start", path), path + ".start");
  a.end = as_integer(required(value, "end", path), path + ".end");
  a.mark = as_integer(required(value, "mark", path), path + ".mark");
  if (const auto it = value.find("note"); it != value.end()) {
    a.note = as_string(*it, path + ".note");
  }
  return a;
}

}  // namespace

Document parse_document(std::string_view content) {
  if (const std::size_t bad = utf8::find_invalid(content);
      bad != std::string_view::npos) {
    throw EncodingError("invalid UTF-8 at byte " + std::to_string(bad), bad);
  }
  json root;
  try {
    root = json::parse(content);
  } catch (const json::parse_error& e) {
    const auto [line, column] = locate(content, e.byte);
    throw FormatError("malformed JSON at line " + std::to_string(line) +
                          ", column " + std::to_string(column),
                      line, column);
  }
  if (!root.is_object()) type_error("(root)", "an object");
  reject_unknown_fields(root, kDocumentFields, "");

  Document doc;
  doc.id = as_string(required(root, "id", ""), "id");
  doc.text = as_string(required(root, "text", ""), "text");
  if (const auto it = root.find("metadata"); it != root.end()) {
    if (!it->is_object()) type_error("metadata", "an object");
    for (const auto& [key, value] : it->items()) {
      doc.metadata[key] = as_string(value, "metadata." + key);
    }
  }
  if (const auto it = root.find("manual_morpheme_count"); it != root.end()) {
    const std::int64_t n = as_integer(*it, "manual_morpheme_count");
    if (n <= 0) type_error("manual_morpheme_count", "a positive integer");
    doc.manual_morpheme_count = n;
  }
  const json& annotations = required(root, "annotations", "");
  if (!annotations.is_array()) type_error("annotations", "an array");
  for (std::size_t i = 0; i < annotations.size(); ++i) {
    doc.annotations.push_back(parse_annotation(annotations[i], i));
  }
  return doc;
}

std::string serialize_document(const Document& doc) {
  ordered_json root;
  root["id"] = doc.id;
  ordered_json metadata = ordered_json::object();
  for (const auto& [key, value] : doc.metadata) metadata[key] = value;
  root["metadata"] = std::move(metadata);
  root["text"] = doc.text;
  if (doc.manual_morpheme_count) {
    root["manual_morpheme_count"] = *doc.manual_morpheme_count;
  }
  ordered_json annotations = ordered_json::array();
  for (const Annotation& a : doc.annotations) {
    ordered_json item;
    item["device"] = a.device;
    item["start"] = a.start;
    item["end"] = a.end;
    item["mark"] = a.mark;
    if (a.note) item["note"] = *a.note;
    annotations.push_back(std::move(item));
  }
  root["annotations"] = std::move(annotations);
  return root.dump(2) + "\n";
}

std::vector<Diagnostic> validate_document(const Document& doc,
                                          const Taxonomy& taxonomy) {
  std::vector<Diagnostic> out;
  const auto text_length = static_cast<std::int64_t>(utf8::length(doc.text));
  std::vector<const Device*> devices;
  devices.reserve(doc.annotations.size());

  for (std::size_t i = 0; i < doc.annotations.size(); ++i) {
    const Annotation& a = doc.annotations[i];
    const std::pair span{a.start, a.end};
    auto emit = [&](Severity severity, std::string_view code,
                    std::string message) {
      out.push_back({severity, std::string(code), std::move(message), i, span});
    };
    const std::string where = "[" + std::to_string(a.start) + "," +
                              std::to_string(a.end) + ")";

    const Device* device = taxonomy.find(a.device);
    devices.push_back(device);
    if (!device) {
      emit(Severity::kError, kUnknownDevice,
           "unknown device code '" + a.device + "'");
    }
    if (a.start > a.end) {
      emit(Severity::kError, kInvertedSpan,
           "span " + where + " starts after it ends");
    }
    if (a.start < 0 || a.end < 0 || a.start > text_length ||
        a.end > text_length) {
      emit(Severity::kError, kSpanOutOfBounds,
           "span " + where + " out of bounds for text of length " +
               std::to_string(text_length));
    }
    if (device && (a.mark < INT32_MIN || a.mark > INT32_MAX ||
                   !device->allowed_marks.contains(static_cast<int>(a.mark)))) {
      emit(Severity::kError, kMarkOutOfRange,
           "mark " + std::to_string(a.mark) + " outside " +
               format_marks(device->allowed_marks));
    }
    if (device && device->code.str() == "CG-1" && a.mark != 0 &&
        a.mark != -1) {
      emit(Severity::kWarning, kDeductionSign,
           "CG-1 deducts; expected mark -1 or 0, got " +
               std::to_string(a.mark));
    }
    if (a.mark == 0) {
      emit(Severity::kWarning, kZeroMark, "mark 0 contributes nothing");
    }
    if (device && device->domain == Domain::kB && a.mark != 0) {
      for (std::size_t j = 0; j < i; ++j) {
        const Annotation& earlier = doc.annotations[j];
        if (devices[j] && devices[j]->domain == Domain::kB &&
            earlier.mark != 0 && earlier.start == a.start &&
            earlier.end == a.end) {
          emit(Severity::kWarning, kFigurativeDoubleScore,
               "figurative speech scored twice on span " + where + " (" +
                   earlier.device + " and " + a.device + ")");
          break;
        }
      }
    }
  }
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) {
                       return d.severity == Severity::kError;
                     });
}

}  // namespace balagha
