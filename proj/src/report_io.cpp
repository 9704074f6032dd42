#include "balagha/report_io.hpp"

#include <iomanip>
#include <sstream>

#include "balagha/utf8.hpp"

namespace balagha::io {

namespace {

std::string letter(Domain d) { return std::string(1, domain_letter(d)); }

// Left-aligns to `width` scalars, keeping at least one space.
std::string pad(const std::string& s, std::size_t width) {
  const std::size_t n = utf8::length(s);
  return s + std::string(n < width ? width - n : 1, ' ');
}

}  // namespace

Json device_json(const Device& d) {
  Json j;
  j["code"] = d.code.str();
  j["name_en"] = d.name_en;
  j["name_ar"] = d.name_ar;
  j["domain"] = letter(d.domain);
  j["part"] = d.part ? Json(std::string(1, part_letter(*d.part))) : Json();
  j["allowed_marks"] = Json(std::vector<int>(d.allowed_marks.begin(),
                                             d.allowed_marks.end()));
  j["multiplicity_note"] =
      d.multiplicity_note ? Json(*d.multiplicity_note) : Json();
  j["definition_summary"] = d.definition_summary;
  j["deep_link_slug"] = d.deep_link_slug;
  return j;
}

Json taxonomy_json(const Taxonomy& taxonomy, const DeviceFilter& filter) {
  Json devices = Json::array();
  for (const Device* d : taxonomy.list(filter)) devices.push_back(device_json(*d));
  Json j;
  j["version"] = taxonomy.version();
  j["device_count"] = devices.size();
  j["devices"] = std::move(devices);
  return j;
}

Json report_json(const ScoreReport& r) {
  Json j;
  j["document_id"] = r.document_id;
  j["total_marks"] = r.total_marks;
  j["domain_sums"] = {{"a_sum", r.domain_sums.a_sum},
                      {"b_sum", r.domain_sums.b_sum},
                      {"c_sum", r.domain_sums.c_sum}};
  j["morpheme_count"] = r.morpheme_count;
  j["morpheme_source"] = to_string(r.morpheme_source);
  j["rule_based_morpheme_count"] = r.rule_based_morpheme_count;
  j["density"] = r.density.to_double();
  j["density_text"] = r.density.str();
  j["summary_text"] = r.summary_text;
  Json tally = Json::array();
  for (const auto& [code, t] : r.per_device_tally) {
    tally.push_back({{"device", code.str()},
                     {"occurrences", t.occurrences},
                     {"mark_sum", t.mark_sum}});
  }
  j["per_device_tally"] = std::move(tally);
  return j;
}

Json scored_json(const ScoreReport& report,
                 const std::vector<Diagnostic>& warnings) {
  Json j = report_json(report);
  j["warnings"] = diagnostics_json(warnings);
  return j;
}

Json diagnostic_json(const Diagnostic& d) {
  Json j;
  j["severity"] = to_string(d.severity);
  j["code"] = d.code;
  j["message"] = d.message;
  if (d.annotation_index) {
    Json loc;
    loc["annotation_index"] = *d.annotation_index;
    if (d.span) loc["span"] = {d.span->first, d.span->second};
    j["location"] = std::move(loc);
  } else {
    j["location"] = nullptr;
  }
  return j;
}

Json diagnostics_json(const std::vector<Diagnostic>& diagnostics) {
  Json out = Json::array();
  for (const Diagnostic& d : diagnostics) out.push_back(diagnostic_json(d));
  return out;
}

Json morphemes_json(const MorphemeCount& count) {
  Json tokens = Json::array();
  for (const MorphemeBreakdown& b : count.breakdowns) {
    Json segments = Json::array();
    for (const Segment& s : b.segments) {
      segments.push_back(
          {{"text", s.text}, {"kind", to_string(s.kind)}, {"counted", s.counted}});
    }
    Json t;
    t["surface"] = b.token.surface;
    t["start"] = b.token.start;
    t["end"] = b.token.end;
    t["kind"] = to_string(b.token.kind);
    t["count"] = b.token_count;
    t["segments"] = std::move(segments);
    tokens.push_back(std::move(t));
  }
  Json j;
  j["total"] = count.total;
  j["source"] = to_string(count.source);
  j["tokens"] = std::move(tokens);
  return j;
}

Json simulation_json(const SimulationConfig& config,
                     const SimulationResult& result) {
  Json pairs = Json::array();
  for (const SeparabilityReport& p : result.pairs) {
    auto range = [](const ScoreRange& r) {
      return Json{{"min", r.min}, {"max", r.max}, {"mean", r.mean}};
    };
    pairs.push_back({{"first", range(p.first)},
                     {"second", range(p.second)},
                     {"overlap_length", p.overlap_length},
                     {"overlap_fraction", p.overlap_fraction},
                     {"separable", p.separable}});
  }
  Json j;
  j["true_ld_counts"] = config.true_ld_counts;
  j["assessor_count"] = config.assessor_count;
  j["max_mark"] = config.max_mark;
  j["generosity_spread"] = config.generosity_spread;
  j["seed"] = config.seed;
  j["generosity"] = result.generosity;
  j["scores"] = result.scores;
  j["pairs"] = std::move(pairs);
  return j;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string report_csv_header() {
  return "id,a_sum,b_sum,c_sum,total,morphemes,density\n";
}

std::string report_csv_row(const ScoreReport& r) {
  std::ostringstream out;
  out << csv_field(r.document_id) << ',' << r.domain_sums.a_sum << ','
      << r.domain_sums.b_sum << ',' << r.domain_sums.c_sum << ','
      << r.total_marks << ',' << r.morpheme_count << ',' << r.density.str()
      << '\n';
  return out.str();
}

std::string report_text(const ScoreReport& r, const Taxonomy& taxonomy) {
  std::ostringstream out;
  out << std::left;
  out << std::setw(14) << "Document" << r.document_id << '\n';
  out << std::setw(14) << "Density" << r.density.str() << '\n';
  out << std::setw(14) << "Summary" << r.summary_text << '\n';
  out << std::setw(14) << "Total marks" << r.total_marks << '\n';
  out << std::setw(14) << "Morphemes" << r.morpheme_count << " ("
      << to_string(r.morpheme_source) << "; rule-based "
      << r.rule_based_morpheme_count << ")\n";
  if (!r.per_device_tally.empty()) {
    out << '\n'
        << std::setw(8) << "Device" << std::setw(44) << "Name"
        << std::setw(13) << "Occurrences"
        << "Marks\n";
    for (const auto& [code, t] : r.per_device_tally) {
      out << pad(code.str(), 8) << pad(taxonomy.get(code).name_en, 44)
          << std::setw(13) << t.occurrences << t.mark_sum << '\n';
    }
  }
  return out.str();
}

std::string diagnostic_text(const Diagnostic& d) {
  std::ostringstream out;
  out << to_string(d.severity) << ": ";
  if (d.annotation_index) out << "annotation " << *d.annotation_index << ": ";
  out << d.message << " [" << d.code << "]";
  return out.str();
}

std::string morphemes_text(const MorphemeCount& count) {
  std::ostringstream out;
  for (const MorphemeBreakdown& b : count.breakdowns) {
    out << b.token.surface << '\t';
    for (std::size_t i = 0; i < b.segments.size(); ++i) {
      const Segment& s = b.segments[i];
      if (i) out << " + ";
      out << s.text;
      if (!s.counted) out << "(uncounted)";
    }
    out << '\t' << b.token_count << '\n';
  }
  out << "total\t" << count.total << '\n';
  return out.str();
}

std::string taxonomy_text(const std::vector<const Device*>& devices) {
  std::ostringstream out;
  out << std::left;
  for (const Device* d : devices) {
    out << pad(d->code.str(), 7) << pad(d->name_en, 44)
        << pad(format_marks(d->allowed_marks), 10) << d->name_ar << '\n';
  }
  return out.str();
}

std::string simulation_text(const SimulationConfig& config,
                            const SimulationResult& result) {
  std::ostringstream out;
  out << "max mark " << config.max_mark << ", " << config.assessor_count
      << " assessors, spread " << config.generosity_spread << ", seed "
      << config.seed << "\n\n";
  out << std::left << std::setw(10) << "Assessor" << std::setw(12)
      << "Generosity";
  for (std::size_t t = 0; t < config.true_ld_counts.size(); ++t) {
    out << std::setw(10) << ("Text " + std::to_string(t + 1));
  }
  out << '\n';
  for (std::size_t i = 0; i < result.scores.size(); ++i) {
    std::ostringstream g;
    g << std::fixed << std::setprecision(3) << result.generosity[i];
    out << std::setw(10) << (i + 1) << std::setw(12) << g.str();
    for (int s : result.scores[i]) out << std::setw(10) << s;
    out << '\n';
  }
  for (std::size_t p = 0; p < result.pairs.size(); ++p) {
    const SeparabilityReport& r = result.pairs[p];
    out << "\nText " << p + 1 << " vs text " << p + 2 << ": ranges ["
        << r.first.min << "," << r.first.max << "] and [" << r.second.min
        << "," << r.second.max << "], overlap " << r.overlap_length
        << " (fraction " << std::fixed << std::setprecision(4)
        << r.overlap_fraction << std::defaultfloat << "), "
        << (r.separable ? "separable" : "not separable") << '\n';
  }
  return out.str();
}

std::string simulation_csv(const SimulationResult& result) {
  std::ostringstream out;
  out << "assessor,generosity";
  const std::size_t texts = result.scores.empty() ? 0 : result.scores[0].size();
  for (std::size_t t = 0; t < texts; ++t) out << ",text" << t + 1;
  out << '\n';
  for (std::size_t i = 0; i < result.scores.size(); ++i) {
    out << i + 1 << ',' << result.generosity[i];
    for (int s : result.scores[i]) out << ',' << s;
    out << '\n';
  }
  return out.str();
}

}  // namespace balagha::io
