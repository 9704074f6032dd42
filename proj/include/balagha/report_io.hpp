#ifndef BALAGHA_REPORT_IO_HPP
#define BALAGHA_REPORT_IO_HPP

#include <string>
#include <vector>

#include "balagha/annotation.hpp"
#include "balagha/concordance.hpp"
#include "balagha/morphology.hpp"
#include "balagha/scoring.hpp"
#include "balagha/taxonomy.hpp"
#include "json.hpp"

// JSON, CSV and plain-text renderings shared by the CLI and the HTTP API.
namespace balagha::io {

using Json = nlohmann::ordered_json;

Json device_json(const Device& device);

// {"version", "device_count", "devices": [...]} in proforma order.
Json taxonomy_json(const Taxonomy& taxonomy, const DeviceFilter& filter = {});

// `density` is a JSON number; `density_text` carries the five-decimal form.
Json report_json(const ScoreReport& report);

// The scoring response shared by `score --format json` and POST /api/score:
// report_json plus a "warnings" array.
Json scored_json(const ScoreReport& report,
                 const std::vector<Diagnostic>& warnings);

Json diagnostic_json(const Diagnostic& diagnostic);
Json diagnostics_json(const std::vector<Diagnostic>& diagnostics);

Json morphemes_json(const MorphemeCount& count);

Json simulation_json(const SimulationConfig& config,
                     const SimulationResult& result);

// id,a_sum,b_sum,c_sum,total,morphemes,density
std::string report_csv_header();
std::string report_csv_row(const ScoreReport& report);

std::string report_text(const ScoreReport& report, const Taxonomy& taxonomy);
std::string diagnostic_text(const Diagnostic& diagnostic);
std::string morphemes_text(const MorphemeCount& count);
std::string taxonomy_text(const std::vector<const Device*>& devices);
std::string simulation_text(const SimulationConfig& config,
                            const SimulationResult& result);
std::string simulation_csv(const SimulationResult& result);

// RFC 4180 quoting when the field needs it.
std::string csv_field(const std::string& value);

}  // namespace balagha::io

#endif  // BALAGHA_REPORT_IO_HPP
