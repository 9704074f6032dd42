#include "balagha/concordance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "balagha/errors.hpp"

namespace balagha {

namespace {

ScoreRange range_of(std::span<const double> scores) {
  const auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
  const double sum = std::accumulate(scores.begin(), scores.end(), 0.0);
  return {*lo, *hi, sum / static_cast<double>(scores.size())};
}

}  // namespace

SeparabilityReport analyze_ranges(std::span<const double> first,
                                  std::span<const double> second) {
  if (first.empty() || second.empty()) {
    throw EmptyScores("score lists must be non-empty");
  }
  SeparabilityReport r;
  r.first = range_of(first);
  r.second = range_of(second);
  r.overlap_length =
      std::max(0.0, std::min(r.first.max, r.second.max) -
                        std::max(r.first.min, r.second.min));
  const double union_length = (r.first.max - r.first.min) +
                              (r.second.max - r.second.min) - r.overlap_length;
  r.overlap_fraction = union_length > 0 ? r.overlap_length / union_length : 0;
  r.separable = r.overlap_length == 0;
  return r;
}

void check_config(const SimulationConfig& config) {
  if (config.assessor_count < 2) {
    throw InvalidConfig("assessor_count must be at least 2");
  }
  if (config.true_ld_counts.empty()) {
    throw InvalidConfig("true_ld_counts must list at least one text");
  }
  for (int n : config.true_ld_counts) {
    if (n < 1) throw InvalidConfig("every true LD count must be at least 1");
  }
  if (config.max_mark != 2 && config.max_mark != 10) {
    throw InvalidConfig("max_mark must be 2 or 10");
  }
  if (!(config.generosity_spread >= 0 && config.generosity_spread <= 1)) {
    throw InvalidConfig("generosity_spread must lie in [0, 1]");
  }
}

int simulated_mark(double generosity, int max_mark, int jitter) {
  const double raw = 1 + generosity * (max_mark - 1) + jitter;
  return std::clamp(static_cast<int>(std::round(raw)), 1, max_mark);
}

SimulationResult simulate(const SimulationConfig& config) {
  check_config(config);
  const int n = config.assessor_count;
  const double lo = 0.5 - config.generosity_spread / 2;

  SimulationResult out;
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> jitter(-1, 1);
  for (int i = 0; i < n; ++i) {
    const double g = lo + config.generosity_spread * i / (n - 1);
    out.generosity.push_back(g);
    std::vector<int> row;
    for (int count : config.true_ld_counts) {
      int total = 0;
      for (int k = 0; k < count; ++k) {
        total += simulated_mark(g, config.max_mark,
                                config.jitter ? jitter(rng) : 0);
      }
      row.push_back(total);
    }
    out.scores.push_back(std::move(row));
  }

  for (std::size_t t = 0; t + 1 < config.true_ld_counts.size(); ++t) {
    std::vector<double> a;
    std::vector<double> b;
    for (const auto& row : out.scores) {
      a.push_back(row[t]);
      b.push_back(row[t + 1]);
    }
    out.pairs.push_back(analyze_ranges(a, b));
  }
  return out;
}

}  // namespace balagha
