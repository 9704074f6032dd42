#ifndef BALAGHA_CONCORDANCE_HPP
#define BALAGHA_CONCORDANCE_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace balagha {

struct ScoreRange {
  double min = 0;
  double max = 0;
  double mean = 0;

  friend bool operator==(const ScoreRange&, const ScoreRange&) = default;
};

struct SeparabilityReport {
  ScoreRange first;
  ScoreRange second;
  double overlap_length = 0;
  double overlap_fraction = 0;  // overlap over the union of both ranges
  bool separable = true;        // touching endpoints count as separable

  friend bool operator==(const SeparabilityReport&,
                         const SeparabilityReport&) = default;
};

// Throws EmptyScores when either list is empty.
SeparabilityReport analyze_ranges(std::span<const double> first,
                                  std::span<const double> second);

struct SimulationConfig {
  std::vector<int> true_ld_counts;
  int assessor_count = 10;
  int max_mark = 2;
  double generosity_spread = 0.6;
  std::uint64_t seed = 0;
  bool jitter = true;  // false fixes every jitter draw at 0
};

struct SimulationResult {
  std::vector<double> generosity;          // per assessor
  std::vector<std::vector<int>> scores;    // [assessor][text]
  std::vector<SeparabilityReport> pairs;   // adjacent texts (0,1), (1,2), ...
};

// Throws InvalidConfig unless assessor_count >= 2, every count >= 1,
// max_mark is 2 or 10 and the spread lies in [0, 1].
void check_config(const SimulationConfig& config);

// The mark one assessor awards one device: 1 + g * (max_mark - 1) plus a
// jitter in {-1, 0, 1}, rounded half away from zero and clamped to
// [1, max_mark].
int simulated_mark(double generosity, int max_mark, int jitter);

// Deterministic for a fixed config. Each assessor's text score is the sum of
// simulated_mark over the text's true device count; jitter is drawn per
// device from a generator seeded with config.seed.
SimulationResult simulate(const SimulationConfig& config);

}  // namespace balagha

#endif  // BALAGHA_CONCORDANCE_HPP
