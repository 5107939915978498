#pragma once

#include <cstdint>
#include <vector>

#include "csgq/graph.hpp"

namespace csgq {

enum class WeightDistribution { kUniform, kNormal };

/// Synthetic dataset configuration. Defaults mirror the benchmark layout:
/// 20 graphs for every even n from 4 to 28, integer weights uniform in
/// [-10, 10]. Mixed-sign integer weights keep the optimum non-trivial and
/// make oracle comparisons exact.
struct DatasetConfig {
  std::vector<int> n_values;
  int graphs_per_n = 20;
  WeightDistribution distribution = WeightDistribution::kUniform;
  double param_a = -10.0;  // uniform: lo, normal: mean
  double param_b = 10.0;   // uniform: hi, normal: stddev
  bool integer_weights = true;
  std::uint64_t seed = 0;

  static DatasetConfig defaults();
  void validate() const;  // throws ArgumentError
};

/// Generates graphs grouped by n in cfg order, `graphs_per_n` per group.
///
/// Pure function of cfg: one xoshiro256** stream seeded with cfg.seed,
/// weights drawn in fixed order (per graph, pairs (1,2),(1,3),...,(n-1,n)).
/// Uniform integer weights are drawn directly from the integer range
/// [ceil(lo), floor(hi)]; normal draws are rounded (half away from zero)
/// when integer_weights is set.
std::vector<WeightedGraph> generate_dataset(const DatasetConfig& cfg);

}  // namespace csgq
