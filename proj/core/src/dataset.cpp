#include "csgq/dataset.hpp"

#include <cmath>

#include "csgq/rng.hpp"

namespace csgq {

DatasetConfig DatasetConfig::defaults() {
  DatasetConfig cfg;
  for (int n = 4; n <= 28; n += 2) cfg.n_values.push_back(n);
  return cfg;
}

void DatasetConfig::validate() const {
  if (n_values.empty()) throw ArgumentError("n_values must be non-empty");
  for (int n : n_values) {
    if (n < 2) throw ArgumentError("every n must be >= 2");
  }
  if (graphs_per_n < 1) throw ArgumentError("graphs_per_n must be >= 1");
  if (distribution == WeightDistribution::kUniform && !(param_a < param_b)) {
    throw ArgumentError("uniform distribution requires lo < hi");
  }
  if (distribution == WeightDistribution::kNormal && param_b < 0) {
    throw ArgumentError("normal distribution requires stddev >= 0");
  }
}

std::vector<WeightedGraph> generate_dataset(const DatasetConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);

  const auto draw = [&]() -> double {
    if (cfg.distribution == WeightDistribution::kUniform) {
      if (cfg.integer_weights) {
        const long long lo = static_cast<long long>(std::ceil(cfg.param_a));
        const long long hi = static_cast<long long>(std::floor(cfg.param_b));
        return static_cast<double>(rng.uniform_int(lo, hi));
      }
      return rng.uniform(cfg.param_a, cfg.param_b);
    }
    const double x = rng.normal(cfg.param_a, cfg.param_b);
    return cfg.integer_weights ? static_cast<double>(std::llround(x)) : x;
  };

  std::vector<WeightedGraph> graphs;
  graphs.reserve(cfg.n_values.size() * cfg.graphs_per_n);
  for (int n : cfg.n_values) {
    for (int g = 0; g < cfg.graphs_per_n; ++g) {
      WeightedGraph graph(n);
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          graph.set_weight(i, j, draw());
        }
      }
      graphs.push_back(std::move(graph));
    }
  }
  return graphs;
}

}  // namespace csgq
