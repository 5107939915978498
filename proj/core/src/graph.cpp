#include "csgq/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace csgq {

namespace {

std::vector<double> zero_weights(int n) {
  if (n < 1) throw ArgumentError("agent count must be positive");
  return std::vector<double>(static_cast<std::size_t>(n) * (n - 1) / 2, 0.0);
}

}  // namespace

WeightedGraph::WeightedGraph(int n) : n_(n), weights_(zero_weights(n)) {}

WeightedGraph::WeightedGraph(int n, std::vector<double> packed)
    : n_(n), weights_(std::move(packed)) {
  if (n < 1) throw ArgumentError("agent count must be positive");
  const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (weights_.size() != expected) {
    throw ArgumentError("packed weight count does not match agent count");
  }
}

WeightedGraph WeightedGraph::from_edges(
    int n, std::span<const std::tuple<int, int, double>> edges) {
  WeightedGraph g(n);
  std::vector<bool> seen(g.weights_.size(), false);
  for (const auto& [i, j, w] : edges) {
    const int idx = g.pair_index(i, j);
    if (seen[idx]) {
      throw ValidationError("duplicate pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
    }
    seen[idx] = true;
    g.weights_[idx] = w;
  }
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (!seen[k]) throw ValidationError("incomplete edge set");
  }
  return g;
}

int WeightedGraph::pair_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n_ || i == j) {
    throw ArgumentError("invalid agent pair (" + std::to_string(i) + "," +
                        std::to_string(j) + ") for n=" + std::to_string(n_));
  }
  // Row-major upper triangle, 1-based agents.
  const int row = i - 1;
  return row * (2 * n_ - i) / 2 + (j - i - 1);
}

double WeightedGraph::weight(int i, int j) const {
  return weights_[pair_index(i, j)];
}

void WeightedGraph::set_weight(int i, int j, double w) {
  weights_[pair_index(i, j)] = w;
}

double WeightedGraph::total_weight() const {
  double s = 0;
  for (double w : weights_) s += w;
  return s;
}

double WeightedGraph::sum_abs_weights() const {
  double s = 0;
  for (double w : weights_) s += std::abs(w);
  return s;
}

CoalitionStructure CoalitionStructure::grand(int n) {
  Coalition c;
  c.members.resize(n);
  for (int i = 0; i < n; ++i) c.members[i] = i + 1;
  return CoalitionStructure({std::move(c)});
}

CoalitionStructure CoalitionStructure::singletons(int n) {
  std::vector<Coalition> cs;
  cs.reserve(n);
  for (int i = 1; i <= n; ++i) cs.push_back(Coalition({i}));
  return CoalitionStructure(std::move(cs));
}

CoalitionStructure CoalitionStructure::canonical() const {
  std::vector<Coalition> cs = coalitions;
  for (auto& c : cs) std::sort(c.members.begin(), c.members.end());
  std::sort(cs.begin(), cs.end(), [](const Coalition& a, const Coalition& b) {
    return a.members.front() < b.members.front();
  });
  return CoalitionStructure(std::move(cs));
}

std::string CoalitionStructure::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < coalitions.size(); ++k) {
    if (k > 0) out += ",";
    out += "{";
    for (std::size_t m = 0; m < coalitions[k].members.size(); ++m) {
      if (m > 0) out += ",";
      out += std::to_string(coalitions[k].members[m]);
    }
    out += "}";
  }
  out += "}";
  return out;
}

std::vector<int> coalition_index(int n, const CoalitionStructure& cs) {
  std::vector<int> index(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t k = 0; k < cs.coalitions.size(); ++k) {
    const Coalition& c = cs.coalitions[k];
    if (c.members.empty()) throw PartitionError("empty coalition");
    for (AgentId a : c.members) {
      if (a < 1 || a > n) {
        throw PartitionError("agent " + std::to_string(a) + " out of range");
      }
      if (index[a] != -1) {
        throw PartitionError("agent " + std::to_string(a) +
                             " appears in two coalitions");
      }
      index[a] = static_cast<int>(k);
    }
  }
  for (int a = 1; a <= n; ++a) {
    if (index[a] == -1) {
      throw PartitionError("agent " + std::to_string(a) + " is unassigned");
    }
  }
  return index;
}

double value(const WeightedGraph& g, const CoalitionStructure& cs) {
  coalition_index(g.num_agents(), cs);  // validation only
  double v = 0;
  for (const Coalition& c : cs.coalitions) {
    for (std::size_t a = 0; a < c.members.size(); ++a) {
      for (std::size_t b = a + 1; b < c.members.size(); ++b) {
        v += g.weight(c.members[a], c.members[b]);
      }
    }
  }
  return v;
}

double cut_weight(const WeightedGraph& g, const CoalitionStructure& cs) {
  const int n = g.num_agents();
  const std::vector<int> index = coalition_index(n, cs);
  double cut = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (index[i] != index[j]) cut += g.weight(i, j);
    }
  }
  return cut;
}

std::pair<WeightedGraph, std::vector<AgentId>> induced_subgraph(
    const WeightedGraph& g, const Coalition& c) {
  const int s = c.size();
  if (s < 1) throw ArgumentError("coalition must be non-empty");
  std::vector<AgentId> map = c.members;
  std::sort(map.begin(), map.end());
  for (int p = 0; p < s; ++p) {
    if (map[p] < 1 || map[p] > g.num_agents()) {
      throw ArgumentError("coalition member out of range");
    }
    if (p > 0 && map[p] == map[p - 1]) {
      throw ArgumentError("duplicate coalition member");
    }
  }
  WeightedGraph sub(s);
  for (int p = 1; p <= s; ++p) {
    for (int q = p + 1; q <= s; ++q) {
      sub.set_weight(p, q, g.weight(map[p - 1], map[q - 1]));
    }
  }
  return {std::move(sub), std::move(map)};
}

}  // namespace csgq
