#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "csgq/errors.hpp"

namespace csgq {

/// Agents are numbered 1..n in every public interface and file format.
using AgentId = int;

/// Complete undirected weighted graph over n agents. Weights are stored
/// packed in upper-triangular pair order (1,2),(1,3),...,(n-1,n), so a graph
/// always carries exactly n*(n-1)/2 pair weights and lookups are symmetric.
class WeightedGraph {
 public:
  /// All-zero weights.
  explicit WeightedGraph(int n);

  /// From packed upper-triangular weights; `packed.size()` must be n*(n-1)/2.
  WeightedGraph(int n, std::vector<double> packed);

  /// From an explicit edge list. Every unordered pair must appear exactly
  /// once; duplicates or missing pairs raise ValidationError.
  static WeightedGraph from_edges(
      int n, std::span<const std::tuple<int, int, double>> edges);

  int num_agents() const { return n_; }
  int num_pairs() const { return static_cast<int>(weights_.size()); }

  double weight(int i, int j) const;       // symmetric; i != j
  void set_weight(int i, int j, double w);

  double total_weight() const;    // sum over all pairs
  double sum_abs_weights() const; // sum of |w| over all pairs

  const std::vector<double>& packed() const { return weights_; }

  bool operator==(const WeightedGraph&) const = default;

 private:
  int pair_index(int i, int j) const;

  int n_;
  std::vector<double> weights_;
};

/// Non-empty set of agents, kept strictly ascending.
struct Coalition {
  std::vector<AgentId> members;

  Coalition() = default;
  explicit Coalition(std::vector<AgentId> m) : members(std::move(m)) {}

  int size() const { return static_cast<int>(members.size()); }
  bool operator==(const Coalition&) const = default;
};

/// Disjoint coalitions covering all agents 1..n.
struct CoalitionStructure {
  std::vector<Coalition> coalitions;

  CoalitionStructure() = default;
  explicit CoalitionStructure(std::vector<Coalition> cs)
      : coalitions(std::move(cs)) {}

  static CoalitionStructure grand(int n);
  static CoalitionStructure singletons(int n);

  int num_coalitions() const { return static_cast<int>(coalitions.size()); }
  bool operator==(const CoalitionStructure&) const = default;

  /// Members sorted within coalitions, coalitions sorted by smallest member.
  CoalitionStructure canonical() const;

  std::string to_string() const;  // e.g. "{{1,2},{3}}"
};

/// Maps each agent 1..n to the index of its coalition in `cs`.
/// Throws PartitionError if `cs` is not a partition of {1..n}.
std::vector<int> coalition_index(int n, const CoalitionStructure& cs);

/// V(CS): sum of intra-coalition pair weights. Singletons contribute 0.
double value(const WeightedGraph& g, const CoalitionStructure& cs);

/// Sum of pair weights crossing coalition boundaries.
/// Satisfies value + cut_weight = total_weight.
double cut_weight(const WeightedGraph& g, const CoalitionStructure& cs);

/// Complete graph over the coalition's agents relabeled 1..|c|, preserving
/// pair weights, plus the map position -> original id (map[p-1] is the
/// original id of relabeled agent p).
std::pair<WeightedGraph, std::vector<AgentId>> induced_subgraph(
    const WeightedGraph& g, const Coalition& c);

}  // namespace csgq
