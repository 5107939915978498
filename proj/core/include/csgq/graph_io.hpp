#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "csgq/dataset.hpp"
#include "csgq/graph.hpp"

namespace csgq {

// Graph text format, one graph per file:
//
//   # optional comments
//   n 3
//   1 2 2
//   1 3 1
//   2 3 -5
//
// Header `n <count>` first, then one `<i> <j> <weight>` line per unordered
// pair with i < j, all pairs present exactly once. Weights are decimal
// literals and survive a write/read round-trip bit-exactly.

WeightedGraph read_graph(std::istream& in, const std::string& source = "<stream>");
WeightedGraph read_graph(const std::filesystem::path& path);

void write_graph(const WeightedGraph& g, std::ostream& out);
void write_graph(const WeightedGraph& g, const std::filesystem::path& path);

/// One file of a dataset directory: `n<NN>/graph_<idx>.txt`.
struct DatasetEntry {
  int n = 0;
  int index = 0;
  std::filesystem::path path;
};

/// Writes `dir/n<NN>/graph_<idx>.txt` for every generated graph and returns
/// the entries in generation order.
std::vector<DatasetEntry> write_dataset(const std::filesystem::path& dir,
                                        const DatasetConfig& cfg);

/// Scans a dataset directory; entries sorted by (n, index).
std::vector<DatasetEntry> list_dataset(const std::filesystem::path& dir);

}  // namespace csgq
