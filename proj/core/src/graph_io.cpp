#include "csgq/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "csgq/dataset.hpp"
#include "csgq/text.hpp"

namespace csgq {

namespace fs = std::filesystem;

WeightedGraph read_graph(std::istream& in, const std::string& source) {
  std::string line;
  int lineno = 0;
  std::optional<int> n;
  std::vector<std::tuple<int, int, double>> edges;
  std::vector<bool> seen;

  while (std::getline(in, line)) {
    ++lineno;
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;

    if (!n.has_value()) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw ParseError(source, lineno, "expected header 'n <count>'");
      }
      const auto count = parse_int(tokens[1]);
      if (!count || *count < 1) {
        throw ParseError(source, lineno, "invalid agent count");
      }
      n = static_cast<int>(*count);
      seen.assign(static_cast<std::size_t>(*n) * (*n - 1) / 2, false);
      continue;
    }

    if (tokens.size() != 3) {
      throw ParseError(source, lineno, "expected '<i> <j> <weight>'");
    }
    const auto i = parse_int(tokens[0]);
    const auto j = parse_int(tokens[1]);
    const auto w = parse_double(tokens[2]);
    if (!i || !j || !w) {
      throw ParseError(source, lineno, "malformed edge line");
    }
    if (*i < 1 || *j > *n || *i >= *j) {
      throw ParseError(source, lineno,
                       "edge endpoints must satisfy 1 <= i < j <= n");
    }
    // Same triangular indexing as WeightedGraph.
    const int row = static_cast<int>(*i) - 1;
    const std::size_t idx = row * (2 * *n - static_cast<int>(*i)) / 2 +
                            static_cast<int>(*j - *i) - 1;
    if (seen[idx]) {
      throw ParseError(source, lineno, "duplicate edge entry");
    }
    seen[idx] = true;
    edges.emplace_back(static_cast<int>(*i), static_cast<int>(*j), *w);
  }

  if (!n.has_value()) throw ParseError(source, lineno, "missing 'n' header");
  if (edges.size() != seen.size()) {
    for (int i = 1, k = 0; i <= *n; ++i) {
      for (int j = i + 1; j <= *n; ++j, ++k) {
        if (!seen[k]) {
          throw ValidationError(source + ": missing edge (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ")");
        }
      }
    }
  }
  return WeightedGraph::from_edges(*n, edges);
}

WeightedGraph read_graph(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return read_graph(in, path.string());
}

void write_graph(const WeightedGraph& g, std::ostream& out) {
  const int n = g.num_agents();
  out << "n " << n << "\n";
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out << i << " " << j << " " << format_double(g.weight(i, j)) << "\n";
    }
  }
}

void write_graph(const WeightedGraph& g, const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open " + path.string() + " for writing");
  write_graph(g, out);
}

std::vector<DatasetEntry> write_dataset(const fs::path& dir,
                                        const DatasetConfig& cfg) {
  const std::vector<WeightedGraph> graphs = generate_dataset(cfg);
  std::vector<DatasetEntry> entries;
  entries.reserve(graphs.size());
  std::size_t g = 0;
  for (int n : cfg.n_values) {
    std::ostringstream sub;
    sub << "n" << (n < 10 ? "0" : "") << n;
    const fs::path group = dir / sub.str();
    fs::create_directories(group);
    for (int idx = 0; idx < cfg.graphs_per_n; ++idx, ++g) {
      const fs::path file = group / ("graph_" + std::to_string(idx) + ".txt");
      write_graph(graphs[g], file);
      entries.push_back({n, idx, file});
    }
  }
  return entries;
}

std::vector<DatasetEntry> list_dataset(const fs::path& dir) {
  std::vector<DatasetEntry> entries;
  if (!fs::is_directory(dir)) {
    throw ValidationError("not a dataset directory: " + dir.string());
  }
  for (const auto& group : fs::directory_iterator(dir)) {
    if (!group.is_directory()) continue;
    const std::string name = group.path().filename().string();
    if (name.size() < 2 || name[0] != 'n') continue;
    const auto n = parse_int(std::string_view(name).substr(1));
    if (!n || *n < 1) continue;
    for (const auto& file : fs::directory_iterator(group.path())) {
      const std::string fname = file.path().filename().string();
      constexpr std::string_view prefix = "graph_";
      constexpr std::string_view suffix = ".txt";
      if (fname.size() <= prefix.size() + suffix.size()) continue;
      if (fname.rfind(prefix, 0) != 0 || !fname.ends_with(suffix)) continue;
      const auto idx = parse_int(std::string_view(fname).substr(
          prefix.size(), fname.size() - prefix.size() - suffix.size()));
      if (!idx) continue;
      entries.push_back(
          {static_cast<int>(*n), static_cast<int>(*idx), file.path()});
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const DatasetEntry& a, const DatasetEntry& b) {
              return std::tie(a.n, a.index) < std::tie(b.n, b.index);
            });
  return entries;
}

}  // namespace csgq
