#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace oversmooth {

/// Undirected simple graph in compressed sparse adjacency form, immutable
/// once built. No stored self-loops and no duplicate edges; the self-loops
/// used by the spectral operators are added there, never here.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Node count is max(min_nodes, 1 + largest id).
  /// Duplicate edges (in either orientation) collapse to one; self-loops are
  /// rejected. Throws std::invalid_argument on bad input.
  static Graph from_edge_pairs(int min_nodes,
                               const std::vector<std::pair<int, int>>& edges);

  int node_count() const { return n_; }
  long edge_count() const { return edge_count_; }

  std::span<const int> neighbors(int v) const {
    return {targets_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }

  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  const std::vector<int>& degrees() const { return degrees_; }

  /// Unique undirected edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edge_pairs() const;

 private:
  int n_ = 0;
  long edge_count_ = 0;
  std::vector<int> offsets_;
  std::vector<int> targets_;
  std::vector<int> degrees_;
};

enum class GraphFamily {
  ErdosRenyi,
  WattsStrogatz,
  Star,
  Path,
  Cycle,
  Complete,
  Karate,
};

struct GeneratorSpec {
  GraphFamily family = GraphFamily::Path;
  int n = 1;
  double edge_probability = 0.0;   // ErdosRenyi p
  int ring_degree = 0;             // WattsStrogatz k, even and < n
  double rewire_probability = 0.0; // WattsStrogatz beta
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument
};

/// Parses the CLI mini-grammar: "er:50,0.2", "ws:50,4,0.1", "star:34",
/// "path:3", "cycle:10", "complete:5", "karate". The seed comes from the
/// caller, never from the string.
GeneratorSpec parse_generator_spec(const std::string& text, std::uint64_t seed);

/// Deterministic for a fixed spec, seed included.
Graph generate(const GeneratorSpec& spec);

/// Whitespace-separated integer pairs, one edge per line; '#' starts a
/// comment; blank lines ignored. Self-loops and malformed lines are errors,
/// as is input with no edges at all.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

struct ComponentPartition {
  std::vector<int> component_id;  // labels contiguous from 0
  int component_count = 0;
};
ComponentPartition connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Max over node pairs of shortest-path length, by BFS from every node.
/// Throws std::invalid_argument on disconnected input.
int diameter(const Graph& g);

struct DegreeStats {
  int d_max = 0;
  std::vector<long> histogram;  // histogram[d] = number of nodes of degree d
};
DegreeStats degree_stats(const Graph& g);

/// Zachary's karate club, the standard 34-node, 78-edge version, vendored
/// as a constant fixture.
const std::vector<std::pair<int, int>>& karate_edges();

}  // namespace oversmooth
