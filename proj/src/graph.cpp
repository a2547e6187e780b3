#include "oversmooth/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace oversmooth {

Graph Graph::from_edge_pairs(int min_nodes,
                             const std::vector<std::pair<int, int>>& edges) {
  if (min_nodes < 0) {
    throw std::invalid_argument("Graph: negative node count");
  }
  int n = min_nodes;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0) {
      throw std::invalid_argument("Graph: negative node id");
    }
    if (u == v) {
      throw std::invalid_argument(
          "Graph: self-loop on node " + std::to_string(u) +
          " (self-loops are added by the spectral operators, not stored)");
    }
    n = std::max(n, std::max(u, v) + 1);
  }
  if (n < 1) {
    throw std::invalid_argument("Graph: at least one node required");
  }

  std::vector<std::pair<int, int>> canon;
  canon.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  Graph g;
  g.n_ = n;
  g.edge_count_ = static_cast<long>(canon.size());
  g.degrees_.assign(n, 0);
  for (const auto& [u, v] : canon) {
    ++g.degrees_[u];
    ++g.degrees_[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + g.degrees_[i];
  g.targets_.assign(g.offsets_[n], 0);
  std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : canon) {
    g.targets_[cursor[u]++] = v;
    g.targets_[cursor[v]++] = u;
  }
  for (int i = 0; i < n; ++i) {
    std::sort(g.targets_.begin() + g.offsets_[i],
              g.targets_.begin() + g.offsets_[i + 1]);
  }
  return g;
}

std::vector<std::pair<int, int>> Graph::edge_pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph load_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    long long u, v;
    if (!(fields >> u)) continue;  // blank or comment-only line
    if (!(fields >> v)) {
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": expected two node ids");
    }
    std::string rest;
    if (fields >> rest) {
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": trailing content '" + rest + "'");
    }
    if (u < 0 || v < 0) {
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": negative node id");
    }
    if (u == v) {
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": self-loop on node " + std::to_string(u));
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (edges.empty()) {
    throw std::invalid_argument("edge list: no edges found");
  }
  return Graph::from_edge_pairs(0, edges);
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open edge list file: " + path);
  }
  return load_edge_list(in);
}

ComponentPartition connected_components(const Graph& g) {
  ComponentPartition part;
  part.component_id.assign(g.node_count(), -1);
  int next = 0;
  std::queue<int> frontier;
  for (int start = 0; start < g.node_count(); ++start) {
    if (part.component_id[start] >= 0) continue;
    part.component_id[start] = next;
    frontier.push(start);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int v : g.neighbors(u)) {
        if (part.component_id[v] < 0) {
          part.component_id[v] = next;
          frontier.push(v);
        }
      }
    }
    ++next;
  }
  part.component_count = next;
  return part;
}

bool is_connected(const Graph& g) {
  return connected_components(g).component_count == 1;
}

namespace {

// Eccentricity of `start`, or -1 if some node is unreachable.
int bfs_eccentricity(const Graph& g, int start, std::vector<int>& dist) {
  dist.assign(g.node_count(), -1);
  dist[start] = 0;
  std::queue<int> frontier;
  frontier.push(start);
  int ecc = 0;
  int seen = 1;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        ecc = std::max(ecc, dist[v]);
        ++seen;
        frontier.push(v);
      }
    }
  }
  return seen == g.node_count() ? ecc : -1;
}

}  // namespace

int diameter(const Graph& g) {
  std::vector<int> dist;
  int d = 0;
  for (int start = 0; start < g.node_count(); ++start) {
    const int ecc = bfs_eccentricity(g, start, dist);
    if (ecc < 0) {
      throw std::invalid_argument("diameter: graph is disconnected");
    }
    d = std::max(d, ecc);
  }
  return d;
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats stats;
  for (int i = 0; i < g.node_count(); ++i) {
    stats.d_max = std::max(stats.d_max, g.degree(i));
  }
  stats.histogram.assign(stats.d_max + 1, 0);
  for (int i = 0; i < g.node_count(); ++i) ++stats.histogram[g.degree(i)];
  return stats;
}

}  // namespace oversmooth
