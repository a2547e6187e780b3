#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "oversmooth/graph.hpp"
#include "oversmooth/rng.hpp"

namespace oversmooth {

void GeneratorSpec::validate() const {
  if (n < 1) throw std::invalid_argument("generator: n must be >= 1");
  switch (family) {
    case GraphFamily::ErdosRenyi:
      if (edge_probability < 0.0 || edge_probability > 1.0) {
        throw std::invalid_argument("generator: p must lie in [0, 1]");
      }
      break;
    case GraphFamily::WattsStrogatz:
      if (ring_degree < 2 || ring_degree % 2 != 0 || ring_degree >= n) {
        throw std::invalid_argument(
            "generator: watts-strogatz k must be even, >= 2 and < n");
      }
      if (rewire_probability < 0.0 || rewire_probability > 1.0) {
        throw std::invalid_argument("generator: beta must lie in [0, 1]");
      }
      break;
    case GraphFamily::Cycle:
      if (n < 3) throw std::invalid_argument("generator: cycle needs n >= 3");
      break;
    case GraphFamily::Karate:
      if (n != 34) throw std::invalid_argument("generator: karate is fixed at 34 nodes");
      break;
    default:
      break;
  }
}

namespace {

std::vector<std::pair<int, int>> er_edges(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) edges.emplace_back(i, j);
    }
  }
  return edges;
}

std::vector<std::pair<int, int>> ws_edges(int n, int k, double beta,
                                          std::uint64_t seed) {
  Rng rng(seed);
  std::set<std::pair<int, int>> edges;
  auto canon = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= k / 2; ++j) edges.insert(canon(i, (i + j) % n));
  }
  // Independent rewiring pass over the original lattice edges, same order.
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= k / 2; ++j) {
      if (!rng.bernoulli(beta)) continue;
      const auto old_edge = canon(i, (i + j) % n);
      if (!edges.count(old_edge)) continue;  // already rewired away
      // Draw a fresh endpoint; keep the old edge if the node is saturated.
      bool placed = false;
      for (int attempt = 0; attempt < 4 * n && !placed; ++attempt) {
        const int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (m == i) continue;
        const auto candidate = canon(i, m);
        if (edges.count(candidate)) continue;
        edges.erase(old_edge);
        edges.insert(candidate);
        placed = true;
      }
    }
  }
  return {edges.begin(), edges.end()};
}

std::vector<std::pair<int, int>> path_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return edges;
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case GraphFamily::ErdosRenyi:
      return Graph::from_edge_pairs(spec.n, er_edges(spec.n, spec.edge_probability, spec.seed));
    case GraphFamily::WattsStrogatz:
      return Graph::from_edge_pairs(
          spec.n, ws_edges(spec.n, spec.ring_degree, spec.rewire_probability, spec.seed));
    case GraphFamily::Star: {
      std::vector<std::pair<int, int>> edges;
      for (int i = 1; i < spec.n; ++i) edges.emplace_back(0, i);
      return Graph::from_edge_pairs(spec.n, edges);
    }
    case GraphFamily::Path:
      return Graph::from_edge_pairs(spec.n, path_edges(spec.n));
    case GraphFamily::Cycle: {
      auto edges = path_edges(spec.n);
      edges.emplace_back(spec.n - 1, 0);
      return Graph::from_edge_pairs(spec.n, edges);
    }
    case GraphFamily::Complete: {
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < spec.n; ++i) {
        for (int j = i + 1; j < spec.n; ++j) edges.emplace_back(i, j);
      }
      return Graph::from_edge_pairs(spec.n, edges);
    }
    case GraphFamily::Karate:
      return Graph::from_edge_pairs(34, karate_edges());
  }
  throw std::invalid_argument("generator: unknown family");
}

GeneratorSpec parse_generator_spec(const std::string& text, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.seed = seed;

  std::string name = text;
  std::string args;
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    name = text.substr(0, colon);
    args = text.substr(colon + 1);
  }

  std::vector<std::string> parts;
  std::stringstream stream(args);
  std::string item;
  while (std::getline(stream, item, ',')) parts.push_back(item);

  auto want = [&](std::size_t count) {
    if (parts.size() != count) {
      throw std::invalid_argument("generator spec '" + text + "': expected " +
                                  std::to_string(count) + " parameter(s)");
    }
  };
  auto as_int = [&](const std::string& s) {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("generator spec: bad integer '" + s + "'");
    return v;
  };
  auto as_double = [&](const std::string& s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("generator spec: bad number '" + s + "'");
    return v;
  };

  try {
    if (name == "er") {
      spec.family = GraphFamily::ErdosRenyi;
      want(2);
      spec.n = as_int(parts[0]);
      spec.edge_probability = as_double(parts[1]);
    } else if (name == "ws") {
      spec.family = GraphFamily::WattsStrogatz;
      want(3);
      spec.n = as_int(parts[0]);
      spec.ring_degree = as_int(parts[1]);
      spec.rewire_probability = as_double(parts[2]);
    } else if (name == "star" || name == "path" || name == "cycle" ||
               name == "complete") {
      want(1);
      spec.n = as_int(parts[0]);
      spec.family = name == "star"    ? GraphFamily::Star
                    : name == "path"  ? GraphFamily::Path
                    : name == "cycle" ? GraphFamily::Cycle
                                      : GraphFamily::Complete;
    } else if (name == "karate") {
      want(0);
      spec.family = GraphFamily::Karate;
      spec.n = 34;
    } else {
      throw std::invalid_argument("generator spec: unknown family '" + name + "'");
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("generator spec '" + text + "': malformed parameters");
  }
  spec.validate();
  return spec;
}

}  // namespace oversmooth
