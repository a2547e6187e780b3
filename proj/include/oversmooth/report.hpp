#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "oversmooth/bounds.hpp"
#include "oversmooth/graph.hpp"

namespace oversmooth {

using Json = nlohmann::ordered_json;

struct AnalyzeConfig {
  std::string graph_source;            // echo of --edges / --generate
  double epsilon = 1e-3;
  double s = 1.0;
  std::optional<double> d0_override;   // measured from seeded features if empty
  int channels = 8;
  std::uint64_t seed = 0;
  bool augmented_reading = false;      // which Cavers reading drives the chain
};

struct AnalyzeResult {
  Json document;
  bool chain_failed = false;  // an asserted link failed (exit code 2)
};

/// Full report for one graph: graph block, spectral block, bounds block.
/// Disconnected graphs get "n/a: disconnected" in place of the bounds block.
/// The timestamp field is the only non-deterministic output.
AnalyzeResult analyze_graph(const Graph& g, const AnalyzeConfig& cfg);

std::string current_timestamp_utc();

}  // namespace oversmooth
