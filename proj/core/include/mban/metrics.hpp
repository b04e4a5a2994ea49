#pragma once

#include <cstddef>

#include "mban/digraph.hpp"

namespace mban {

/// Structural difficulty measures of an MBAN graph.
struct NetworkMetrics {
  std::size_t edge_count = 0;
  std::size_t distinct_in_degrees = 0;
  std::size_t max_in_degree = 0;
  /// No node sees every node (max_in_degree < n).
  bool non_omniscient = false;

  friend bool operator==(const NetworkMetrics&, const NetworkMetrics&) = default;
};

NetworkMetrics network_metrics(const Digraph& g);

}  // namespace mban
