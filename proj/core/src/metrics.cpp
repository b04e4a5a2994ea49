#include "mban/metrics.hpp"

#include <algorithm>
#include <set>

namespace mban {

NetworkMetrics network_metrics(const Digraph& g) {
  NetworkMetrics m;
  std::set<std::size_t> degrees;
  for (NodeId v = 0; v < g.size(); ++v) {
    const std::size_t d = g.in_degree(v);
    degrees.insert(d);
    m.edge_count += d;
    m.max_in_degree = std::max(m.max_in_degree, d);
  }
  m.distinct_in_degrees = degrees.size();
  m.non_omniscient = m.max_in_degree < g.size();
  return m;
}

}  // namespace mban
