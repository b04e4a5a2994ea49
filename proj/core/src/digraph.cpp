#include "mban/digraph.hpp"

#include <bit>
#include <string>

#include "mban/configuration.hpp"
#include "mban/errors.hpp"

namespace mban {

Digraph::Digraph(std::size_t n) : n_(n), row_words_(words_for(n)), masks_(n * words_for(n), 0) {}

Digraph Digraph::from_arcs(std::size_t n, std::span<const Arc> arcs) {
  Digraph g(n);
  for (const auto& a : arcs) g.add_arc(a.from, a.to);
  return g;
}

void Digraph::check_node(NodeId v) const {
  if (v >= n_) {
    throw ParameterError("node " + std::to_string(v) + " out of range for a graph of " +
                         std::to_string(n_) + " nodes");
  }
}

void Digraph::add_arc(NodeId from, NodeId to) {
  check_node(from);
  check_node(to);
  masks_[to * row_words_ + from / 64] |= std::uint64_t{1} << (from % 64);
}

void Digraph::remove_arc(NodeId from, NodeId to) {
  check_node(from);
  check_node(to);
  masks_[to * row_words_ + from / 64] &= ~(std::uint64_t{1} << (from % 64));
}

bool Digraph::has_arc(NodeId from, NodeId to) const {
  check_node(from);
  check_node(to);
  return (masks_[to * row_words_ + from / 64] >> (from % 64)) & 1U;
}

std::size_t Digraph::in_degree(NodeId v) const {
  std::size_t d = 0;
  for (const auto w : in_mask(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Digraph::arc_count() const noexcept {
  std::size_t count = 0;
  for (const auto w : masks_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count());
  for (NodeId u = 0; u < n_; ++u) {
    for (NodeId v = 0; v < n_; ++v) {
      if ((masks_[v * row_words_ + u / 64] >> (u % 64)) & 1U) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<NodeId> Digraph::in_neighbors(NodeId v) const {
  std::vector<NodeId> out;
  const auto row = in_mask(v);
  for (std::size_t w = 0; w < row.size(); ++w) {
    for (auto bits = row[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<NodeId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
    }
  }
  return out;
}

std::span<const std::uint64_t> Digraph::in_mask(NodeId v) const {
  check_node(v);
  return {masks_.data() + v * row_words_, row_words_};
}

}  // namespace mban
