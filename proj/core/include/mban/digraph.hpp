#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mban {

using NodeId = std::uint32_t;

/// Arc u -> v: u is an in-neighbour of v.
struct Arc {
  NodeId from = 0;
  NodeId to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Directed graph on nodes 0..n-1 stored as one in-neighbour bitset per node.
/// Self-loops are allowed; arcs have set semantics.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n);

  /// Throws ParameterError if an endpoint is >= n. Duplicate arcs collapse.
  static Digraph from_arcs(std::size_t n, std::span<const Arc> arcs);

  std::size_t size() const noexcept { return n_; }

  void add_arc(NodeId from, NodeId to);
  void remove_arc(NodeId from, NodeId to);
  bool has_arc(NodeId from, NodeId to) const;

  std::size_t in_degree(NodeId v) const;
  std::size_t arc_count() const noexcept;

  /// All arcs sorted ascending by (from, to).
  std::vector<Arc> arcs() const;
  std::vector<NodeId> in_neighbors(NodeId v) const;

  /// Packed in-neighbour set of v; bit u of the span is set iff u -> v.
  std::span<const std::uint64_t> in_mask(NodeId v) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_node(NodeId v) const;

  std::size_t n_ = 0;
  std::size_t row_words_ = 0;
  std::vector<std::uint64_t> masks_;
};

}  // namespace mban
