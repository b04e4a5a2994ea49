#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>

#include "mban/digraph.hpp"

namespace mban {

/// Named MBAN constructions. All generators are deterministic.
enum class FamilyKind {
  Complete,
  DirectedCycle,
  Generated,
  CompleteCycle,
  ComplementaryLeftRight,
  ComplementaryCircleTriangle,
  TwoIntersectingCycles,
};

/// Stable CLI identifier: complete, cycle, generated, complete-cycle,
/// left-right, circle-triangle, two-cycles.
std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> family_from_name(std::string_view name);

struct FamilySpec {
  FamilyKind kind = FamilyKind::Complete;
  /// Node count of the produced graph. For Generated it may be 0, meaning
  /// "derive from inner"; otherwise it must equal 2 * |inner| + 1.
  std::size_t n = 0;
  std::optional<NodeId> cross_point;  ///< TwoIntersectingCycles only
  std::optional<Digraph> inner;       ///< Generated only
};

/// K_n with all n^2 arcs, self-loops included.
Digraph complete(std::size_t n);

/// C_n with arcs i -> (i+1) mod n. Requires n >= 2.
Digraph directed_cycle(std::size_t n);

/// Embeds `inner` (n nodes) in a 2n+1 node graph: the n+1 new nodes
/// n..2n each have every node (themselves included) as in-neighbour and
/// point to every node.
Digraph generated(const Digraph& inner);

/// Path 0 -> 1 -> ... -> n-1 -> 0 plus an arc from every node to 0.
/// Requires odd n >= 3.
Digraph complete_cycle(std::size_t n);

/// All n^2 arcs minus two in-arcs per node, selected through the
/// sequences U, R, S, T. Every in-degree is n - 2. Requires odd n >= 7.
Digraph complementary_left_right(std::size_t n);

/// All n^2 arcs minus the ring arcs i -> i+1, the self-loops other than at
/// 0 and 2, and the arcs 0 -> 2, 2 -> 0. Every in-degree is n - 2.
/// Requires odd n >= 7.
Digraph complementary_circle_triangle(std::size_t n);

/// Two cycles sharing the cross point c. Requires odd n >= 7 and
/// c in cross_point_range(n).
Digraph two_intersecting_cycles(std::size_t n, NodeId cross_point);

/// Inclusive range {ceil(n/2), ..., n-2} of legal cross points.
std::pair<NodeId, NodeId> cross_point_range(std::size_t n);

/// ceil(n/2), the smallest legal cross point.
NodeId default_cross_point(std::size_t n);

/// Validates the spec (odd n; n >= 7 for the three non-omniscient
/// families, n >= 3 otherwise) and dispatches to the generator.
/// Throws ParameterError with a one-line reason.
Digraph build(const FamilySpec& spec);

}  // namespace mban
