#include "mban/families.hpp"

#include <array>
#include <string>
#include <vector>

#include "mban/errors.hpp"

namespace mban {
namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 7> kNames{{
    {FamilyKind::Complete, "complete"},
    {FamilyKind::DirectedCycle, "cycle"},
    {FamilyKind::Generated, "generated"},
    {FamilyKind::CompleteCycle, "complete-cycle"},
    {FamilyKind::ComplementaryLeftRight, "left-right"},
    {FamilyKind::ComplementaryCircleTriangle, "circle-triangle"},
    {FamilyKind::TwoIntersectingCycles, "two-cycles"},
}};

void require_odd_at_least(std::string_view family, std::size_t n, std::size_t minimum) {
  if (n < minimum || n % 2 == 0) {
    throw ParameterError(std::string(family) + ": n must be odd and >= " + std::to_string(minimum) +
                         " (got " + std::to_string(n) + ")");
  }
}

}  // namespace

std::string_view family_name(FamilyKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<FamilyKind> family_from_name(std::string_view name) {
  for (const auto& [k, known] : kNames) {
    if (known == name) return k;
  }
  return std::nullopt;
}

Digraph complete(std::size_t n) {
  if (n == 0) throw ParameterError("complete: n must be >= 1");
  Digraph g(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) g.add_arc(u, v);
  }
  return g;
}

Digraph directed_cycle(std::size_t n) {
  if (n < 2) throw ParameterError("cycle: n must be >= 2 (got " + std::to_string(n) + ")");
  Digraph g(n);
  for (NodeId i = 0; i < n; ++i) g.add_arc(i, static_cast<NodeId>((i + 1) % n));
  return g;
}

Digraph generated(const Digraph& inner) {
  const std::size_t n = inner.size();
  if (n == 0) throw ParameterError("generated: inner graph must have at least one node");
  const std::size_t total = 2 * n + 1;
  Digraph g(total);
  for (const auto& a : inner.arcs()) g.add_arc(a.from, a.to);
  for (NodeId s = static_cast<NodeId>(n); s < total; ++s) {
    for (NodeId v = 0; v < total; ++v) {
      g.add_arc(v, s);
      g.add_arc(s, v);
    }
  }
  return g;
}

Digraph complete_cycle(std::size_t n) {
  require_odd_at_least("complete-cycle", n, 3);
  Digraph g(n);
  for (NodeId i = 0; i < n; ++i) {
    g.add_arc(i, static_cast<NodeId>((i + 1) % n));
    g.add_arc(i, 0);
  }
  return g;
}

Digraph complementary_left_right(std::size_t n) {
  require_odd_at_least("left-right", n, 7);
  const auto half = static_cast<NodeId>(n / 2);
  const auto last = static_cast<NodeId>(n - 1);

  // U = (0, 2, ..., half-1), R = (1, half, ..., n-1),
  // S = (0, ..., half-2),    T = (half-1, ..., n-1).
  std::vector<NodeId> u_seq{0};
  for (NodeId i = 2; i < half; ++i) u_seq.push_back(i);
  std::vector<NodeId> r_seq{1};
  for (NodeId i = half; i <= last; ++i) r_seq.push_back(i);
  std::vector<NodeId> s_seq;
  for (NodeId i = 0; i + 2 <= half; ++i) s_seq.push_back(i);
  std::vector<NodeId> t_seq;
  for (NodeId i = half - 1; i <= last; ++i) t_seq.push_back(i);

  Digraph g = complete(n);
  const std::size_t s_len = s_seq.size();
  for (std::size_t i = 0; i < s_len; ++i) {
    g.remove_arc(s_seq[(i + 1) % s_len], u_seq[i]);
    g.remove_arc(s_seq[(i + 2) % s_len], u_seq[i]);
  }
  const std::size_t t_len = t_seq.size();
  for (std::size_t i = 0; i < t_len; ++i) {
    g.remove_arc(t_seq[(i + t_len - 1) % t_len], r_seq[i]);
    g.remove_arc(t_seq[(i + t_len - 2) % t_len], r_seq[i]);
  }
  return g;
}

Digraph complementary_circle_triangle(std::size_t n) {
  require_odd_at_least("circle-triangle", n, 7);
  Digraph g = complete(n);
  for (NodeId i = 0; i < n; ++i) {
    g.remove_arc(i, static_cast<NodeId>((i + 1) % n));
    if (i != 0 && i != 2) g.remove_arc(i, i);
  }
  g.remove_arc(0, 2);
  g.remove_arc(2, 0);
  return g;
}

std::pair<NodeId, NodeId> cross_point_range(std::size_t n) {
  return {static_cast<NodeId>((n + 1) / 2), static_cast<NodeId>(n - 2)};
}

NodeId default_cross_point(std::size_t n) { return cross_point_range(n).first; }

Digraph two_intersecting_cycles(std::size_t n, NodeId cross_point) {
  require_odd_at_least("two-cycles", n, 7);
  const auto [lo, hi] = cross_point_range(n);
  if (cross_point < lo || cross_point > hi) {
    throw ParameterError("two-cycles: cross point must be in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "] (got " + std::to_string(cross_point) + ")");
  }
  const auto half = static_cast<NodeId>(n / 2);
  const auto last = static_cast<NodeId>(n - 1);
  Digraph g(n);
  for (NodeId i = 0; i < half; ++i) g.add_arc(i, i + 1);
  for (NodeId i = 1; i <= last; ++i) {
    for (NodeId j = lo; j <= last; ++j) g.add_arc(i, j);
  }
  for (NodeId i = lo; i + 1 <= last; ++i) g.remove_arc(i - half, i);
  g.remove_arc(cross_point, last);
  g.add_arc(cross_point, 0);
  return g;
}

Digraph build(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  const std::string_view name = family_name(spec.kind);
  if (spec.cross_point && spec.kind != FamilyKind::TwoIntersectingCycles) {
    throw ParameterError(std::string(name) + ": a cross point only applies to two-cycles");
  }
  if (spec.inner && spec.kind != FamilyKind::Generated) {
    throw ParameterError(std::string(name) + ": an inner graph only applies to generated");
  }
  switch (spec.kind) {
    case FamilyKind::Complete:
      require_odd_at_least(name, n, 3);
      return complete(n);
    case FamilyKind::DirectedCycle:
      require_odd_at_least(name, n, 3);
      return directed_cycle(n);
    case FamilyKind::Generated: {
      if (!spec.inner) throw ParameterError("generated: an inner graph is required");
      const std::size_t expected = 2 * spec.inner->size() + 1;
      if (n != 0 && n != expected) {
        throw ParameterError("generated: an inner graph of " + std::to_string(spec.inner->size()) +
                             " nodes produces " + std::to_string(expected) + " nodes, not " +
                             std::to_string(n));
      }
      return generated(*spec.inner);
    }
    case FamilyKind::CompleteCycle:
      return complete_cycle(n);
    case FamilyKind::ComplementaryLeftRight:
      return complementary_left_right(n);
    case FamilyKind::ComplementaryCircleTriangle:
      return complementary_circle_triangle(n);
    case FamilyKind::TwoIntersectingCycles:
      require_odd_at_least(name, n, 7);
      return two_intersecting_cycles(n, spec.cross_point.value_or(default_cross_point(n)));
  }
  throw ParameterError("unknown family");
}

}  // namespace mban
