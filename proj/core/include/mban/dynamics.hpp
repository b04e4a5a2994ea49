#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ranges>
#include <vector>

#include "mban/configuration.hpp"
#include "mban/digraph.hpp"

namespace mban {

/// Local majority with tie-keep: 1 if ones > size/2, 0 if ones < size/2,
/// `current` otherwise (including an empty neighbourhood).
constexpr bool local_majority(std::size_t ones, std::size_t size, bool current) noexcept {
  const std::size_t twice = 2 * ones;
  if (twice > size) return true;
  if (twice < size) return false;
  return current;
}

template <std::ranges::input_range R>
bool local_majority(const R& neighbor_states, bool current) {
  std::size_t ones = 0;
  std::size_t size = 0;
  for (const auto s : neighbor_states) {
    ones += s ? 1 : 0;
    ++size;
  }
  return local_majority(ones, size, current);
}

/// Majority Boolean automata network over a fixed interaction graph.
/// Immutable after construction; safe to share between threads.
class MajorityNetwork {
 public:
  explicit MajorityNetwork(Digraph graph);

  const Digraph& graph() const noexcept { return graph_; }
  std::size_t size() const noexcept { return graph_.size(); }

  /// Fully synchronous update. Throws DimensionError on a size mismatch.
  Configuration step(const Configuration& x) const;

  /// True when every configuration fits one machine word (n <= 64).
  bool word_sized() const noexcept { return size() <= Configuration::kWordBits; }

  /// Single-word step on the packed value; requires word_sized().
  std::uint64_t step_word(std::uint64_t x) const noexcept {
    std::uint64_t y = 0;
    const std::size_t n = word_masks_.size();
    for (std::size_t v = 0; v < n; ++v) {
      const auto twice = 2U * static_cast<unsigned>(std::popcount(x & word_masks_[v]));
      const unsigned d = degrees_[v];
      const std::uint64_t bit = (twice > d) | ((twice == d) & ((x >> v) & 1U));
      y |= bit << v;
    }
    return y;
  }

 private:
  Digraph graph_;
  std::vector<std::uint32_t> degrees_;
  std::vector<std::uint64_t> word_masks_;
};

Configuration step(const MajorityNetwork& net, const Configuration& x);

/// Result of following one orbit to its limit cycle.
struct TrajectoryOutcome {
  std::uint64_t transient = 0;
  std::uint64_t cycle_length = 1;
  Configuration entry;  ///< A^transient(x), the first periodic configuration
  std::uint64_t steps_evaluated = 0;

  friend bool operator==(const TrajectoryOutcome&, const TrajectoryOutcome&) = default;
};

/// 2^n clamped to 2^20.
std::uint64_t default_max_steps(std::size_t n) noexcept;

/// Minimal transient and cycle length of the orbit of x. `max_steps` bounds
/// transient + cycle_length (default: default_max_steps(n)).
/// Throws ParameterError for max_steps == 0, DimensionError on a size
/// mismatch and BudgetError when the orbit does not close in time.
TrajectoryOutcome evolve(const MajorityNetwork& net, const Configuration& x,
                         std::optional<std::uint64_t> max_steps = std::nullopt);

}  // namespace mban
