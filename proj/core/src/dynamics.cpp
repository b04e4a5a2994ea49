#include "mban/dynamics.hpp"

#include <bit>
#include <string>

#include "mban/errors.hpp"
#include "mban/orbit.hpp"

namespace mban {

MajorityNetwork::MajorityNetwork(Digraph graph) : graph_(std::move(graph)) {
  const std::size_t n = graph_.size();
  degrees_.resize(n);
  for (NodeId v = 0; v < n; ++v) degrees_[v] = static_cast<std::uint32_t>(graph_.in_degree(v));
  if (word_sized()) {
    word_masks_.resize(n);
    for (NodeId v = 0; v < n; ++v) word_masks_[v] = graph_.in_mask(v)[0];
  }
}

Configuration MajorityNetwork::step(const Configuration& x) const {
  const std::size_t n = size();
  if (x.size() != n) {
    throw DimensionError("configuration has " + std::to_string(x.size()) +
                         " automata, network has " + std::to_string(n));
  }
  Configuration y(n);
  const auto xs = x.words();
  for (NodeId v = 0; v < n; ++v) {
    const auto mask = graph_.in_mask(v);
    std::size_t ones = 0;
    for (std::size_t w = 0; w < mask.size(); ++w) {
      ones += static_cast<std::size_t>(std::popcount(xs[w] & mask[w]));
    }
    const bool current = (xs[v / 64] >> (v % 64)) & 1U;
    if (local_majority(ones, degrees_[v], current)) {
      y.words_[v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }
  return y;
}

Configuration step(const MajorityNetwork& net, const Configuration& x) { return net.step(x); }

std::uint64_t default_max_steps(std::size_t n) noexcept {
  return n >= 20 ? std::uint64_t{1} << 20 : std::uint64_t{1} << n;
}

TrajectoryOutcome evolve(const MajorityNetwork& net, const Configuration& x,
                         std::optional<std::uint64_t> max_steps) {
  const std::uint64_t budget = max_steps.value_or(default_max_steps(net.size()));
  if (budget == 0) throw ParameterError("evolve: max_steps must be at least 1");
  if (x.size() != net.size()) {
    throw DimensionError("configuration has " + std::to_string(x.size()) +
                         " automata, network has " + std::to_string(net.size()));
  }
  if (net.word_sized()) {
    const auto orbit = find_orbit(
        x.to_word(), [&net](std::uint64_t s) { return net.step_word(s); }, budget);
    return {orbit.transient, orbit.cycle_length, Configuration::from_word(x.size(), orbit.entry),
            orbit.steps_evaluated};
  }
  const auto orbit = find_orbit(
      x, [&net](const Configuration& s) { return net.step(s); }, budget);
  return {orbit.transient, orbit.cycle_length, orbit.entry, orbit.steps_evaluated};
}

}  // namespace mban
