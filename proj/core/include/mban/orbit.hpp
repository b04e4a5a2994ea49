#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "mban/errors.hpp"

namespace mban {

/// Shape of the orbit of a deterministic map from one start state.
template <class State>
struct Orbit {
  std::uint64_t transient = 0;
  std::uint64_t cycle_length = 1;
  State entry{};
  std::uint64_t steps_evaluated = 0;
};

/// Constant-memory cycle detection (Brent's teleporting tortoise) followed by
/// the exact transient search. Returns the minimal (transient, cycle_length)
/// pair. Throws BudgetError when transient + cycle_length exceeds
/// `max_steps`; the hare is allowed 3 * max_steps + 3 evaluations before
/// giving up, which covers every orbit that fits the budget.
template <class State, class StepFn>
Orbit<State> find_orbit(const State& start, StepFn&& step, std::uint64_t max_steps) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t hare_limit = max_steps > (kMax - 3) / 3 ? kMax : 3 * max_steps + 3;

  std::uint64_t evaluated = 0;
  std::uint64_t power = 1;
  std::uint64_t cycle = 1;
  State tortoise = start;
  State hare = step(start);
  ++evaluated;
  while (!(tortoise == hare)) {
    if (evaluated >= hare_limit) {
      throw BudgetError("orbit did not close within " + std::to_string(max_steps) + " steps",
                        max_steps + 1);
    }
    if (power == cycle) {
      tortoise = hare;
      power *= 2;
      cycle = 0;
    }
    hare = step(hare);
    ++evaluated;
    ++cycle;
  }

  tortoise = start;
  hare = start;
  for (std::uint64_t i = 0; i < cycle; ++i) hare = step(hare);
  evaluated += cycle;
  std::uint64_t transient = 0;
  while (!(tortoise == hare)) {
    tortoise = step(tortoise);
    hare = step(hare);
    evaluated += 2;
    ++transient;
  }
  if (transient + cycle > max_steps) {
    throw BudgetError("orbit needs " + std::to_string(transient + cycle) +
                          " steps, budget is " + std::to_string(max_steps),
                      transient + cycle);
  }
  return {transient, cycle, tortoise, evaluated};
}

}  // namespace mban
