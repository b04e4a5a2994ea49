#include "mban/verify.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "mban/errors.hpp"
#include "mban/orbit.hpp"

namespace mban {
namespace {

struct PartialVerdict {
  std::map<std::size_t, DensityStats> histogram;
  std::optional<Counterexample> first_failure;
  std::uint64_t checked = 0;
};

void record(PartialVerdict& part, std::size_t ones, std::uint64_t transient) {
  auto& slot = part.histogram[ones];
  ++slot.count;
  slot.max_transient = std::max(slot.max_transient, transient);
  slot.total_transient += transient;
  ++part.checked;
}

void require_odd(const MajorityNetwork& net) {
  if (net.size() % 2 == 0) {
    throw DomainError("density classification is defined for odd n only (got n = " +
                      std::to_string(net.size()) + ")");
  }
}

std::uint64_t orbit_budget(std::size_t n) {
  return n >= 64 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << n;
}

template <class Work>
void run_partitioned(std::uint64_t total, unsigned jobs, std::vector<PartialVerdict>& parts, Work work) {
  jobs = static_cast<unsigned>(std::clamp<std::uint64_t>(jobs, 1, std::max<std::uint64_t>(total, 1)));
  parts.assign(jobs, {});
  const std::uint64_t chunk = (total + jobs - 1) / jobs;
  if (jobs == 1) {
    work(0, total, parts[0]);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j) {
    const std::uint64_t lo = std::min(total, chunk * j);
    const std::uint64_t hi = std::min(total, lo + chunk);
    workers.emplace_back([&work, &parts, lo, hi, j] { work(lo, hi, parts[j]); });
  }
}

DctVerdict merge(std::vector<PartialVerdict>& parts, VerifyMode mode) {
  DctVerdict verdict;
  verdict.mode = mode;
  for (auto& part : parts) {
    verdict.configs_checked += part.checked;
    for (const auto& [ones, stats] : part.histogram) {
      auto& slot = verdict.histogram[ones];
      slot.count += stats.count;
      slot.total_transient += stats.total_transient;
      slot.max_transient = std::max(slot.max_transient, stats.max_transient);
      verdict.max_transient = std::max(verdict.max_transient, stats.max_transient);
    }
    if (part.first_failure &&
        (!verdict.counterexample || part.first_failure->initial < verdict.counterexample->initial)) {
      verdict.counterexample = std::move(part.first_failure);
    }
  }
  verdict.solves = !verdict.counterexample.has_value();
  return verdict;
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection sampling keeps draws identical across standard libraries.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r = 0;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

}  // namespace

unsigned resolve_jobs(unsigned jobs) noexcept {
  if (jobs != 0) return jobs;
  return std::max(1U, std::thread::hardware_concurrency());
}

DctVerdict verify_dct_exhaustive(const MajorityNetwork& net, const VerifyOptions& options) {
  require_odd(net);
  const std::size_t n = net.size();
  const std::size_t limit = std::min<std::size_t>(options.max_exhaustive_nodes, 62);
  if (n > limit) {
    throw BudgetError("exhaustive verification of n = " + std::to_string(n) + " needs 2^" +
                          std::to_string(n) + " orbits; the limit is n <= " + std::to_string(limit),
                      n >= 64 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << n);
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t full = total - 1;
  const std::uint64_t budget = orbit_budget(n);

  std::vector<PartialVerdict> parts;
  run_partitioned(total, resolve_jobs(options.jobs), parts,
                  [&](std::uint64_t lo, std::uint64_t hi, PartialVerdict& part) {
                    const auto f = [&net](std::uint64_t s) { return net.step_word(s); };
                    for (std::uint64_t x = lo; x < hi; ++x) {
                      const auto ones = static_cast<std::size_t>(std::popcount(x));
                      const auto orbit = find_orbit(x, f, budget);
                      record(part, ones, orbit.transient);
                      const std::uint64_t target = 2 * ones > n ? full : 0;
                      const bool ok = orbit.cycle_length == 1 && orbit.entry == target;
                      if (!ok && !part.first_failure) {
                        part.first_failure = Counterexample{
                            Configuration::from_word(n, x),
                            {orbit.transient, orbit.cycle_length,
                             Configuration::from_word(n, orbit.entry), orbit.steps_evaluated}};
                      }
                    }
                  });
  return merge(parts, VerifyMode::Exhaustive);
}

Configuration sample_configuration(std::size_t n, std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);

  const std::size_t low = n / 2;
  const std::size_t high = (n + 1) / 2;
  std::size_t ones = 0;
  // Densities other than floor(n/2) and ceil(n/2): 0..low-1 and high+1..n.
  const std::size_t others = (n + 1) - (low == high ? 1 : 2);
  if (index % 2 == 0 || others == 0) {
    ones = (rng() & 1U) != 0 ? high : low;
  } else {
    const auto pick = static_cast<std::size_t>(bounded(rng, others));
    ones = pick < low ? pick : pick + (high - low) + 1;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Configuration x(n);
  for (std::size_t i = 0; i < ones; ++i) {
    const auto j = i + static_cast<std::size_t>(bounded(rng, n - i));
    std::swap(order[i], order[j]);
    x.set(order[i], true);
  }
  return x;
}

DctVerdict verify_dct_sampled(const MajorityNetwork& net, std::uint64_t samples, std::uint64_t seed,
                              const VerifyOptions& options) {
  require_odd(net);
  if (samples == 0) throw ParameterError("sampled verification needs at least one sample");
  const std::size_t n = net.size();
  const std::uint64_t budget = orbit_budget(n);

  std::vector<PartialVerdict> parts;
  run_partitioned(samples, resolve_jobs(options.jobs), parts,
                  [&](std::uint64_t lo, std::uint64_t hi, PartialVerdict& part) {
                    for (std::uint64_t i = lo; i < hi; ++i) {
                      const Configuration x = sample_configuration(n, seed, i);
                      const TrajectoryOutcome outcome = evolve(net, x, budget);
                      record(part, x.ones(), outcome.transient);
                      const bool ok = outcome.cycle_length == 1 &&
                                      outcome.entry == Configuration::uniform(n, x.majority());
                      if (!ok && (!part.first_failure || x < part.first_failure->initial)) {
                        part.first_failure = Counterexample{x, outcome};
                      }
                    }
                  });
  DctVerdict verdict = merge(parts, VerifyMode::Sampled);
  verdict.seed = seed;
  verdict.samples = samples;
  return verdict;
}

std::map<std::size_t, DensityProfile> convergence_profile(const MajorityNetwork& net,
                                                          const VerifyOptions& options) {
  const DctVerdict verdict = verify_dct_exhaustive(net, options);
  std::map<std::size_t, DensityProfile> profile;
  for (const auto& [ones, stats] : verdict.histogram) {
    profile[ones] = {stats.count, stats.max_transient,
                     static_cast<double>(stats.total_transient) / static_cast<double>(stats.count)};
  }
  return profile;
}

}  // namespace mban
