#include <doctest.h>

#include <random>

#include "mban/dynamics.hpp"
#include "mban/errors.hpp"
#include "mban/families.hpp"
#include "mban/verify.hpp"
#include "oracle.hpp"

using namespace mban;

namespace {

void check_against_oracle(const Digraph& g) {
  const auto expected = oracle::brute_verify(g);
  const auto got = verify_dct_exhaustive(MajorityNetwork(g));
  CHECK(got.solves == expected.solves);
  CHECK(got.max_transient == expected.max_transient);
  CHECK(got.configs_checked == (std::uint64_t{1} << g.size()));
  if (expected.first_failure) {
    REQUIRE(got.counterexample.has_value());
    CHECK(got.counterexample->initial.to_word() == *expected.first_failure);
  } else {
    CHECK_FALSE(got.counterexample.has_value());
  }
  REQUIRE(got.histogram.size() == expected.histogram.size());
  for (const auto& [ones, stats] : got.histogram) {
    const auto [count, max_t] = expected.histogram.at(static_cast<int>(ones));
    CHECK(stats.count == count);
    CHECK(stats.max_transient == max_t);
  }
}

}  // namespace

TEST_CASE("exhaustive verdicts on small examples") {
  const auto k5 = verify_dct_exhaustive(MajorityNetwork(complete(5)));
  CHECK(k5.solves);
  CHECK(k5.max_transient <= 1);

  const auto c5 = verify_dct_exhaustive(MajorityNetwork(directed_cycle(5)));
  CHECK_FALSE(c5.solves);
  REQUIRE(c5.counterexample.has_value());
  // Lowest failing value is 1, i.e. automaton 0 alone in state 1.
  CHECK(c5.counterexample->initial.to_string() == "10000");
  CHECK(c5.counterexample->outcome.cycle_length == 5);
  CHECK(evolve(MajorityNetwork(directed_cycle(5)), Configuration::parse("00001")).cycle_length == 5);

  const auto c3 = verify_dct_exhaustive(MajorityNetwork(directed_cycle(3)));
  REQUIRE(c3.counterexample.has_value());
  CHECK(c3.counterexample->initial.to_string() == "100");
  CHECK(c3.counterexample->outcome.cycle_length == 3);
  CHECK(evolve(MajorityNetwork(directed_cycle(3)), Configuration::parse("110")).cycle_length == 3);

  const auto lr9 = verify_dct_exhaustive(MajorityNetwork(complementary_left_right(9)));
  CHECK(lr9.solves);
  CHECK(lr9.max_transient <= 4);
}

TEST_CASE("exhaustive verdict errors") {
  CHECK_THROWS_AS(verify_dct_exhaustive(MajorityNetwork(complete(4))), DomainError);
  CHECK_THROWS_AS(verify_dct_exhaustive(MajorityNetwork(complete(25))), BudgetError);
  VerifyOptions small;
  small.max_exhaustive_nodes = 9;
  try {
    verify_dct_exhaustive(MajorityNetwork(complete(11)), small);
    FAIL("expected a budget refusal");
  } catch (const BudgetError& e) {
    CHECK(e.required() == (std::uint64_t{1} << 11));
  }
}

TEST_CASE("exhaustive verdicts match the brute-force oracle on random graphs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + 2 * (rng() % 5);
    check_against_oracle(oracle::random_graph(n, (rng() % 100) / 100.0, rng));
  }
  check_against_oracle(complete_cycle(9));
  check_against_oracle(two_intersecting_cycles(9, 6));
}

TEST_CASE("property: counterexamples replay through evolve") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + 2 * (rng() % 4);
    const MajorityNetwork net(oracle::random_graph(n, (rng() % 100) / 100.0, rng));
    const auto verdict = verify_dct_exhaustive(net);
    if (verdict.solves) continue;
    REQUIRE(verdict.counterexample.has_value());
    const auto& c = *verdict.counterexample;
    const auto replay = evolve(net, c.initial);
    CHECK(replay.transient == c.outcome.transient);
    CHECK(replay.cycle_length == c.outcome.cycle_length);
    CHECK(replay.entry == c.outcome.entry);
  }
}

TEST_CASE("property: complement symmetry for solver families") {
  for (const auto& g : {complementary_left_right(9), complementary_circle_triangle(9), complete_cycle(9),
                        two_intersecting_cycles(9, 5)}) {
    const MajorityNetwork net(g);
    const std::size_t n = g.size();
    for (std::uint64_t value = 0; value < (std::uint64_t{1} << n); value += 7) {
      const auto x = Configuration::from_word(n, value);
      const auto a = evolve(net, x);
      const auto b = evolve(net, x.complement());
      CHECK(a.entry == b.entry.complement());
      CHECK(a.transient == b.transient);
    }
  }
}

TEST_CASE("property: verdicts do not depend on the worker count") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 5 + 2 * (rng() % 4);
    const MajorityNetwork net(oracle::random_graph(n, 0.6, rng));
    const auto one = verify_dct_exhaustive(net, {1, 24});
    CHECK(verify_dct_exhaustive(net, {3, 24}) == one);
    CHECK(verify_dct_exhaustive(net, {8, 24}) == one);
    CHECK(verify_dct_sampled(net, 500, 9, {1, 24}) == verify_dct_sampled(net, 500, 9, {5, 24}));
  }
}

TEST_CASE("sampler is a pure function of seed and index") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    CHECK(sample_configuration(101, 1, i) == sample_configuration(101, 1, i));
    CHECK(sample_configuration(101, 1, i).size() == 101);
  }
  CHECK_FALSE(sample_configuration(101, 1, 0) == sample_configuration(101, 2, 0));
}

TEST_CASE("sampler puts half of the draws at the hard densities") {
  const std::size_t n = 21;
  std::uint64_t hard = 0;
  std::map<std::size_t, std::uint64_t> seen;
  const std::uint64_t draws = 4000;
  for (std::uint64_t i = 0; i < draws; ++i) {
    const auto ones = sample_configuration(n, 5, i).ones();
    ++seen[ones];
    if (ones == n / 2 || ones == (n + 1) / 2) ++hard;
  }
  CHECK(hard >= draws / 2);
  CHECK(hard < draws / 2 + draws / 10);
  CHECK(seen.size() == n + 1);
}

TEST_CASE("property: sampled orbits agree with the exhaustive sweep") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 7 + 2 * (rng() % 4);
    const Digraph g = oracle::random_graph(n, 0.7, rng);
    const MajorityNetwork net(g);
    const auto ref = oracle::from_graph(g);
    const auto sampled = verify_dct_sampled(net, 300, trial, {});
    for (std::uint64_t i = 0; i < 300; ++i) {
      const auto x = sample_configuration(n, trial, i);
      const auto orbit = oracle::stored_orbit(ref, oracle::state_of(x.to_string()));
      CHECK(evolve(net, x).transient == orbit.transient);
    }
    const auto exhaustive = verify_dct_exhaustive(net);
    if (exhaustive.solves) CHECK(sampled.solves);
    if (!sampled.solves) CHECK_FALSE(exhaustive.solves);
    CHECK(sampled.max_transient <= exhaustive.max_transient);
  }
}

TEST_CASE("sampled verdicts on large networks") {
  const auto lr = verify_dct_sampled(MajorityNetwork(complementary_left_right(101)), 2000, 1);
  CHECK(lr.solves);
  CHECK(lr.max_transient <= 4);
  CHECK(lr.mode == VerifyMode::Sampled);
  CHECK(lr.configs_checked == 2000);

  const auto cyc = verify_dct_sampled(MajorityNetwork(directed_cycle(101)), 100, 1);
  CHECK_FALSE(cyc.solves);
  REQUIRE(cyc.counterexample.has_value());
  CHECK(cyc.counterexample->outcome.cycle_length > 1);

  CHECK_THROWS_AS(verify_dct_sampled(MajorityNetwork(complete(5)), 0, 1), ParameterError);
  CHECK_THROWS_AS(verify_dct_sampled(MajorityNetwork(complete(6)), 10, 1), DomainError);
}

TEST_CASE("convergence profiles") {
  const auto k3 = convergence_profile(MajorityNetwork(complete(3)));
  CHECK(k3.at(0).max_transient == 0);
  CHECK(k3.at(3).max_transient == 0);
  CHECK(k3.at(1).max_transient == 1);
  CHECK(k3.at(2).max_transient == 1);
  CHECK(k3.at(1).count == 3);

  std::uint64_t cc = 0;
  for (const auto& [ones, p] : convergence_profile(MajorityNetwork(complete_cycle(7)))) {
    cc = std::max(cc, p.max_transient);
  }
  CHECK(cc <= 7);

  std::uint64_t tc = 0;
  double mean_sum = 0;
  for (const auto& [ones, p] : convergence_profile(MajorityNetwork(two_intersecting_cycles(7, 4)))) {
    tc = std::max(tc, p.max_transient);
    mean_sum += p.mean_transient;
  }
  CHECK(tc <= 12);
  CHECK(mean_sum > 0);
}
