// Acceptance runner: one PASS/FAIL line per criterion.
//   mban_acceptance            run all criteria
//   mban_acceptance --only 4   run a single criterion (exit 1 if it fails)

#include <bit>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numeric>
#include <optional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "mban/dynamics.hpp"
#include "mban/families.hpp"
#include "mban/graph_io.hpp"
#include "mban/verify.hpp"
#include "report.hpp"

using namespace mban;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("violated: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult mban_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mban");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path work_dir() {
  static const auto dir = [] {
    auto d = std::filesystem::temp_directory_path() / "mban_acceptance";
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string gen_file(const std::string& family, std::size_t n, std::optional<NodeId> cross = std::nullopt) {
  std::string name = family + "_" + std::to_string(n);
  std::vector<std::string> args{"gen", family, "--n", std::to_string(n)};
  if (cross) {
    name += "_c" + std::to_string(*cross);
    args.push_back("--cross");
    args.push_back(std::to_string(*cross));
  }
  const auto path = (work_dir() / (name + ".json")).string();
  args.push_back("--out");
  args.push_back(path);
  const auto r = mban_cli(args);
  if (r.code != 0) throw std::runtime_error("gen failed: " + r.err);
  return path;
}

std::string set_text(const std::vector<std::size_t>& values) {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
  return s + "}";
}

// Reports produced through the command-line tool for criteria 1-5.
struct Report {
  int criterion = 0;
  std::string label;
  int exit_code = 0;
  std::string document;
};

std::vector<Report> reports_for(int criterion, unsigned jobs) {
  const std::string j = std::to_string(jobs);
  std::vector<Report> reports;
  auto verify = [&](const std::string& label, const std::string& path) {
    const auto r = mban_cli({"verify", path, "--jobs", j});
    reports.push_back({criterion, label, r.code, r.out});
  };
  switch (criterion) {
    case 1: {
      const auto r = mban_cli({"enumerate", "--n", "3", "--jobs", j});
      reports.push_back({1, "census n=3", r.code, r.out});
      break;
    }
    case 2: {
      const auto r = mban_cli({"enumerate", "--n", "5", "--count-only", "--jobs", j});
      reports.push_back({2, "census n=5", r.code, r.out});
      break;
    }
    case 3:
      for (std::size_t n : {7, 9, 11, 13}) verify("left-right n=" + std::to_string(n), gen_file("left-right", n));
      break;
    case 4:
      for (std::size_t n : {7, 9, 11, 13}) {
        verify("circle-triangle n=" + std::to_string(n), gen_file("circle-triangle", n));
      }
      break;
    case 5:
      for (std::size_t n : {7, 9, 11, 13}) {
        const auto [lo, hi] = cross_point_range(n);
        for (NodeId c = lo; c <= hi; ++c) {
          verify("two-cycles n=" + std::to_string(n) + " c=" + std::to_string(c), gen_file("two-cycles", n, c));
        }
      }
      break;
    default:
      break;
  }
  return reports;
}

unsigned default_jobs() { return resolve_jobs(0); }

Outcome census_criterion(std::size_t n, std::uint64_t expected) {
  Outcome o;
  const auto reports = reports_for(n == 3 ? 1 : 2, default_jobs());
  const auto& r = reports.front();
  o.require(r.exit_code == 0, "enumerate exit code 0");
  if (r.exit_code != 0) return o;
  const auto doc = json::parse(r.document);
  const auto canonical = doc["canonical"].get<std::uint64_t>();
  o.require(canonical == expected, "canonical count " + std::to_string(canonical) + " == " + std::to_string(expected));
  std::string variants;
  for (const auto& v : doc["variants"]) {
    const auto& opt = v["options"];
    variants += std::string(variants.empty() ? "" : "; ") + (opt["no_self_loops"].get<bool>() ? "L" : "-") +
                (opt["odd_degrees_only"].get<bool>() ? "O" : "-") + (opt["weakly_connected"].get<bool>() ? "C" : "-") +
                " " + std::to_string(v["canonical"].get<std::uint64_t>());
  }
  o.note("universe " + std::to_string(doc["universe"].get<std::uint64_t>()) + ", raw " +
         std::to_string(doc["raw"].get<std::uint64_t>()) + ", canonical " + std::to_string(canonical));
  o.note("per variant (L no loops, O odd degrees, C weakly connected): " + variants);
  return o;
}

Outcome family_criterion(int criterion, const std::function<std::uint64_t(std::size_t)>& bound,
                         const std::string& bound_text) {
  Outcome o;
  for (const auto& r : reports_for(criterion, default_jobs())) {
    o.require(r.exit_code == 0, r.label + " verify exit code 0");
    if (r.exit_code != 0) continue;
    const auto doc = json::parse(r.document);
    const auto n = doc["n"].get<std::size_t>();
    const auto t = doc["max_transient"].get<std::uint64_t>();
    o.require(doc["solves"].get<bool>(), r.label + " solves");
    o.require(t <= bound(n), r.label + " max transient " + std::to_string(t) + " <= " + bound_text);
    o.note(r.label + ": max transient " + std::to_string(t));
  }
  return o;
}

DctVerdict exhaustive(const Digraph& g) {
  VerifyOptions options;
  options.jobs = default_jobs();
  return verify_dct_exhaustive(MajorityNetwork(g), options);
}

Outcome criterion_6() {
  Outcome o;
  std::vector<std::size_t> observed;
  for (std::size_t n = 3; n <= 15; n += 2) {
    const auto v = exhaustive(complete_cycle(n));
    o.require(v.solves, "complete-cycle n=" + std::to_string(n) + " solves");
    o.require(v.max_transient <= n, "complete-cycle n=" + std::to_string(n) + " max transient " +
                                        std::to_string(v.max_transient) + " <= n");
    observed.push_back(v.max_transient);
  }
  o.note("max transients for n = 3..15: " + set_text(observed));
  return o;
}

Outcome criterion_7() {
  Outcome o;
  for (std::size_t n : {3, 5, 7}) {
    const auto v = exhaustive(complete(n));
    o.require(v.solves && v.max_transient <= 1, "K_" + std::to_string(n) + " solves within 1 step");
  }
  return o;
}

Outcome criterion_8() {
  Outcome o;
  for (std::size_t n : {3, 5, 7}) {
    const MajorityNetwork net(directed_cycle(n));
    const auto v = verify_dct_exhaustive(net);
    const std::string label = "C_" + std::to_string(n);
    o.require(!v.solves, label + " does not solve");
    if (!v.counterexample) {
      o.require(false, label + " has a counterexample");
      continue;
    }
    const auto& c = *v.counterexample;
    const auto replay = evolve(net, c.initial);
    o.require(replay.transient == c.outcome.transient && replay.cycle_length == c.outcome.cycle_length &&
                  replay.entry == c.outcome.entry,
              label + " counterexample replays");
    o.require(replay.cycle_length > 1 || replay.entry != Configuration::uniform(n, c.initial.majority()),
              label + " counterexample misses the majority fixed point");
    o.note(label + ": " + c.initial.to_string() + " cycles with period " + std::to_string(replay.cycle_length));
  }
  return o;
}

Outcome criterion_9() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::uint64_t worst = 0;
  for (std::size_t inner = 2; inner <= 5; ++inner) {
    for (int k = 0; k < 50; ++k) {
      Digraph g(inner);
      for (NodeId u = 0; u < inner; ++u) {
        for (NodeId v = 0; v < inner; ++v) {
          if (rng() & 1U) g.add_arc(u, v);
        }
      }
      const auto v = exhaustive(generated(g));
      o.require(v.solves, "generated(inner size " + std::to_string(inner) + ", sample " + std::to_string(k) + ") solves");
      o.require(v.max_transient <= 2, "generated max transient " + std::to_string(v.max_transient) + " <= 2");
      worst = std::max(worst, v.max_transient);
    }
  }
  o.note("200 generated networks, worst transient " + std::to_string(worst));

  // Reading without arcs among the new nodes: (inner = 0, new = 1) alternates.
  for (std::size_t inner = 2; inner <= 5; ++inner) {
    const auto n = static_cast<NodeId>(inner);
    Digraph g(2 * inner + 1);
    for (NodeId s = n; s <= 2 * n; ++s) {
      for (NodeId v = 0; v < n; ++v) {
        g.add_arc(s, v);
        g.add_arc(v, s);
      }
    }
    const MajorityNetwork net(g);
    Configuration x(2 * inner + 1);
    for (NodeId s = n; s <= 2 * n; ++s) x.set(s, true);
    const auto once = net.step(x);
    const auto twice = net.step(once);
    o.require(once != x && twice == x && once.majority() != x.majority(),
              "arc-list reading with inner size " + std::to_string(inner) + " has a period-2 majority flip");
  }
  o.note("arc-list reading: period-2 orbit from " + [] {
    Configuration x(5);
    x.set(2, true);
    x.set(3, true);
    x.set(4, true);
    return x.to_string();
  }() + " confirmed for inner sizes 2..5");
  return o;
}

std::vector<std::pair<std::string, Digraph>> solver_instances(std::size_t max_n) {
  std::vector<std::pair<std::string, Digraph>> out;
  for (std::size_t n = 3; n <= max_n; n += 2) {
    out.emplace_back("complete n=" + std::to_string(n), complete(n));
    out.emplace_back("complete-cycle n=" + std::to_string(n), complete_cycle(n));
    if (n < 7) continue;
    out.emplace_back("left-right n=" + std::to_string(n), complementary_left_right(n));
    out.emplace_back("circle-triangle n=" + std::to_string(n), complementary_circle_triangle(n));
    const auto [lo, hi] = cross_point_range(n);
    for (NodeId c = lo; c <= hi; ++c) {
      out.emplace_back("two-cycles n=" + std::to_string(n) + " c=" + std::to_string(c), two_intersecting_cycles(n, c));
    }
  }
  std::mt19937_64 rng(77);
  for (std::size_t inner = 1; 2 * inner + 1 <= max_n; ++inner) {
    for (int k = 0; k < 3; ++k) {
      Digraph g(inner);
      for (NodeId u = 0; u < inner; ++u) {
        for (NodeId v = 0; v < inner; ++v) {
          if (rng() & 1U) g.add_arc(u, v);
        }
      }
      out.emplace_back("generated inner=" + std::to_string(inner), generated(g));
    }
  }
  return out;
}

Outcome criterion_10() {
  Outcome o;
  std::size_t instances = 0;
  std::uint64_t orbits = 0;
  for (const auto& [label, g] : solver_instances(13)) {
    const MajorityNetwork net(g);
    const std::size_t n = g.size();
    std::uint64_t flips = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const bool maj = 2 * std::popcount(x) > static_cast<int>(n);
      std::uint64_t y = x;
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) {
        const std::uint64_t next = net.step_word(y);
        if ((2 * std::popcount(next) > static_cast<int>(n)) != maj) ++flips;
        if (next == y) break;
        y = next;
      }
      ++orbits;
    }
    o.require(flips == 0, label + " conserves the majority (" + std::to_string(flips) + " flips)");
    ++instances;
  }
  o.note(std::to_string(instances) + " instances, " + std::to_string(orbits) + " orbits");
  return o;
}

Outcome criterion_11() {
  Outcome o;
  std::uint64_t stated_total = 0, proof_total = 0, late_total = 0;
  int worst_above = 0;
  std::mt19937_64 rng(11);
  for (std::size_t n : {7, 9, 11}) {
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    const int half = static_cast<int>((n + 1) / 2);
    const std::string tag = " n=" + std::to_string(n);

    // Half plus one.
    std::vector<Digraph> dense{complementary_left_right(n), complementary_circle_triangle(n)};
    for (int k = 0; k < 10; ++k) {
      Digraph g(n);
      for (NodeId v = 0; v < n; ++v) {
        std::vector<NodeId> nodes(n);
        std::iota(nodes.begin(), nodes.end(), NodeId{0});
        std::shuffle(nodes.begin(), nodes.end(), rng);
        const std::size_t degree = n - 2 + rng() % 3;
        for (std::size_t i = 0; i < degree; ++i) g.add_arc(nodes[i], v);
      }
      dense.push_back(g);
    }
    std::uint64_t half_fail = 0;
    for (const auto& g : dense) {
      const MajorityNetwork net(g);
      for (std::uint64_t x = 0; x <= all; ++x) {
        if (std::popcount(x) >= half + 1 && net.step_word(x) != all) ++half_fail;
      }
    }
    o.require(half_fail == 0, "half-plus-one" + tag + " (" + std::to_string(half_fail) + " failures)");

    // Left-right monotonicity.
    {
      const MajorityNetwork net(complementary_left_right(n));
      std::uint64_t fail = 0;
      for (std::uint64_t x = 0; x <= all; ++x) {
        const int a = std::popcount(x), b = std::popcount(net.step_word(x));
        if (2 * a > static_cast<int>(n) ? b < a : b > a) ++fail;
      }
      o.require(fail == 0, "left-right monotonicity" + tag + " (" + std::to_string(fail) + " failures)");
    }

    // Circle-triangle conditional count preservation.
    {
      const MajorityNetwork net(complementary_circle_triangle(n));
      std::uint64_t equal_fail = 0, at_least_fail = 0, other_fail = 0;
      std::string example;
      for (std::uint64_t x = 0; x <= all; ++x) {
        if (std::popcount(x) != half) continue;
        const std::uint64_t y = net.step_word(x);
        const int after = std::popcount(y);
        if ((x & 1U) == ((x >> 1) & 1U)) {
          if (after != half) {
            ++equal_fail;
            if (example.empty()) {
              example = Configuration::from_word(n, x).to_string() + " -> " + Configuration::from_word(n, y).to_string();
            }
          }
          if (after < half) ++at_least_fail;
        } else if (after < half + 1) {
          ++other_fail;
        }
      }
      o.require(equal_fail == 0, "circle-triangle x0=x1 => ones(A(x)) = ones(x)" + tag + " (" +
                                     std::to_string(equal_fail) + " failures, e.g. " + example + ")");
      o.note("circle-triangle x0=x1 => ones(A(x)) >= ones(x)" + tag + ": " +
             (at_least_fail == 0 ? "holds" : std::to_string(at_least_fail) + " failures"));
      o.require(other_fail == 0, "circle-triangle x0!=x1 => ones(A(x)) >= ceil(n/2)+1" + tag);
    }

    // Intersecting cycles.
    const auto [lo, hi] = cross_point_range(n);
    for (NodeId c = lo; c <= hi; ++c) {
      const MajorityNetwork net(two_intersecting_cycles(n, c));
      const std::string ctag = tag + " c=" + std::to_string(c);
      std::uint64_t a_fail = 0, b_fail = 0, stated_fail = 0, proof_fail = 0;
      for (std::uint64_t x = 0; x <= all; ++x) {
        const int ones = std::popcount(x);
        if (ones >= half + 1) {
          std::uint64_t y = x;
          int t = 0;
          while (y != all) {
            const std::uint64_t next = net.step_word(y);
            if (std::popcount(next) < std::popcount(y)) ++a_fail;
            y = next;
            ++t;
          }
          if (t > half) ++late_total;
          worst_above = std::max(worst_above, t - half);
        }
        if (ones != half) continue;
        const std::uint64_t ax = net.step_word(x);
        if ((x & 1U) == 0) {
          if (((ax >> c) & 1U) == 0) ++b_fail;
        } else {
          const int xc = static_cast<int>((x >> c) & 1U);
          if (std::popcount(ax) != ones + xc) ++stated_fail;
          if (std::popcount(ax) != ones) ++proof_fail;
        }
      }
      o.require(a_fail == 0, "two-cycles ones >= ceil(n/2)+1 never decrease" + ctag);
      o.require(b_fail == 0, "two-cycles x0=0, ones=ceil(n/2) => A(x)_c = 1" + ctag);
      const bool resolved = (stated_fail == 0) != (proof_fail == 0);
      o.require(resolved, "two-cycles count identity resolves to exactly one equality" + ctag);
      stated_total += stated_fail;
      proof_total += proof_fail;
    }
  }
  o.note("two-cycles from ones >= ceil(n/2)+1: all-ones by step ceil(n/2) fails for " + std::to_string(late_total) +
         " configurations; worst case needs ceil(n/2)+" + std::to_string(worst_above) + " steps");
  o.note("two-cycles count identity (x0=1, ones=ceil(n/2)): ones(A(x)) = ones(x) + x_c fails " +
         std::to_string(stated_total) + " times, ones(A(x)) = ones(x) fails " + std::to_string(proof_total) +
         " times; recorded equality: " +
         (proof_total == 0 ? "ones(A(x)) = ones(x)" : stated_total == 0 ? "ones(A(x)) = ones(x) + x_c" : "none"));
  return o;
}

Outcome criterion_12() {
  Outcome o;
  const std::uint64_t samples = 10000, seed = 1;
  VerifyOptions options;
  options.jobs = default_jobs();
  const auto lr = verify_dct_sampled(MajorityNetwork(complementary_left_right(101)), samples, seed, options);
  o.require(lr.solves, "left-right n=101 has no sampled violation");
  o.require(lr.max_transient <= 4, "left-right n=101 max transient " + std::to_string(lr.max_transient) + " <= 4");
  const auto ct = verify_dct_sampled(MajorityNetwork(complementary_circle_triangle(101)), samples, seed, options);
  o.require(ct.solves, "circle-triangle n=101 has no sampled violation");
  o.require(ct.max_transient <= 5, "circle-triangle n=101 max transient " + std::to_string(ct.max_transient) + " <= 5");
  o.note("seed 1, 10000 samples: left-right max transient " + std::to_string(lr.max_transient) +
         ", circle-triangle max transient " + std::to_string(ct.max_transient));
  return o;
}

Outcome criterion_13() {
  Outcome o;
  std::size_t compared = 0;
  for (int c = 1; c <= 5; ++c) {
    const auto one = reports_for(c, 1);
    const auto eight = reports_for(c, 8);
    for (std::size_t i = 0; i < one.size(); ++i) {
      const bool same = one[i].exit_code == eight[i].exit_code &&
                        report::payload_section(one[i].document) == report::payload_section(eight[i].document);
      o.require(same, "criterion " + std::to_string(c) + " " + one[i].label + " payload identical for --jobs 1 and 8");
      ++compared;
    }
  }
  o.note(std::to_string(compared) + " reports compared");
  return o;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
};

std::vector<Criterion> criteria() {
  return {
      {1, "census n=3 has 10 canonical solvers", [] { return census_criterion(3, 10); }},
      {2, "census n=5 has 7514 canonical solvers", [] { return census_criterion(5, 7514); }},
      {3, "left-right n in {7,9,11,13} solves within 4 steps",
       [] { return family_criterion(3, [](std::size_t) { return 4; }, "4"); }},
      {4, "circle-triangle n in {7,9,11,13} solves within 5 steps",
       [] { return family_criterion(4, [](std::size_t) { return 5; }, "5"); }},
      {5, "two-cycles n in {7,9,11,13}, every cross point, solves within n+5 steps",
       [] { return family_criterion(5, [](std::size_t n) { return n + 5; }, "n+5"); }},
      {6, "complete-cycle n in {3..15} solves within n steps", criterion_6},
      {7, "complete K_n n in {3,5,7} solves within 1 step", criterion_7},
      {8, "directed cycle C_n n in {3,5,7} fails with a replayable counterexample", criterion_8},
      {9, "generated networks solve within 2 steps; arc-list reading flips the majority", criterion_9},
      {10, "majority is conserved on every orbit of every solver instance with n <= 13", criterion_10},
      {11, "counting properties for n in {7,9,11}", criterion_11},
      {12, "sampled n=101 left-right and circle-triangle within their bounds", criterion_12},
      {13, "criteria 1-5 payloads identical for --jobs 1 and --jobs 8", criterion_13},
  };
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: mban_acceptance [--only N]\n";
      return 2;
    }
  }
  int failed = 0;
  int ran = 0;
  for (const auto& c : criteria()) {
    if (only && *only != c.id) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.note(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ("
              << std::fixed << std::setprecision(2) << seconds << " s)\n";
    for (const auto& note : outcome.notes) std::cout << "    " << note << '\n';
    std::cout.flush();
    if (!outcome.pass) ++failed;
  }
  if (ran == 0) {
    std::cerr << "no criterion " << *only << '\n';
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
