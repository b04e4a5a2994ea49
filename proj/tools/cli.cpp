#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mban/dynamics.hpp"
#include "mban/enumerate.hpp"
#include "mban/errors.hpp"
#include "mban/families.hpp"
#include "mban/graph_io.hpp"
#include "mban/metrics.hpp"
#include "mban/verify.hpp"
#include "mban/version.hpp"
#include "report.hpp"

namespace mban::cli {
namespace {

using Clock = std::chrono::steady_clock;

struct Input {
  std::string path;
  std::string bytes;
};

Input read_input(const std::string& path) {
  if (path == "-") {
    return {path, std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>())};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open " + path);
  return {path, std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>())};
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot open " + out_path + " for writing");
  file << text;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

report::RunManifest make_manifest(const std::string& command_line, unsigned jobs) {
  report::RunManifest m;
  m.command_line = command_line;
  m.version = std::string(kVersion);
  m.jobs = jobs;
  return m;
}

struct GenArgs {
  std::string family;
  std::size_t n = 0;
  std::optional<NodeId> cross;
  std::string inner;
  std::string format = "json";
  std::string out;
};

int cmd_gen(const GenArgs& args, std::ostream& out) {
  const auto kind = family_from_name(args.family);
  if (!kind) throw ParameterError("unknown family '" + args.family + "'");
  const auto format = graph_format_from_name(args.format);
  if (!format) throw ParameterError("unknown format '" + args.format + "'");
  FamilySpec spec;
  spec.kind = *kind;
  spec.n = args.n;
  spec.cross_point = args.cross;
  if (!args.inner.empty()) spec.inner = parse_graph(read_input(args.inner).bytes);
  if (spec.kind != FamilyKind::Generated && spec.n == 0) throw ParameterError("--n is required");
  emit(format_graph(build(spec), *format), args.out, out);
  return 0;
}

struct VerifyArgs {
  std::string graph;
  bool exhaustive = false;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 1;
  unsigned jobs = 0;
  std::string out;
};

int cmd_verify(const VerifyArgs& args, const std::string& command_line, std::ostream& out) {
  const auto start = Clock::now();
  if (args.exhaustive && args.samples) {
    throw ParameterError("--exhaustive and --samples are mutually exclusive");
  }
  const Input input = read_input(args.graph);
  const MajorityNetwork net(parse_graph(input.bytes));
  VerifyOptions options;
  options.jobs = resolve_jobs(args.jobs);
  const DctVerdict verdict = args.samples ? verify_dct_sampled(net, *args.samples, args.seed, options)
                                          : verify_dct_exhaustive(net, options);
  auto manifest = make_manifest(command_line, options.jobs);
  if (args.samples) manifest.seeds.push_back(args.seed);
  manifest.input_digests.emplace_back(input.path, report::fnv1a64_hex(input.bytes));
  manifest.wall_clock_seconds = seconds_since(start);
  emit(report::render(report::verdict_json(verdict, net.size()), manifest), args.out, out);
  return verdict.solves ? kExitSolves : kExitNotSolver;
}

struct EvolveArgs {
  std::string graph;
  std::string init;
  std::optional<std::uint64_t> max_steps;
};

int cmd_evolve(const EvolveArgs& args, std::ostream& out) {
  const MajorityNetwork net(parse_graph(read_input(args.graph).bytes));
  const Configuration start = Configuration::parse(args.init);
  if (start.size() != net.size()) {
    throw DimensionError("initial configuration has " + std::to_string(start.size()) +
                         " automata, the graph has " + std::to_string(net.size()));
  }
  const TrajectoryOutcome outcome = evolve(net, start, args.max_steps);
  Configuration x = start;
  const std::uint64_t distinct = outcome.transient + outcome.cycle_length;
  for (std::uint64_t i = 0; i < distinct; ++i) {
    if (i > 0) x = net.step(x);
    out << x.to_string() << '\n';
  }
  out << "transient=" << outcome.transient << " cycle=" << outcome.cycle_length << '\n';
  return 0;
}

struct EnumerateArgs {
  std::size_t n = 0;
  UniverseOptions universe;
  unsigned jobs = 0;
  bool count_only = false;
  bool allow_large = false;
  std::string resume;
  std::string out;
};

int cmd_enumerate(const EnumerateArgs& args, const std::string& command_line, std::ostream& out) {
  const auto start = Clock::now();
  CensusOptions options;
  options.universe = args.universe;
  options.jobs = resolve_jobs(args.jobs);
  options.allow_large = args.allow_large;
  if (!args.resume.empty()) options.resume_file = args.resume;
  const SolverCensus census = enumerate_solvers(args.n, options);
  auto manifest = make_manifest(command_line, options.jobs);
  manifest.wall_clock_seconds = seconds_since(start);
  emit(report::render(report::census_json(census, !args.count_only), manifest), args.out, out);
  return 0;
}

struct StatsArgs {
  std::string graph;
  unsigned jobs = 0;
  std::string out;
};

int cmd_stats(const StatsArgs& args, const std::string& command_line, std::ostream& out) {
  const auto start = Clock::now();
  const Input input = read_input(args.graph);
  const MajorityNetwork net(parse_graph(input.bytes));
  VerifyOptions options;
  options.jobs = resolve_jobs(args.jobs);
  std::optional<std::map<std::size_t, DensityProfile>> profile;
  if (net.size() % 2 == 1 && net.size() <= options.max_exhaustive_nodes) {
    profile = convergence_profile(net, options);
  }
  auto manifest = make_manifest(command_line, options.jobs);
  manifest.input_digests.emplace_back(input.path, report::fnv1a64_hex(input.bytes));
  manifest.wall_clock_seconds = seconds_since(start);
  emit(report::render(report::stats_json(net.size(), network_metrics(net.graph()), profile), manifest),
       args.out, out);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Majority Boolean automata networks and the density classification task", "mban"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a named network construction");
  gen_cmd->add_option("family", gen.family,
                      "complete, cycle, generated, complete-cycle, left-right, circle-triangle, two-cycles")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Node count");
  gen_cmd->add_option("--cross", gen.cross, "Cross point (two-cycles)");
  gen_cmd->add_option("--inner", gen.inner, "Inner graph file (generated)");
  gen_cmd->add_option("--format", gen.format, "json, dot or edges")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output file (default: standard output)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Decide whether a network solves the DCT");
  verify_cmd->add_option("graph", verify.graph, "Graph file, '-' for standard input")->required();
  verify_cmd->add_flag("--exhaustive", verify.exhaustive, "Check all 2^n configurations (default)");
  verify_cmd->add_option("--samples", verify.samples, "Check this many stratified random configurations");
  verify_cmd->add_option("--seed", verify.seed, "Sampler seed")->capture_default_str();
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads (0 = all cores)");
  verify_cmd->add_option("--out", verify.out, "Output file");

  EvolveArgs evolve_args;
  auto* evolve_cmd = app.add_subcommand("evolve", "Print the orbit of one configuration");
  evolve_cmd->add_option("graph", evolve_args.graph, "Graph file")->required();
  evolve_cmd->add_option("init", evolve_args.init, "Initial configuration, e.g. 1110000")->required();
  evolve_cmd->add_option("--max-steps", evolve_args.max_steps, "Bound on transient + cycle length");

  EnumerateArgs enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Count DCT solvers up to isomorphism");
  enumerate_cmd->add_option("--n", enumerate.n, "Node count (odd)")->required();
  enumerate_cmd->add_flag("--no-self-loops", enumerate.universe.no_self_loops);
  enumerate_cmd->add_flag("--odd-degrees-only", enumerate.universe.odd_degrees_only);
  enumerate_cmd->add_flag("--weakly-connected", enumerate.universe.weakly_connected);
  enumerate_cmd->add_option("--jobs", enumerate.jobs, "Worker threads (0 = all cores)");
  enumerate_cmd->add_flag("--count-only", enumerate.count_only, "Omit the canonical code list");
  enumerate_cmd->add_flag("--allow-large", enumerate.allow_large, "Permit n = 7 (2^49 graphs)");
  enumerate_cmd->add_option("--resume", enumerate.resume, "Checkpoint file to resume from and update");
  enumerate_cmd->add_option("--out", enumerate.out, "Output file");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Network metrics and convergence profile");
  stats_cmd->add_option("graph", stats.graph, "Graph file")->required();
  stats_cmd->add_option("--jobs", stats.jobs, "Worker threads (0 = all cores)");
  stats_cmd->add_option("--out", stats.out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  std::string command_line;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) command_line += ' ';
    command_line += argv[i];
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    if (active == gen_cmd) return cmd_gen(gen, out);
    if (active == verify_cmd) return cmd_verify(verify, command_line, out);
    if (active == evolve_cmd) return cmd_evolve(evolve_args, out);
    if (active == enumerate_cmd) return cmd_enumerate(enumerate, command_line, out);
    if (active == stats_cmd) return cmd_stats(stats, command_line, out);
  } catch (const std::exception& e) {
    err << "mban " << active->get_name() << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mban::cli
