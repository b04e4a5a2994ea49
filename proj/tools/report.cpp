#include "report.hpp"

#include <cstdio>

namespace mban::report {
namespace {

Json options_json(const UniverseOptions& options) {
  Json j;
  j["no_self_loops"] = options.no_self_loops;
  j["odd_degrees_only"] = options.odd_degrees_only;
  j["weakly_connected"] = options.weakly_connected;
  return j;
}

}  // namespace

Json manifest_json(const RunManifest& manifest) {
  Json j;
  j["command_line"] = manifest.command_line;
  j["version"] = manifest.version;
  j["seeds"] = manifest.seeds;
  j["inputs"] = Json::array();
  for (const auto& [path, digest] : manifest.input_digests) {
    j["inputs"].push_back({{"path", path}, {"fnv1a64", digest}});
  }
  j["wall_clock_seconds"] = manifest.wall_clock_seconds;
  j["jobs"] = manifest.jobs;
  return j;
}

Json verdict_json(const DctVerdict& verdict, std::size_t n) {
  Json j;
  j["format"] = "mban-verdict-v1";
  j["n"] = n;
  j["solves"] = verdict.solves;
  if (verdict.mode == VerifyMode::Exhaustive) {
    j["mode"] = "exhaustive";
  } else {
    j["mode"] = {{"sampled", {{"seed", verdict.seed}, {"samples", verdict.samples}}}};
  }
  j["configs_checked"] = verdict.configs_checked;
  j["max_transient"] = verdict.max_transient;
  if (verdict.counterexample) {
    const auto& c = *verdict.counterexample;
    j["counterexample"] = {{"config", c.initial.to_string()},
                           {"transient", c.outcome.transient},
                           {"cycle_length", c.outcome.cycle_length},
                           {"entry", c.outcome.entry.to_string()}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["histogram"] = Json::array();
  for (const auto& [ones, stats] : verdict.histogram) {
    j["histogram"].push_back({ones, stats.count, stats.max_transient});
  }
  return j;
}

std::optional<std::uint64_t> reference_canonical_count(std::size_t n) {
  if (n == 3) return 10;
  if (n == 5) return 7514;
  return std::nullopt;
}

Json census_json(const SolverCensus& census, bool include_codes) {
  const auto reference = reference_canonical_count(census.n);
  Json j;
  j["format"] = "mban-census-v1";
  j["n"] = census.n;
  j["universe"] = census.universe_size;
  j["raw"] = census.raw_solver_count;
  j["canonical"] = census.canonical_solver_count;
  j["options"] = options_json(census.options);
  j["variants"] = Json::array();
  for (const auto& v : census.variants) {
    Json entry;
    entry["options"] = options_json(v.options);
    entry["raw"] = v.raw;
    entry["canonical"] = v.canonical;
    if (reference) entry["matches_reference"] = v.canonical == *reference;
    j["variants"].push_back(entry);
  }
  if (reference) j["reference_canonical"] = *reference;
  if (include_codes) j["codes"] = census.canonical_codes;
  return j;
}

Json stats_json(std::size_t n, const NetworkMetrics& metrics,
                const std::optional<std::map<std::size_t, DensityProfile>>& profile) {
  Json j;
  j["format"] = "mban-stats-v1";
  j["n"] = n;
  j["metrics"] = {{"edge_count", metrics.edge_count},
                  {"distinct_in_degrees", metrics.distinct_in_degrees},
                  {"max_in_degree", metrics.max_in_degree},
                  {"non_omniscient", metrics.non_omniscient}};
  if (!profile) {
    j["profile"] = nullptr;
    return j;
  }
  std::uint64_t overall = 0;
  Json rows = Json::array();
  for (const auto& [ones, p] : *profile) {
    overall = std::max(overall, p.max_transient);
    rows.push_back({{"density", ones},
                    {"count", p.count},
                    {"max_transient", p.max_transient},
                    {"mean_transient", p.mean_transient}});
  }
  j["max_transient"] = overall;
  j["profile"] = rows;
  return j;
}

std::string render(Json payload, const RunManifest& manifest) {
  payload["manifest"] = manifest_json(manifest);
  return payload.dump() + "\n";
}

std::string payload_section(std::string_view document) {
  Json j = Json::parse(document);
  j.erase("manifest");
  return j.dump();
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace mban::report
