#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mban/enumerate.hpp"
#include "mban/metrics.hpp"
#include "mban/verify.hpp"

namespace mban::report {

using Json = nlohmann::ordered_json;

/// Provenance block embedded in every JSON report under "manifest".
/// Everything outside that key is the payload and is reproducible.
struct RunManifest {
  std::string command_line;
  std::string version;
  std::vector<std::uint64_t> seeds;
  std::vector<std::pair<std::string, std::string>> input_digests;  ///< path, fnv1a64 hex
  double wall_clock_seconds = 0.0;
  unsigned jobs = 1;
};

Json manifest_json(const RunManifest& manifest);

/// mban-verdict-v1 payload.
Json verdict_json(const DctVerdict& verdict, std::size_t n);

/// Canonical solver counts known for the unrestricted universe (n = 3, 5).
std::optional<std::uint64_t> reference_canonical_count(std::size_t n);

/// mban-census-v1 payload; `include_codes` false implements --count-only.
Json census_json(const SolverCensus& census, bool include_codes);

/// mban-stats-v1 payload. `profile` is absent when n is even or too large.
Json stats_json(std::size_t n, const NetworkMetrics& metrics,
                const std::optional<std::map<std::size_t, DensityProfile>>& profile);

/// Serializes payload + manifest as one line of compact JSON.
std::string render(Json payload, const RunManifest& manifest);

/// The document with its "manifest" key removed, re-serialized compactly.
std::string payload_section(std::string_view document);

/// 64-bit FNV-1a digest, 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace mban::report
