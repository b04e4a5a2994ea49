#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mban/digraph.hpp"
#include "mban/dynamics.hpp"

namespace mban {

/// Integer encoding of a digraph: bit (u * n + v) is set iff u -> v.
struct GraphCode {
  std::size_t n = 0;
  std::uint64_t code = 0;

  friend auto operator<=>(const GraphCode&, const GraphCode&) = default;
};

/// Largest n whose n^2 arc bits fit one 64-bit code.
inline constexpr std::size_t kMaxCodeNodes = 8;

/// Throws DomainError when g has more than kMaxCodeNodes nodes.
GraphCode encode(const Digraph& g);
Digraph decode(GraphCode code);

/// Minimum encode(sigma(g)) over all n! relabelings sigma. Equal results
/// iff the graphs are isomorphic. Brute force; throws DomainError for
/// n > kMaxCodeNodes.
GraphCode canonical_code(const Digraph& g);
GraphCode canonical_code(GraphCode code);

/// Canonical labeling for many graphs of one size: precomputes every
/// permutation and a per-permutation row lookup table (n! * 2^n bytes).
class Canonicalizer {
 public:
  explicit Canonicalizer(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::uint64_t canonical(std::uint64_t code) const noexcept;

 private:
  std::size_t n_;
  std::vector<std::array<std::uint8_t, kMaxCodeNodes>> perms_;
  std::vector<std::uint8_t> row_luts_;  // perms_.size() rows of 2^n entries
};

/// Entry i is the packed value of step(net, configuration i). Requires n <= 20.
std::vector<std::uint32_t> transition_table(const MajorityNetwork& net);

/// DCT decision on a precomputed transition table: the global majority is
/// preserved by every transition and no orbit avoids the uniform fixed points.
/// Requires table.size() == 2^n with n odd.
bool solves_dct(std::span<const std::uint32_t> table, std::size_t n);

/// Universe narrowing flags. All are isomorphism invariants.
struct UniverseOptions {
  bool no_self_loops = false;
  bool odd_degrees_only = false;
  bool weakly_connected = false;

  friend bool operator==(const UniverseOptions&, const UniverseOptions&) = default;
};

bool in_universe(GraphCode code, const UniverseOptions& options);

/// Solver counts restricted to one universe variant.
struct VariantCount {
  UniverseOptions options;
  std::uint64_t raw = 0;
  std::uint64_t canonical = 0;

  friend bool operator==(const VariantCount&, const VariantCount&) = default;
};

struct SolverCensus {
  std::size_t n = 0;
  UniverseOptions options;
  std::uint64_t universe_size = 0;
  std::uint64_t raw_solver_count = 0;
  std::uint64_t canonical_solver_count = 0;
  std::vector<std::uint64_t> canonical_codes;  ///< sorted ascending
  /// Counts for `options` and every narrower combination of flags.
  std::vector<VariantCount> variants;

  friend bool operator==(const SolverCensus&, const SolverCensus&) = default;
};

struct CensusOptions {
  UniverseOptions universe;
  /// Worker threads; 0 means hardware concurrency.
  unsigned jobs = 1;
  /// Default ceiling on n; `allow_large` lifts it to 7.
  std::size_t max_nodes = 5;
  bool allow_large = false;
  /// Progress is persisted here after every block and resumed from it.
  std::optional<std::filesystem::path> resume_file;
  std::uint64_t block_size = std::uint64_t{1} << 20;
  /// Called after every block with (codes done, codes total).
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

/// Sweeps every code in [0, 2^(n^2)) that lies in the selected universe,
/// keeps the DCT solvers and deduplicates them up to isomorphism.
/// Throws DomainError for even n and BudgetError above the size ceiling.
SolverCensus enumerate_solvers(std::size_t n, const CensusOptions& options = {});

/// Little-endian resume record. Layout (offsets in bytes):
///   0  char[8]  magic "MBANCENS"
///   8  u32      version (1)
///  12  u32      n
///  16  u32      universe flags (bit 0 no-self-loops, bit 1 odd-degrees-only,
///               bit 2 weakly-connected)
///  20  u32      reserved (0)
///  24  u64      next code to examine
///  32  u64      universe graphs seen so far
///  40  u64[8]   raw solver count per flag combination (indexed by flags)
/// 104  u64      number of canonical codes k
/// 112  u64[k]   canonical codes, ascending
struct CensusCheckpoint {
  static constexpr std::uint32_t kVersion = 1;

  std::uint32_t n = 0;
  std::uint32_t flags = 0;
  std::uint64_t next_code = 0;
  std::uint64_t universe_seen = 0;
  std::array<std::uint64_t, 8> raw{};
  std::vector<std::uint64_t> codes;

  friend bool operator==(const CensusCheckpoint&, const CensusCheckpoint&) = default;
};

/// Atomic write (temporary file + rename). Throws Error on I/O failure.
void save_checkpoint(const std::filesystem::path& path, const CensusCheckpoint& state);
/// Throws ParseError on a truncated or foreign file.
CensusCheckpoint load_checkpoint(const std::filesystem::path& path);

std::uint32_t universe_flags(const UniverseOptions& options) noexcept;
UniverseOptions universe_from_flags(std::uint32_t flags) noexcept;

}  // namespace mban
