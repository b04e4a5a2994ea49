#include "mban/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>

#include "mban/errors.hpp"
#include "mban/verify.hpp"

namespace mban {
namespace {

constexpr std::size_t kMaxCensusNodes = 7;
constexpr std::size_t kMaxTableNodes = 20;

void require_code_size(std::size_t n) {
  if (n == 0 || n > kMaxCodeNodes) {
    throw DomainError("graph codes support 1..8 nodes (got " + std::to_string(n) + ")");
  }
}

std::uint64_t row_mask(std::size_t n) { return (std::uint64_t{1} << n) - 1; }

std::uint64_t full_code_mask(std::size_t n) {
  return n * n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n * n)) - 1;
}

// bit0: no self-loops, bit1: every in-degree odd, bit2: weakly connected.
std::uint32_t property_flags(std::uint64_t code, std::size_t n) {
  std::array<std::uint64_t, kMaxCodeNodes> out{};
  std::array<std::uint64_t, kMaxCodeNodes> in{};
  for (std::size_t u = 0; u < n; ++u) out[u] = (code >> (u * n)) & row_mask(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (auto bits = out[u]; bits != 0; bits &= bits - 1) {
      in[static_cast<std::size_t>(std::countr_zero(bits))] |= std::uint64_t{1} << u;
    }
  }
  std::uint32_t flags = 0;
  bool loops = false;
  bool odd = true;
  for (std::size_t v = 0; v < n; ++v) {
    loops = loops || ((out[v] >> v) & 1U);
    odd = odd && (std::popcount(in[v]) % 2 == 1);
  }
  if (!loops) flags |= 1U;
  if (odd) flags |= 2U;

  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (auto bits = frontier; bits != 0; bits &= bits - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(bits));
      next |= out[u] | in[u];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  if (seen == row_mask(n)) flags |= 4U;
  return flags;
}

bool table_acyclic_off_uniform(std::span<const std::uint32_t> table, std::vector<std::uint8_t>& state,
                               std::vector<std::uint32_t>& path) {
  const std::size_t size = table.size();
  state.assign(size, 0);
  state[0] = 2;
  state[size - 1] = 2;
  for (std::size_t x = 0; x < size; ++x) {
    if (state[x] != 0) continue;
    path.clear();
    auto y = static_cast<std::uint32_t>(x);
    while (state[y] == 0) {
      state[y] = 1;
      path.push_back(y);
      y = table[y];
    }
    if (state[y] == 1) return false;
    for (const auto p : path) state[p] = 2;
  }
  return true;
}

// Per-thread solver test on raw codes. Configurations are visited hardest
// density first so that most non-solvers are rejected within a few steps.
class CodeTester {
 public:
  explicit CodeTester(std::size_t n) : n_(n), table_(std::size_t{1} << n) {
    const std::size_t size = std::size_t{1} << n;
    order_.resize(size);
    std::iota(order_.begin(), order_.end(), 0U);
    const auto rank = [n](std::uint32_t x) {
      const auto twice = 2 * static_cast<long>(std::popcount(x));
      return std::abs(twice - static_cast<long>(n));
    };
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return rank(a) < rank(b); });
    for (std::size_t b = 0; b < n * n; ++b) {
      arc_tail_[b] = static_cast<std::uint8_t>(b / n);
      arc_head_[b] = static_cast<std::uint8_t>(b % n);
    }
  }

  bool solves(std::uint64_t code) {
    std::array<std::uint32_t, kMaxCodeNodes> mask{};
    for (auto bits = code; bits != 0; bits &= bits - 1) {
      const auto b = static_cast<std::size_t>(std::countr_zero(bits));
      mask[arc_head_[b]] |= 1U << arc_tail_[b];
    }
    std::array<unsigned, kMaxCodeNodes> degree{};
    for (std::size_t v = 0; v < n_; ++v) degree[v] = static_cast<unsigned>(std::popcount(mask[v]));

    const auto n = static_cast<unsigned>(n_);
    for (const auto x : order_) {
      std::uint32_t y = 0;
      for (std::size_t v = 0; v < n_; ++v) {
        const auto twice = 2U * static_cast<unsigned>(std::popcount(x & mask[v]));
        y |= static_cast<std::uint32_t>((twice > degree[v]) | ((twice == degree[v]) & ((x >> v) & 1U)))
             << v;
      }
      table_[x] = y;
      if ((2U * static_cast<unsigned>(std::popcount(y)) > n) !=
          (2U * static_cast<unsigned>(std::popcount(x)) > n)) {
        return false;
      }
    }
    return table_acyclic_off_uniform(table_, state_, path_);
  }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint8_t> state_;
  std::vector<std::uint32_t> path_;
  std::array<std::uint8_t, 64> arc_tail_{};
  std::array<std::uint8_t, 64> arc_head_{};
};

struct BlockResult {
  std::uint64_t universe = 0;
  std::array<std::uint64_t, 8> raw{};
  std::vector<std::uint64_t> codes;
};

void sweep(std::size_t n, std::uint32_t required, const Canonicalizer& canon, std::uint64_t lo,
           std::uint64_t hi, BlockResult& out) {
  CodeTester tester(n);
  for (std::uint64_t code = lo; code < hi; ++code) {
    std::uint32_t flags = 0;
    if (required != 0) {
      flags = property_flags(code, n);
      if ((flags & required) != required) continue;
    }
    ++out.universe;
    if (!tester.solves(code)) continue;
    if (required == 0) flags = property_flags(code, n);
    for (std::uint32_t m = 0; m < 8; ++m) {
      if ((flags & m) == m) ++out.raw[m];
    }
    out.codes.push_back(canon.canonical(code));
  }
  std::sort(out.codes.begin(), out.codes.end());
  out.codes.erase(std::unique(out.codes.begin(), out.codes.end()), out.codes.end());
}

}  // namespace

std::uint32_t universe_flags(const UniverseOptions& options) noexcept {
  return (options.no_self_loops ? 1U : 0U) | (options.odd_degrees_only ? 2U : 0U) |
         (options.weakly_connected ? 4U : 0U);
}

UniverseOptions universe_from_flags(std::uint32_t flags) noexcept {
  return {(flags & 1U) != 0, (flags & 2U) != 0, (flags & 4U) != 0};
}

GraphCode encode(const Digraph& g) {
  const std::size_t n = g.size();
  require_code_size(n);
  std::uint64_t code = 0;
  for (const auto& a : g.arcs()) code |= std::uint64_t{1} << (a.from * n + a.to);
  return {n, code};
}

Digraph decode(GraphCode code) {
  const std::size_t n = code.n;
  require_code_size(n);
  if ((code.code & ~full_code_mask(n)) != 0) {
    throw DomainError("graph code has bits beyond n^2 = " + std::to_string(n * n));
  }
  Digraph g(n);
  for (auto bits = code.code; bits != 0; bits &= bits - 1) {
    const auto b = static_cast<std::size_t>(std::countr_zero(bits));
    g.add_arc(static_cast<NodeId>(b / n), static_cast<NodeId>(b % n));
  }
  return g;
}

GraphCode canonical_code(GraphCode code) {
  const std::size_t n = code.n;
  require_code_size(n);
  std::array<std::uint8_t, kMaxCodeNodes> perm{};
  std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t relabeled = 0;
    for (auto bits = code.code; bits != 0; bits &= bits - 1) {
      const auto b = static_cast<std::size_t>(std::countr_zero(bits));
      relabeled |= std::uint64_t{1} << (perm[b / n] * n + perm[b % n]);
    }
    best = std::min(best, relabeled);
  } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n)));
  return {n, best};
}

GraphCode canonical_code(const Digraph& g) { return canonical_code(encode(g)); }

Canonicalizer::Canonicalizer(std::size_t n) : n_(n) {
  require_code_size(n);
  std::array<std::uint8_t, kMaxCodeNodes> perm{};
  std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n), 0);
  const std::size_t rows = std::size_t{1} << n;
  do {
    perms_.push_back(perm);
    for (std::size_t mask = 0; mask < rows; ++mask) {
      std::uint8_t image = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if ((mask >> v) & 1U) image |= static_cast<std::uint8_t>(1U << perm[v]);
      }
      row_luts_.push_back(image);
    }
  } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n)));
}

std::uint64_t Canonicalizer::canonical(std::uint64_t code) const noexcept {
  std::array<std::size_t, kMaxCodeNodes> rows{};
  for (std::size_t u = 0; u < n_; ++u) rows[u] = (code >> (u * n_)) & row_mask(n_);
  const std::size_t stride = std::size_t{1} << n_;
  std::uint64_t best = ~std::uint64_t{0};
  for (std::size_t p = 0; p < perms_.size(); ++p) {
    const std::uint8_t* lut = row_luts_.data() + p * stride;
    std::uint64_t relabeled = 0;
    for (std::size_t u = 0; u < n_; ++u) {
      relabeled |= std::uint64_t{lut[rows[u]]} << (perms_[p][u] * n_);
    }
    best = std::min(best, relabeled);
  }
  return best;
}

std::vector<std::uint32_t> transition_table(const MajorityNetwork& net) {
  const std::size_t n = net.size();
  if (n > kMaxTableNodes) {
    throw DomainError("transition tables support n <= 20 (got " + std::to_string(n) + ")");
  }
  std::vector<std::uint32_t> table(std::size_t{1} << n);
  for (std::size_t x = 0; x < table.size(); ++x) {
    table[x] = static_cast<std::uint32_t>(net.step_word(x));
  }
  return table;
}

bool solves_dct(std::span<const std::uint32_t> table, std::size_t n) {
  if (n % 2 == 0) throw DomainError("density classification is defined for odd n only");
  if (n > kMaxTableNodes || table.size() != (std::size_t{1} << n)) {
    throw DimensionError("transition table size does not match 2^n");
  }
  for (std::size_t x = 0; x < table.size(); ++x) {
    if ((2 * std::popcount(table[x]) > static_cast<int>(n)) !=
        (2 * std::popcount(static_cast<std::uint32_t>(x)) > static_cast<int>(n))) {
      return false;
    }
  }
  std::vector<std::uint8_t> state;
  std::vector<std::uint32_t> path;
  return table_acyclic_off_uniform(table, state, path);
}

bool in_universe(GraphCode code, const UniverseOptions& options) {
  require_code_size(code.n);
  const std::uint32_t required = universe_flags(options);
  return (property_flags(code.code, code.n) & required) == required;
}

SolverCensus enumerate_solvers(std::size_t n, const CensusOptions& options) {
  if (n % 2 == 0) {
    throw DomainError("density classification is defined for odd n only (got n = " +
                      std::to_string(n) + ")");
  }
  const std::size_t ceiling = options.allow_large ? kMaxCensusNodes : std::min(options.max_nodes, kMaxCensusNodes);
  if (n > ceiling) {
    throw BudgetError("census of n = " + std::to_string(n) + " sweeps 2^" + std::to_string(n * n) +
                          " graphs; the limit is n <= " + std::to_string(ceiling) +
                          (options.allow_large ? "" : " without an explicit override"),
                      std::uint64_t{1} << (n * n));
  }
  if (options.block_size == 0) throw ParameterError("census block size must be positive");

  const std::uint32_t required = universe_flags(options.universe);
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  const unsigned jobs = resolve_jobs(options.jobs);

  CensusCheckpoint state;
  state.n = static_cast<std::uint32_t>(n);
  state.flags = required;
  if (options.resume_file && std::filesystem::exists(*options.resume_file)) {
    state = load_checkpoint(*options.resume_file);
    if (state.n != n || state.flags != required) {
      throw ParameterError("resume file " + options.resume_file->string() +
                           " belongs to a different census (n = " + std::to_string(state.n) +
                           ", flags = " + std::to_string(state.flags) + ")");
    }
  }

  const Canonicalizer canon(n);
  while (state.next_code < total) {
    const std::uint64_t lo = state.next_code;
    const std::uint64_t hi = std::min(total, lo + options.block_size);
    const std::uint64_t span = hi - lo;
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(jobs, span));
    std::vector<BlockResult> parts(workers);
    {
      const std::uint64_t chunk = (span + workers - 1) / workers;
      std::vector<std::jthread> threads;
      for (unsigned w = 1; w < workers; ++w) {
        const std::uint64_t a = std::min(hi, lo + chunk * w);
        const std::uint64_t b = std::min(hi, a + chunk);
        threads.emplace_back([&, a, b, w] { sweep(n, required, canon, a, b, parts[w]); });
      }
      sweep(n, required, canon, lo, std::min(hi, lo + chunk), parts[0]);
    }
    for (auto& part : parts) {
      state.universe_seen += part.universe;
      for (std::size_t m = 0; m < 8; ++m) state.raw[m] += part.raw[m];
      const auto middle = static_cast<std::ptrdiff_t>(state.codes.size());
      state.codes.insert(state.codes.end(), part.codes.begin(), part.codes.end());
      std::inplace_merge(state.codes.begin(), state.codes.begin() + middle, state.codes.end());
      state.codes.erase(std::unique(state.codes.begin(), state.codes.end()), state.codes.end());
    }
    state.next_code = hi;
    if (options.resume_file) save_checkpoint(*options.resume_file, state);
    if (options.progress) options.progress(state.next_code, total);
  }

  SolverCensus census;
  census.n = n;
  census.options = options.universe;
  census.universe_size = state.universe_seen;
  census.raw_solver_count = state.raw[required];
  census.canonical_codes = state.codes;
  census.canonical_solver_count = state.codes.size();
  for (std::uint32_t m = 0; m < 8; ++m) {
    if ((m & required) != required) continue;
    VariantCount variant{universe_from_flags(m), state.raw[m], 0};
    for (const auto c : state.codes) {
      if ((property_flags(c, n) & m) == m) ++variant.canonical;
    }
    census.variants.push_back(variant);
  }
  return census;
}

}  // namespace mban
