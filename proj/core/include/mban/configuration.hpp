#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mban {

/// Global state of a network: one bit per automaton, packed into 64-bit words.
///
/// Bit v of the packed representation holds x_v, so for n <= 64 the whole
/// configuration is the integer `to_word()` with automaton 0 as the least
/// significant bit. The text form writes automaton 0 first (leftmost).
class Configuration {
 public:
  static constexpr std::size_t kWordBits = 64;

  Configuration() = default;

  /// All-zero configuration of n automata.
  explicit Configuration(std::size_t n);

  static Configuration uniform(std::size_t n, bool value);

  /// Builds from the low n bits of `bits`; requires n <= 64.
  static Configuration from_word(std::size_t n, std::uint64_t bits);

  /// Parses a string of '0'/'1'; throws ParseError on any other character or
  /// on an empty string.
  static Configuration parse(std::string_view text);

  std::size_t size() const noexcept { return n_; }

  bool test(std::size_t v) const;
  bool operator[](std::size_t v) const { return test(v); }
  void set(std::size_t v, bool value);

  std::size_t ones() const noexcept;
  std::size_t zeros() const noexcept { return n_ - ones(); }

  /// Global majority state: true iff ones > n/2. Meaningful for odd n.
  bool majority() const noexcept { return 2 * ones() > n_; }

  bool is_uniform() const noexcept;

  Configuration complement() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// Packed integer value; requires n <= 64.
  std::uint64_t to_word() const;

  std::string to_string() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

  /// Orders by size, then by integer value (automaton 0 least significant).
  friend std::strong_ordering operator<=>(const Configuration& a, const Configuration& b);

 private:
  friend class MajorityNetwork;

  void clear_padding() noexcept;

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::size_t words_for(std::size_t n) noexcept {
  return (n + Configuration::kWordBits - 1) / Configuration::kWordBits;
}

}  // namespace mban
