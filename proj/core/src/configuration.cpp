#include "mban/configuration.hpp"

#include <algorithm>
#include <bit>

#include "mban/errors.hpp"

namespace mban {

Configuration::Configuration(std::size_t n) : n_(n), words_(words_for(n), 0) {}

Configuration Configuration::uniform(std::size_t n, bool value) {
  Configuration x(n);
  if (value) {
    std::fill(x.words_.begin(), x.words_.end(), ~std::uint64_t{0});
    x.clear_padding();
  }
  return x;
}

Configuration Configuration::from_word(std::size_t n, std::uint64_t bits) {
  if (n > kWordBits) {
    throw DimensionError("from_word: n = " + std::to_string(n) + " exceeds 64");
  }
  Configuration x(n);
  if (n > 0) {
    x.words_[0] = bits;
    x.clear_padding();
  }
  return x;
}

Configuration Configuration::parse(std::string_view text) {
  if (text.empty()) throw ParseError("configuration: empty string");
  Configuration x(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw ParseError("configuration: unexpected character '" + std::string(1, c) +
                       "' at offset " + std::to_string(i));
    }
    x.set(i, c == '1');
  }
  return x;
}

bool Configuration::test(std::size_t v) const {
  if (v >= n_) throw DimensionError("configuration index " + std::to_string(v) + " out of range");
  return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
}

void Configuration::set(std::size_t v, bool value) {
  if (v >= n_) throw DimensionError("configuration index " + std::to_string(v) + " out of range");
  const std::uint64_t bit = std::uint64_t{1} << (v % kWordBits);
  if (value) {
    words_[v / kWordBits] |= bit;
  } else {
    words_[v / kWordBits] &= ~bit;
  }
}

std::size_t Configuration::ones() const noexcept {
  std::size_t count = 0;
  for (const auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

bool Configuration::is_uniform() const noexcept {
  const std::size_t k = ones();
  return k == 0 || k == n_;
}

Configuration Configuration::complement() const {
  Configuration x = *this;
  for (auto& w : x.words_) w = ~w;
  x.clear_padding();
  return x;
}

std::uint64_t Configuration::to_word() const {
  if (n_ > kWordBits) {
    throw DimensionError("to_word: n = " + std::to_string(n_) + " exceeds 64");
  }
  return words_.empty() ? 0 : words_[0];
}

std::string Configuration::to_string() const {
  std::string s(n_, '0');
  for (std::size_t v = 0; v < n_; ++v) {
    if ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) s[v] = '1';
  }
  return s;
}

std::strong_ordering operator<=>(const Configuration& a, const Configuration& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void Configuration::clear_padding() noexcept {
  const std::size_t tail = n_ % kWordBits;
  if (tail != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
}

}  // namespace mban
