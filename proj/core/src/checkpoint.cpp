#include <array>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "mban/enumerate.hpp"
#include "mban/errors.hpp"

namespace mban {
namespace {

constexpr std::array<char, 8> kMagic{'M', 'B', 'A', 'N', 'C', 'E', 'N', 'S'};
constexpr std::size_t kHeaderBytes = 112;

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFFU));
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFFU));
}

class Reader {
 public:
  Reader(const std::string& bytes, const std::filesystem::path& path) : bytes_(bytes), path_(path) {}

  std::uint64_t get(std::size_t width) {
    if (pos_ + width > bytes_.size()) {
      throw ParseError("checkpoint " + path_.string() + ": truncated at byte " + std::to_string(pos_));
    }
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < width; ++i) {
      v |= std::uint64_t{static_cast<unsigned char>(bytes_[pos_ + i])} << (8 * i);
    }
    pos_ += width;
    return v;
  }

  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  const std::string& bytes_;
  const std::filesystem::path& path_;
  std::size_t pos_ = kMagic.size();
};

}  // namespace

void save_checkpoint(const std::filesystem::path& path, const CensusCheckpoint& state) {
  std::string out(kMagic.begin(), kMagic.end());
  out.reserve(kHeaderBytes + 8 * state.codes.size());
  put_u32(out, CensusCheckpoint::kVersion);
  put_u32(out, state.n);
  put_u32(out, state.flags);
  put_u32(out, 0);
  put_u64(out, state.next_code);
  put_u64(out, state.universe_seen);
  for (const auto r : state.raw) put_u64(out, r);
  put_u64(out, state.codes.size());
  for (const auto c : state.codes) put_u64(out, c);

  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("cannot open " + tmp.string() + " for writing");
    file.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!file) throw Error("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("cannot replace " + path.string() + ": " + ec.message());
}

CensusCheckpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open " + path.string());
  const std::string bytes{std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
  if (bytes.size() < kHeaderBytes || std::memcmp(bytes.data(), kMagic.data(), kMagic.size()) != 0) {
    throw ParseError("checkpoint " + path.string() + ": not a census resume file");
  }
  Reader in(bytes, path);
  const auto version = static_cast<std::uint32_t>(in.get(4));
  if (version != CensusCheckpoint::kVersion) {
    throw ParseError("checkpoint " + path.string() + ": unsupported version " + std::to_string(version));
  }
  CensusCheckpoint state;
  state.n = static_cast<std::uint32_t>(in.get(4));
  state.flags = static_cast<std::uint32_t>(in.get(4));
  in.get(4);
  state.next_code = in.get(8);
  state.universe_seen = in.get(8);
  for (auto& r : state.raw) r = in.get(8);
  const std::uint64_t count = in.get(8);
  if (count > in.remaining() / 8) {
    throw ParseError("checkpoint " + path.string() + ": code list is truncated");
  }
  state.codes.resize(count);
  for (auto& c : state.codes) c = in.get(8);
  return state;
}

}  // namespace mban
