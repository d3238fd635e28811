#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace kdeck {

/// Philox4x32 with 10 rounds (Salmon et al. counter-based generator).
/// Output depends only on (counter, key), so any sample can be regenerated
/// from its index without replaying the stream.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr std::string_view name = "philox4x32-10";

  static Counter block(Counter ctr, Key key);
};

/// Sequential words from Philox blocks with counter (i, 0, stream_lo, stream_hi)
/// and key taken from the seed. Distinct streams never share a block.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint64_t stream);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

 private:
  Philox4x32::Key key_;
  std::uint64_t stream_;
  std::uint64_t block_index_ = 0;
  Philox4x32::Counter buffer_{};
  int used_ = 4;
};

}  // namespace kdeck
