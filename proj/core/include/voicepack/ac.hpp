#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "voicepack/bytes.hpp"

namespace voicepack {

/// Order-0 adaptive frequency table backed by a Fenwick tree. Every symbol
/// starts at count 1; each occurrence adds `increment`. When the total
/// exceeds `limit` all counts are halved, keeping a floor of 1.
class AdaptiveFrequencyModel {
 public:
  static constexpr std::uint32_t kDefaultIncrement = 128;
  static constexpr std::uint32_t kDefaultLimit = 1u << 20;

  explicit AdaptiveFrequencyModel(int symbols, std::uint32_t increment = kDefaultIncrement,
                                  std::uint32_t limit = kDefaultLimit);

  struct Slice {
    std::uint32_t lo;
    std::uint32_t hi;
  };

  int symbols() const noexcept { return static_cast<int>(counts_.size()); }
  std::uint32_t total() const noexcept { return total_; }
  std::uint32_t count(int symbol) const noexcept { return counts_[symbol]; }
  Slice slice(int symbol) const noexcept;

  /// Symbol whose slice contains `target` (0 <= target < total()).
  int find(std::uint32_t target) const noexcept;

  void update(int symbol);

 private:
  void rebuild();
  std::uint32_t prefix(int end) const noexcept;

  std::vector<std::uint32_t> counts_;
  std::vector<std::uint32_t> tree_;
  std::uint32_t total_ = 0;
  std::uint32_t increment_;
  std::uint32_t limit_;
  int top_bit_ = 1;
};

/// Pseudo-symbol appended after the last octet.
inline constexpr int kEndOfStream = 256;

/// Adaptive order-0 arithmetic coding of `input` followed by end-of-stream.
Bytes ac_encode(ByteView input);

/// Inverse of ac_encode. Throws CorruptStream when more than `max_symbols`
/// octets precede the end-of-stream marker or the stream runs dry.
Bytes ac_decode(ByteView stream, std::size_t max_symbols);

}  // namespace voicepack
