#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "voicepack/bytes.hpp"

namespace voicepack {

/// Adaptive probability that the next binary decision is 0, in units of
/// 1/2048. Moves 1/32 of the distance toward the observed bit.
struct BitProbability {
  static constexpr int kBits = 11;
  static constexpr std::uint32_t kOne = 1u << kBits;
  static constexpr int kMoveBits = 5;

  std::uint16_t p = kOne / 2;
};

/// Binary range encoder with carry propagation through a cached octet.
class RangeEncoder {
 public:
  void encode_bit(BitProbability& prob, unsigned bit);
  void encode_direct(std::uint32_t value, int count);
  Bytes finish() &&;

 private:
  void shift_low();

  std::uint64_t low_ = 0;
  std::uint32_t range_ = 0xFFFFFFFFu;
  std::uint8_t cache_ = 0;
  std::uint64_t cache_size_ = 1;
  bool started_ = false;
  Bytes out_;
};

class RangeDecoder {
 public:
  explicit RangeDecoder(ByteView in);

  unsigned decode_bit(BitProbability& prob);
  std::uint32_t decode_direct(int count);

  /// Octets synthesized past the end of input.
  std::size_t overrun() const noexcept { return overrun_; }

 private:
  std::uint8_t next_byte() noexcept;

  ByteView in_;
  std::size_t pos_ = 0;
  std::size_t overrun_ = 0;
  std::uint32_t range_ = 0xFFFFFFFFu;
  std::uint32_t code_ = 0;
};

/// Fixed-depth binary tree of adaptive bits coding values in [0, 2^Depth).
template <int Depth>
class BitTree {
 public:
  void encode(RangeEncoder& enc, std::uint32_t value) {
    std::uint32_t node = 1;
    for (int i = Depth - 1; i >= 0; --i) {
      const unsigned bit = (value >> i) & 1u;
      enc.encode_bit(probs_[node], bit);
      node = (node << 1) | bit;
    }
  }

  std::uint32_t decode(RangeDecoder& dec) {
    std::uint32_t node = 1;
    for (int i = 0; i < Depth; ++i) node = (node << 1) | dec.decode_bit(probs_[node]);
    return node - (1u << Depth);
  }

  /// Least-significant bit first; used for offset footers.
  void encode_reverse(RangeEncoder& enc, std::uint32_t value) {
    std::uint32_t node = 1;
    for (int i = 0; i < Depth; ++i) {
      const unsigned bit = value & 1u;
      value >>= 1;
      enc.encode_bit(probs_[node], bit);
      node = (node << 1) | bit;
    }
  }

  std::uint32_t decode_reverse(RangeDecoder& dec) {
    std::uint32_t node = 1;
    std::uint32_t value = 0;
    for (int i = 0; i < Depth; ++i) {
      const unsigned bit = dec.decode_bit(probs_[node]);
      node = (node << 1) | bit;
      value |= bit << i;
    }
    return value;
  }

 private:
  std::array<BitProbability, (1u << Depth)> probs_{};
};

}  // namespace voicepack
