#pragma once

#include <cstddef>
#include <cstdint>

#include "voicepack/bytes.hpp"

namespace voicepack {

/// MSB-first bit packer. The final partial octet is zero-padded by finish().
class BitWriter {
 public:
  void put_bit(unsigned bit) {
    acc_ = static_cast<std::uint8_t>((acc_ << 1) | (bit & 1u));
    if (++fill_ == 8) {
      out_.push_back(acc_);
      acc_ = 0;
      fill_ = 0;
    }
  }

  void put_bits(std::uint32_t value, int count) {
    for (int i = count - 1; i >= 0; --i) put_bit((value >> i) & 1u);
  }

  std::size_t bit_count() const noexcept { return out_.size() * 8 + fill_; }

  Bytes finish() && {
    if (fill_ != 0) out_.push_back(static_cast<std::uint8_t>(acc_ << (8 - fill_)));
    return std::move(out_);
  }

 private:
  Bytes out_;
  std::uint8_t acc_ = 0;
  int fill_ = 0;
};

/// MSB-first bit reader over a borrowed buffer. Reading past the end yields
/// zero bits and is counted in overrun(); callers decide how much is legal.
class BitReader {
 public:
  explicit BitReader(ByteView in) noexcept : in_(in) {}

  unsigned get_bit() noexcept {
    if (pos_ >= in_.size() * 8) {
      ++overrun_;
      return 0;
    }
    const unsigned bit = (in_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
    ++pos_;
    return bit;
  }

  std::uint32_t get_bits(int count) noexcept {
    std::uint32_t value = 0;
    for (int i = 0; i < count; ++i) value = (value << 1) | get_bit();
    return value;
  }

  std::size_t remaining() const noexcept { return in_.size() * 8 - pos_; }
  std::size_t overrun() const noexcept { return overrun_; }

 private:
  ByteView in_;
  std::size_t pos_ = 0;
  std::size_t overrun_ = 0;
};

}  // namespace voicepack
