#include "voicepack/arithmetic_coder.hpp"

namespace voicepack {

using arith::kHalf;
using arith::kQuarter;

void ArithmeticEncoder::emit(unsigned bit) {
  out_.put_bit(bit);
  for (; pending_ > 0; --pending_) out_.put_bit(bit ^ 1u);
}

void ArithmeticEncoder::encode(std::uint32_t cum_lo, std::uint32_t cum_hi, std::uint32_t total) {
  interval_ = arith::narrow(interval_, cum_lo, cum_hi, total);
  auto& [low, high] = interval_;
  for (;;) {
    if (high < kHalf) {
      emit(0);
    } else if (low >= kHalf) {
      emit(1);
      low -= kHalf;
      high -= kHalf;
    } else if (low >= kQuarter && high < kHalf + kQuarter) {
      ++pending_;
      low -= kQuarter;
      high -= kQuarter;
    } else {
      break;
    }
    low <<= 1;
    high = (high << 1) | 1u;
  }
}

Bytes ArithmeticEncoder::finish() && {
  // Two more bits select a quarter lying wholly inside [low, high].
  ++pending_;
  emit(interval_.low < kQuarter ? 0 : 1);
  return std::move(out_).finish();
}

ArithmeticDecoder::ArithmeticDecoder(ByteView in) : in_(in) {
  for (int i = 0; i < arith::kCodeBits; ++i) value_ = (value_ << 1) | in_.get_bit();
}

std::uint32_t ArithmeticDecoder::target(std::uint32_t total) const noexcept {
  const std::uint64_t range = interval_.high - interval_.low + 1;
  return static_cast<std::uint32_t>(((value_ - interval_.low + 1) * total - 1) / range);
}

void ArithmeticDecoder::consume(std::uint32_t cum_lo, std::uint32_t cum_hi, std::uint32_t total) {
  interval_ = arith::narrow(interval_, cum_lo, cum_hi, total);
  auto& [low, high] = interval_;
  for (;;) {
    if (high < kHalf) {
      // nothing to subtract
    } else if (low >= kHalf) {
      low -= kHalf;
      high -= kHalf;
      value_ -= kHalf;
    } else if (low >= kQuarter && high < kHalf + kQuarter) {
      low -= kQuarter;
      high -= kQuarter;
      value_ -= kQuarter;
    } else {
      break;
    }
    low <<= 1;
    high = (high << 1) | 1u;
    value_ = (value_ << 1) | in_.get_bit();
  }
}

}  // namespace voicepack
