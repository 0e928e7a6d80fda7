#include "voicepack/range_coder.hpp"

namespace voicepack {

namespace {

constexpr std::uint32_t kTopValue = 1u << 24;

}  // namespace

void RangeEncoder::shift_low() {
  if (low_ < 0xFF000000u || low_ >= (std::uint64_t{1} << 32)) {
    const auto carry = static_cast<std::uint8_t>(low_ >> 32);
    std::uint8_t temp = cache_;
    do {
      // The very first cached octet is always zero and is not transmitted.
      if (started_) out_.push_back(static_cast<std::uint8_t>(temp + carry));
      started_ = true;
      temp = 0xFF;
    } while (--cache_size_ != 0);
    cache_ = static_cast<std::uint8_t>(low_ >> 24);
  }
  ++cache_size_;
  low_ = (low_ & 0x00FFFFFFu) << 8;
}

void RangeEncoder::encode_bit(BitProbability& prob, unsigned bit) {
  const std::uint32_t bound = (range_ >> BitProbability::kBits) * prob.p;
  if (bit == 0) {
    range_ = bound;
    prob.p = static_cast<std::uint16_t>(prob.p + ((BitProbability::kOne - prob.p) >> BitProbability::kMoveBits));
  } else {
    low_ += bound;
    range_ -= bound;
    prob.p = static_cast<std::uint16_t>(prob.p - (prob.p >> BitProbability::kMoveBits));
  }
  while (range_ < kTopValue) {
    range_ <<= 8;
    shift_low();
  }
}

void RangeEncoder::encode_direct(std::uint32_t value, int count) {
  for (int i = count - 1; i >= 0; --i) {
    range_ >>= 1;
    if ((value >> i) & 1u) low_ += range_;
    while (range_ < kTopValue) {
      range_ <<= 8;
      shift_low();
    }
  }
}

Bytes RangeEncoder::finish() && {
  // Pick the value in [low, low + range) with the most trailing zero bits so
  // that the zero padding the decoder synthesizes can stand in for them.
  for (int shift = 32; shift >= 0; shift -= 8) {
    const std::uint64_t mask = (std::uint64_t{1} << shift) - 1;
    const std::uint64_t candidate = (low_ + mask) & ~mask;
    if (candidate < low_ + range_) {
      low_ = candidate;
      break;
    }
  }
  for (int i = 0; i < 5; ++i) shift_low();
  for (int i = 0; i < 4 && !out_.empty() && out_.back() == 0; ++i) out_.pop_back();
  return std::move(out_);
}

RangeDecoder::RangeDecoder(ByteView in) : in_(in) {
  for (int i = 0; i < 4; ++i) code_ = (code_ << 8) | next_byte();
}

std::uint8_t RangeDecoder::next_byte() noexcept {
  if (pos_ < in_.size()) return in_[pos_++];
  ++overrun_;
  return 0;
}

unsigned RangeDecoder::decode_bit(BitProbability& prob) {
  const std::uint32_t bound = (range_ >> BitProbability::kBits) * prob.p;
  unsigned bit;
  if (code_ < bound) {
    range_ = bound;
    prob.p = static_cast<std::uint16_t>(prob.p + ((BitProbability::kOne - prob.p) >> BitProbability::kMoveBits));
    bit = 0;
  } else {
    code_ -= bound;
    range_ -= bound;
    prob.p = static_cast<std::uint16_t>(prob.p - (prob.p >> BitProbability::kMoveBits));
    bit = 1;
  }
  while (range_ < kTopValue) {
    range_ <<= 8;
    code_ = (code_ << 8) | next_byte();
  }
  return bit;
}

std::uint32_t RangeDecoder::decode_direct(int count) {
  std::uint32_t value = 0;
  for (int i = 0; i < count; ++i) {
    range_ >>= 1;
    unsigned bit = 0;
    if (code_ >= range_) {
      code_ -= range_;
      bit = 1;
    }
    value = (value << 1) | bit;
    while (range_ < kTopValue) {
      range_ <<= 8;
      code_ = (code_ << 8) | next_byte();
    }
  }
  return value;
}

}  // namespace voicepack
