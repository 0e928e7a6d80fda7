#pragma once

#include <cstddef>
#include <cstdint>

#include "voicepack/bit_io.hpp"
#include "voicepack/bytes.hpp"

namespace voicepack {

/// Multi-symbol binary arithmetic coder with 32-bit registers. Symbols are
/// described by a cumulative frequency slice [cum_lo, cum_hi) of `total`.
/// Underflow (straddling the midpoint) is handled with pending bits.
namespace arith {

inline constexpr int kCodeBits = 32;
inline constexpr std::uint64_t kTop = (std::uint64_t{1} << kCodeBits) - 1;
inline constexpr std::uint64_t kHalf = std::uint64_t{1} << (kCodeBits - 1);
inline constexpr std::uint64_t kQuarter = std::uint64_t{1} << (kCodeBits - 2);
/// Largest frequency total the coder accepts without losing a symbol.
inline constexpr std::uint32_t kMaxTotal = 1u << 24;

/// Closed integer interval [low, high] on the 32-bit code line.
struct Interval {
  std::uint64_t low = 0;
  std::uint64_t high = kTop;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Selects the sub-range of `current` that belongs to [cum_lo, cum_hi)/total.
constexpr Interval narrow(Interval current, std::uint32_t cum_lo, std::uint32_t cum_hi,
                          std::uint32_t total) noexcept {
  const std::uint64_t range = current.high - current.low + 1;
  return {current.low + range * cum_lo / total, current.low + range * cum_hi / total - 1};
}

}  // namespace arith

class ArithmeticEncoder {
 public:
  void encode(std::uint32_t cum_lo, std::uint32_t cum_hi, std::uint32_t total);

  /// Current interval before any pending renormalization output; exposed for tests.
  arith::Interval interval() const noexcept { return interval_; }

  Bytes finish() &&;

 private:
  void emit(unsigned bit);

  arith::Interval interval_{};
  std::uint64_t pending_ = 0;
  BitWriter out_;
};

class ArithmeticDecoder {
 public:
  explicit ArithmeticDecoder(ByteView in);

  /// Scaled code value in [0, total) identifying the next symbol's slice.
  std::uint32_t target(std::uint32_t total) const noexcept;

  void consume(std::uint32_t cum_lo, std::uint32_t cum_hi, std::uint32_t total);

  /// Number of zero bits synthesized past the end of the input.
  std::size_t overrun() const noexcept { return in_.overrun(); }

 private:
  arith::Interval interval_{};
  std::uint64_t value_ = 0;
  BitReader in_;
};

}  // namespace voicepack
