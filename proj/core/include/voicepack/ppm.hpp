#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "voicepack/bytes.hpp"

namespace voicepack {

/// Symbol statistics for one context string.
struct ContextStats {
  std::vector<std::pair<std::uint8_t, std::uint32_t>> symbols;  // first-seen order
  std::uint32_t total = 0;

  std::uint32_t count(std::uint8_t symbol) const noexcept;
  /// Escape frequency: number of distinct symbols seen (PPM method C).
  std::uint32_t escape() const noexcept { return static_cast<std::uint32_t>(symbols.size()); }
};

/// Counts of every symbol following every context of length 0..order.
class ContextModel {
 public:
  /// Contexts are halved once their total passes this.
  static constexpr std::uint32_t kRescaleLimit = 1u << 16;

  explicit ContextModel(int order);

  int order() const noexcept { return order_; }

  /// Statistics for the given context string (its length selects the order),
  /// or nullptr if the context never occurred.
  const ContextStats* find(std::span<const std::uint8_t> context) const;

  std::uint32_t count(std::span<const std::uint8_t> context, std::uint8_t symbol) const;

  /// Records `symbol` after `history` in the contexts of length
  /// lowest..min(order, history.size()). Passing the order the symbol was
  /// coded at leaves the shorter contexts untouched (update exclusion).
  void update(std::span<const std::uint8_t> history, std::uint8_t symbol, int lowest = 0);

 private:
  static std::uint64_t pack(std::span<const std::uint8_t> context) noexcept;

  int order_;
  std::vector<std::unordered_map<std::uint64_t, ContextStats>> tables_;
};

/// PPMC: tries the order-k context first, escaping to shorter contexts with
/// exclusion of symbols already ruled out, down to a uniform order -1 model
/// over 256 octets plus end-of-stream. Arithmetic coded.
Bytes ppm_encode(ByteView input, int order);

/// Throws CorruptStream when the end marker is missing or misplaced.
Bytes ppm_decode(ByteView stream, int order, std::size_t expected_len);

}  // namespace voicepack
