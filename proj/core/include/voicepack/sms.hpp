#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "voicepack/bytes.hpp"

namespace voicepack::sms {

/// 8-bit data SMS user-data capacity.
inline constexpr std::size_t kSingleCapacity = 140;
/// Concatenation user-data header: 05 00 03 ref total seq.
inline constexpr std::size_t kUdhSize = 6;
inline constexpr std::size_t kPartCapacity = kSingleCapacity - kUdhSize;
inline constexpr int kMaxParts = 255;

static_assert(kPartCapacity == 134);

struct Segment {
  std::uint8_t reference = 0;
  int total = 1;
  int seq = 1;
  Bytes body;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Messages needed for `payload_len` octets. An empty message still takes one.
constexpr std::size_t sms_count(std::size_t payload_len) noexcept {
  if (payload_len <= kSingleCapacity) return 1;
  return (payload_len + kPartCapacity - 1) / kPartCapacity;
}

/// Largest body allowed in a segment of a `total`-part message.
constexpr std::size_t body_capacity(int total) noexcept {
  return total == 1 ? kSingleCapacity : kPartCapacity;
}

/// Throws TooManySegments past 255 parts.
std::vector<Segment> segment(ByteView payload, std::uint8_t reference);

/// Order-independent. Identical duplicates are dropped; throws MixedReference,
/// DuplicateConflict, or MissingSegmentError.
Bytes reassemble(std::vector<Segment> segments);

/// File image of a segment: UDH (05 00 03 ref total seq) followed by the body.
Bytes encode_segment(const Segment& segment);

/// Throws MalformedSegmentFile on a bad header, an oversized body, or a
/// non-final part that is not full.
Segment decode_segment(ByteView wire);

}  // namespace voicepack::sms
