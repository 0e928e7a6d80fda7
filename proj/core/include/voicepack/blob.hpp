#pragma once

#include <array>
#include <cstdint>

#include "voicepack/algorithm.hpp"
#include "voicepack/bytes.hpp"

namespace voicepack {

/// Self-describing compressed container:
///   "CVT1" | algorithm octet | original length (u32 BE) | payload
struct CompressedBlob {
  static constexpr std::array<std::uint8_t, 4> kMagic = {0x43, 0x56, 0x54, 0x31};
  static constexpr std::size_t kHeaderSize = 9;

  AlgorithmId algorithm = AlgorithmId::None;
  std::uint32_t original_len = 0;
  Bytes payload;

  std::size_t serialized_size() const noexcept { return kHeaderSize + payload.size(); }

  Bytes serialize() const;

  /// Throws BadMagic, UnknownAlgorithm, or CorruptStream (short header).
  static CompressedBlob parse(ByteView wire);

  friend bool operator==(const CompressedBlob&, const CompressedBlob&) = default;
};

}  // namespace voicepack
