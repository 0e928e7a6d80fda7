#pragma once

#include <cstdint>

#include "voicepack/bytes.hpp"
#include "voicepack/codec_config.hpp"

namespace voicepack {

/// Last column of the sorted rotation matrix plus the row holding the
/// unrotated input. No sentinel is appended.
struct BwtBlock {
  Bytes data;
  std::uint32_t primary_index = 0;

  friend bool operator==(const BwtBlock&, const BwtBlock&) = default;
};

/// Rotations are ordered lexicographically; identical rotations keep their
/// starting-position order, so the unrotated input sorts first among equals.
BwtBlock bwt_forward(ByteView block);

/// Throws CorruptStream if primary_index is not a valid row.
Bytes bwt_inverse(const BwtBlock& block);

/// Blocks of [block_len u32 | primary_index u32 | stream_len u32 | stream],
/// where stream = ac_encode(mtf_rle_encode(last column)).
Bytes bwt_encode(ByteView input, const CodecConfig& cfg);

Bytes bwt_decode(ByteView payload, std::size_t expected_len, const CodecConfig& cfg);

}  // namespace voicepack
