#pragma once

#include <cstdint>

#include "voicepack/bytes.hpp"

namespace voicepack {

/// Move-to-front over a list initialised to 0..255.
Bytes mtf_encode(ByteView input);
Bytes mtf_decode(ByteView ranks);

/// Zero-run tokens. Runs of zeros become bijective base-2 digits over
/// RUNA = 0 and RUNB = 1, least significant first. A nonzero rank r is
/// written as r + 1 when r <= 253; ranks 254 and 255 are written as the
/// escape 255 followed by r - 254.
inline constexpr std::uint8_t kRunA = 0;
inline constexpr std::uint8_t kRunB = 1;
inline constexpr std::uint8_t kRankEscape = 255;

Bytes rle0_encode(ByteView ranks);

/// Throws CorruptStream on a dangling or out-of-range escape, or when the
/// expansion would exceed `max_len` ranks.
Bytes rle0_decode(ByteView tokens, std::size_t max_len = SIZE_MAX);

Bytes mtf_rle_encode(ByteView input);
Bytes mtf_rle_decode(ByteView tokens, std::size_t max_len = SIZE_MAX);

}  // namespace voicepack
