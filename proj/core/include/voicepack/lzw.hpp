#pragma once

#include <cstdint>
#include <vector>

#include "voicepack/bytes.hpp"

namespace voicepack {

/// Dictionary codes 0..255 are the single octets; new strings are numbered
/// from 256. Once 2^max_code_bits entries exist the dictionary is frozen.
using LzwCodes = std::vector<std::uint32_t>;

LzwCodes lzw_encode(ByteView input, int max_code_bits);

/// Throws CorruptStream when a code exceeds the next free dictionary slot.
Bytes lzw_decode(const LzwCodes& codes, int max_code_bits);

/// Width in bits of the code at position `index` in the code sequence.
/// Starts at 9 and grows with the dictionary, capped at max_code_bits.
int lzw_code_width(std::size_t index, int max_code_bits) noexcept;

/// Variable-width MSB-first packing of a code sequence.
Bytes lzw_pack(const LzwCodes& codes, int max_code_bits);

/// Reads codes until fewer bits than the next code's width remain.
LzwCodes lzw_unpack(ByteView packed, int max_code_bits);

}  // namespace voicepack
