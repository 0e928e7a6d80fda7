#pragma once

#include <cstddef>

#include "voicepack/bytes.hpp"
#include "voicepack/codec_config.hpp"

namespace voicepack {

/// LZ77 parse entropy-coded with an adaptive binary range coder. Every
/// probability is selected by a state built from the kinds of the two
/// preceding tokens (literal, match, repeat-last-offset match). The stream
/// is self-terminating only together with the decoded length.
Bytes lzma_encode(ByteView input, const CodecConfig& cfg);

/// Throws CorruptStream on an impossible match or a stream that runs dry.
Bytes lzma_decode(ByteView payload, std::size_t expected_len, const CodecConfig& cfg);

}  // namespace voicepack
