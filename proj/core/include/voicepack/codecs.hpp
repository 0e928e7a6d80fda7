#pragma once

#include "voicepack/algorithm.hpp"
#include "voicepack/blob.hpp"
#include "voicepack/bytes.hpp"
#include "voicepack/codec_config.hpp"

namespace voicepack {

/// Pure function of (input, algorithm, cfg). Any octet sequence shorter
/// than 2^32 is accepted, including the empty one.
CompressedBlob compress(ByteView input, AlgorithmId algorithm, const CodecConfig& cfg = {});

/// `cfg` must match the one used to compress. Throws CorruptStream when the
/// payload cannot be decoded or does not yield exactly original_len octets.
Bytes decompress(const CompressedBlob& blob, const CodecConfig& cfg = {});

/// Parses the wire form first; adds BadMagic / UnknownAlgorithm.
Bytes decompress(ByteView wire, const CodecConfig& cfg = {});

}  // namespace voicepack
