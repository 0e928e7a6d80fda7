#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "voicepack/algorithm.hpp"
#include "voicepack/bytes.hpp"
#include "voicepack/codec_config.hpp"
#include "voicepack/sms.hpp"

namespace voicepack {

/// Opaque voice clip bytes (an .amr file is not parsed).
struct VoicePayload {
  Bytes bytes;
  std::string source_label;
};

/// Characters 0..255 obtained from the payload's unsigned octet values.
using ExtAsciiText = std::u32string;

ExtAsciiText bytes_to_ext_ascii(ByteView bytes);

/// Throws NonExtAsciiCodePoint for any code point above 255.
Bytes ext_ascii_to_bytes(const ExtAsciiText& text);

struct SmsBundle {
  std::uint8_t reference = 0;
  std::vector<sms::Segment> segments;
  AlgorithmId algorithm = AlgorithmId::None;
};

/// payload -> extended ASCII -> CompressedBlob -> concatenated SMS parts.
SmsBundle encode_message(const VoicePayload& payload, AlgorithmId algorithm, const CodecConfig& cfg,
                         std::uint8_t reference);

/// Reverse of encode_message. Throws MissingSegmentError, or CorruptStream for
/// conflicting duplicates and undecodable content.
VoicePayload decode_message(const SmsBundle& bundle, const CodecConfig& cfg);

}  // namespace voicepack
