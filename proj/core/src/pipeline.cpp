#include "voicepack/pipeline.hpp"

#include <string>

#include "voicepack/codecs.hpp"
#include "voicepack/error.hpp"

namespace voicepack {

ExtAsciiText bytes_to_ext_ascii(ByteView bytes) {
  ExtAsciiText text;
  text.reserve(bytes.size());
  for (const auto octet : bytes) text.push_back(static_cast<char32_t>(octet));
  return text;
}

Bytes ext_ascii_to_bytes(const ExtAsciiText& text) {
  Bytes bytes;
  bytes.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] > 0xFF) {
      fail(ErrorKind::NonExtAsciiCodePoint, "code point " + std::to_string(static_cast<std::uint32_t>(text[i])) +
                                                " at index " + std::to_string(i));
    }
    bytes.push_back(static_cast<std::uint8_t>(text[i]));
  }
  return bytes;
}

SmsBundle encode_message(const VoicePayload& payload, AlgorithmId algorithm, const CodecConfig& cfg,
                         std::uint8_t reference) {
  const auto text = bytes_to_ext_ascii(payload.bytes);
  const auto blob = compress(ext_ascii_to_bytes(text), algorithm, cfg);
  return {reference, sms::segment(blob.serialize(), reference), algorithm};
}

VoicePayload decode_message(const SmsBundle& bundle, const CodecConfig& cfg) {
  Bytes wire;
  try {
    wire = sms::reassemble(bundle.segments);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DuplicateConflict) fail(ErrorKind::CorruptStream, e.what());
    throw;
  }
  const auto text = bytes_to_ext_ascii(decompress(wire, cfg));
  return {ext_ascii_to_bytes(text), "sms reference " + std::to_string(bundle.reference)};
}

}  // namespace voicepack
