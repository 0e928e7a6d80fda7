#pragma once

#include <cstdint>
#include <vector>

#include "voicepack/bytes.hpp"
#include "voicepack/codec_config.hpp"

namespace voicepack {

/// A literal octet, or a back-reference copying `length` octets starting
/// `offset` octets behind the write position. offset < length is legal and
/// repeats the overlapped bytes.
struct LzToken {
  enum class Kind : std::uint8_t { Literal, Match };

  Kind kind = Kind::Literal;
  std::uint8_t literal = 0;
  std::uint32_t offset = 0;
  std::uint32_t length = 0;

  static LzToken make_literal(std::uint8_t octet) noexcept { return {Kind::Literal, octet, 0, 0}; }
  static LzToken make_match(std::uint32_t offset, std::uint32_t length) noexcept {
    return {Kind::Match, 0, offset, length};
  }

  friend bool operator==(const LzToken&, const LzToken&) = default;
};

/// Greedy longest-match parse over a sliding window of cfg.lz_window()
/// octets. Among equally long matches the nearest one wins.
std::vector<LzToken> lz77_parse(ByteView input, const CodecConfig& cfg);

/// Replays tokens. Throws CorruptStream on an offset reaching before the start.
Bytes lz77_replay(const std::vector<LzToken>& tokens);

}  // namespace voicepack
