#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace voicepack {

/// Codec identifier. The enumerator value is the wire octet.
enum class AlgorithmId : std::uint8_t {
  None = 0,  // pass-through baseline
  Lzw = 1,
  Lzma = 2,
  Huffman = 3,
  Ppm = 4,
  Ac = 5,
  Bwt = 6,
};

inline constexpr std::array<AlgorithmId, 7> kAllAlgorithms = {
    AlgorithmId::None, AlgorithmId::Lzw, AlgorithmId::Lzma, AlgorithmId::Huffman,
    AlgorithmId::Ppm,  AlgorithmId::Ac,  AlgorithmId::Bwt};

/// The six compressors, without the pass-through baseline.
inline constexpr std::array<AlgorithmId, 6> kCompressors = {
    AlgorithmId::Lzw, AlgorithmId::Lzma, AlgorithmId::Huffman,
    AlgorithmId::Ppm, AlgorithmId::Ac,   AlgorithmId::Bwt};

constexpr std::uint8_t to_octet(AlgorithmId id) noexcept { return static_cast<std::uint8_t>(id); }

constexpr std::optional<AlgorithmId> algorithm_from_octet(std::uint8_t octet) noexcept {
  if (octet > 6) return std::nullopt;
  return static_cast<AlgorithmId>(octet);
}

/// Lower-case flag name: none, lzw, lzma, huffman, ppm, ac, bwt.
std::string_view algorithm_name(AlgorithmId id) noexcept;
std::optional<AlgorithmId> algorithm_from_name(std::string_view name) noexcept;

/// Display label used in reports; the baseline is shown as "AMR Codec".
std::string_view algorithm_label(AlgorithmId id) noexcept;

}  // namespace voicepack
