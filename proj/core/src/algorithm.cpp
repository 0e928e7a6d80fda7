#include "voicepack/algorithm.hpp"

#include <array>

namespace voicepack {

namespace {

constexpr std::array<std::string_view, 7> kNames = {"none", "lzw", "lzma", "huffman",
                                                    "ppm",  "ac",  "bwt"};

}  // namespace

std::string_view algorithm_name(AlgorithmId id) noexcept { return kNames[to_octet(id)]; }

std::optional<AlgorithmId> algorithm_from_name(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<AlgorithmId>(i);
  }
  return std::nullopt;
}

std::string_view algorithm_label(AlgorithmId id) noexcept {
  switch (id) {
    case AlgorithmId::None: return "AMR Codec";
    case AlgorithmId::Lzw: return "LZW";
    case AlgorithmId::Lzma: return "LZMA";
    case AlgorithmId::Huffman: return "Huffman";
    case AlgorithmId::Ppm: return "PPM";
    case AlgorithmId::Ac: return "AC";
    case AlgorithmId::Bwt: return "BWT";
  }
  return "?";
}

}  // namespace voicepack
