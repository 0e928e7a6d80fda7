#include "voicepack/codec_config.hpp"

#include <string>

#include "voicepack/error.hpp"

namespace voicepack {

namespace {

template <typename T>
void require_range(const char* name, T value, T lo, T hi) {
  if (value < lo || value > hi) {
    fail(ErrorKind::InvalidConfig, std::string(name) + " = " + std::to_string(value) +
                                       " outside " + std::to_string(lo) + ".." +
                                       std::to_string(hi));
  }
}

}  // namespace

CodecConfig::CodecConfig(const Params& params) : params_(params) {
  require_range("lzw_max_code_bits", params.lzw_max_code_bits, kMinLzwBits, kMaxLzwBits);
  require_range("ppm_order", params.ppm_order, 0, kMaxPpmOrder);
  require_range("bwt_block_size", params.bwt_block_size, std::uint32_t{1}, kMaxBwtBlock);
  require_range("lz_window", params.lz_window, std::uint32_t{1}, kMaxLzWindow);
  require_range("lz_min_match", params.lz_min_match, kMinLzMatch, kMaxLzMatch);
  require_range("lz_max_match", params.lz_max_match, params.lz_min_match, kMaxLzMatch);
}

}  // namespace voicepack
