#pragma once

#include <cstdint>

namespace voicepack {

/// Tunables shared by sender and receiver. Not serialized in the blob, so a
/// non-default value that affects decoding must be agreed out of band.
class CodecConfig {
 public:
  struct Params {
    int lzw_max_code_bits = 14;
    int ppm_order = 3;
    std::uint32_t bwt_block_size = 65536;
    std::uint32_t lz_window = 32768;
    int lz_min_match = 3;
    int lz_max_match = 273;
  };

  static constexpr int kMinLzwBits = 9;
  static constexpr int kMaxLzwBits = 16;
  static constexpr int kMaxPpmOrder = 8;
  static constexpr std::uint32_t kMaxBwtBlock = 1u << 24;
  static constexpr std::uint32_t kMaxLzWindow = 1u << 24;
  static constexpr int kMinLzMatch = 2;
  static constexpr int kMaxLzMatch = 273;

  CodecConfig() = default;

  /// Throws Error(InvalidConfig) when any field is out of range.
  explicit CodecConfig(const Params& params);

  int lzw_max_code_bits() const noexcept { return params_.lzw_max_code_bits; }
  int ppm_order() const noexcept { return params_.ppm_order; }
  std::uint32_t bwt_block_size() const noexcept { return params_.bwt_block_size; }
  std::uint32_t lz_window() const noexcept { return params_.lz_window; }
  int lz_min_match() const noexcept { return params_.lz_min_match; }
  int lz_max_match() const noexcept { return params_.lz_max_match; }

  const Params& params() const noexcept { return params_; }

  friend bool operator==(const CodecConfig& a, const CodecConfig& b) noexcept {
    const auto& x = a.params_;
    const auto& y = b.params_;
    return x.lzw_max_code_bits == y.lzw_max_code_bits && x.ppm_order == y.ppm_order &&
           x.bwt_block_size == y.bwt_block_size && x.lz_window == y.lz_window &&
           x.lz_min_match == y.lz_min_match && x.lz_max_match == y.lz_max_match;
  }

 private:
  Params params_{};
};

}  // namespace voicepack
