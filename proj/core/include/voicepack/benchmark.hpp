#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "voicepack/algorithm.hpp"
#include "voicepack/codec_config.hpp"
#include "voicepack/corpus.hpp"

namespace voicepack::bench {

/// One (sentence, trial, algorithm) measurement. Character counts are
/// serialized container sizes, header included, since that is what the SMS
/// layer carries.
struct BenchmarkRecord {
  std::string sentence_id;
  int trial = 0;
  AlgorithmId algorithm = AlgorithmId::None;
  std::size_t original_chars = 0;
  std::size_t compressed_chars = 0;
  double ratio = 0.0;
  std::size_t sms_count = 0;
  std::int64_t encode_micros = 0;
};

/// original / compressed; higher is better. Throws ZeroCompressedSize.
double compression_ratio(std::size_t original, std::size_t compressed);

/// One record per (item, algorithm), item-major. The pass-through baseline is
/// always measured first even if absent from `algorithms`. Each result is
/// decoded again and checked. Items are spread over `threads` workers
/// (0 = hardware concurrency); the output order does not depend on it.
std::vector<BenchmarkRecord> run_benchmark(const std::vector<CorpusItem>& corpus,
                                           std::span<const AlgorithmId> algorithms, const CodecConfig& cfg,
                                           unsigned threads = 0);

}  // namespace voicepack::bench
