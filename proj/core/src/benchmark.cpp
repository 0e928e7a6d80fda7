#include "voicepack/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "voicepack/codecs.hpp"
#include "voicepack/error.hpp"
#include "voicepack/sms.hpp"

namespace voicepack::bench {

double compression_ratio(std::size_t original, std::size_t compressed) {
  if (compressed == 0) fail(ErrorKind::ZeroCompressedSize, "compressed size is zero");
  return static_cast<double>(original) / static_cast<double>(compressed);
}

std::vector<BenchmarkRecord> run_benchmark(const std::vector<CorpusItem>& corpus,
                                           std::span<const AlgorithmId> algorithms, const CodecConfig& cfg,
                                           unsigned threads) {
  if (corpus.empty()) fail(ErrorKind::InvalidArgument, "benchmark corpus is empty");

  std::vector<AlgorithmId> algs = {AlgorithmId::None};
  for (const auto a : algorithms) {
    if (std::find(algs.begin(), algs.end(), a) == algs.end()) algs.push_back(a);
  }

  std::vector<BenchmarkRecord> records(corpus.size() * algs.size());
  auto measure = [&](std::size_t item_index) {
    const auto& item = corpus[item_index];
    const auto& input = item.payload.bytes;
    const auto original = compress(input, AlgorithmId::None, cfg).serialized_size();
    for (std::size_t a = 0; a < algs.size(); ++a) {
      const auto start = std::chrono::steady_clock::now();
      const auto blob = compress(input, algs[a], cfg);
      const auto stop = std::chrono::steady_clock::now();
      if (decompress(blob, cfg) != input) {
        fail(ErrorKind::CorruptStream, std::string(algorithm_name(algs[a])) + " failed to round-trip " +
                                           item.sentence_id + " trial " + std::to_string(item.trial));
      }
      auto& r = records[item_index * algs.size() + a];
      r.sentence_id = item.sentence_id;
      r.trial = item.trial;
      r.algorithm = algs[a];
      r.original_chars = original;
      r.compressed_chars = blob.serialized_size();
      r.ratio = compression_ratio(original, r.compressed_chars);
      r.sms_count = sms::sms_count(r.compressed_chars);
      r.encode_micros = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(corpus.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) {
          try {
            measure(i);
          } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

}  // namespace voicepack::bench
