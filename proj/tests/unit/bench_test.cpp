#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "voicepack/benchmark.hpp"
#include "voicepack/error.hpp"
#include "voicepack/report.hpp"

using namespace voicepack;
using namespace voicepack::bench;
namespace fs = std::filesystem;

namespace {

const std::vector<BenchmarkRecord>& full_run() {
  static const auto records = run_benchmark(generate_corpus({}), kCompressors, {});
  return records;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, double> mean_chars(AlgorithmId alg) {
  std::map<std::string, double> sum;
  std::map<std::string, int> n;
  for (const auto& r : full_run()) {
    if (r.algorithm != alg) continue;
    sum[r.sentence_id] += static_cast<double>(r.compressed_chars);
    ++n[r.sentence_id];
  }
  for (auto& [id, s] : sum) s /= n[id];
  return sum;
}

}  // namespace

TEST(Corpus, SentenceMetadata) {
  const auto& table = sentence_table();
  EXPECT_EQ(table[0].id, "S1");
  EXPECT_EQ(table[0].text, "Quick brown fox jumps over the lazy dog");
  EXPECT_EQ(table[0].word_count, 8);
  EXPECT_EQ(table[0].letter_count, 32);
  EXPECT_EQ(table[6].id, "S7");
  EXPECT_EQ(table[6].text, "Hello world");
  EXPECT_EQ(table[6].word_count, 2);
  EXPECT_EQ(table[6].letter_count, 10);
  EXPECT_EQ(table[2].word_count, 32);
  EXPECT_EQ(table[2].letter_count, 96);
  for (const auto& s : table) {
    const auto words = sentence_words(s.text);
    std::size_t letters = 0;
    for (const auto& w : words) letters += w.size();
    EXPECT_EQ(static_cast<int>(letters), s.letter_count) << s.id;
  }
}

TEST(Corpus, PayloadSizes) {
  const auto corpus = generate_corpus({});
  ASSERT_EQ(corpus.size(), 90u);
  std::map<std::string, std::size_t> size;
  for (const auto& item : corpus) {
    const auto words = sentence_words(item.text);
    ASSERT_EQ(item.payload.bytes.size(), words.size() * 15 * 32) << item.sentence_id;
    size[item.sentence_id] = item.payload.bytes.size();
  }
  EXPECT_EQ(size["S4"], 2400u);
  EXPECT_EQ(size["S2"], 2 * size["S1"]);
  EXPECT_EQ(size["S3"], 3 * size["S1"]);
}

TEST(Corpus, DeterministicAndTrialsDiffer) {
  const auto a = generate_corpus({});
  const auto b = generate_corpus({});
  CorpusSpec other;
  other.seed = 43;
  const auto c = generate_corpus(other);
  std::set<Bytes> distinct;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a[i].payload.bytes, b[i].payload.bytes);
    EXPECT_NE(a[i].payload.bytes, c[i].payload.bytes);
    distinct.insert(a[i].payload.bytes);
  }
  EXPECT_EQ(distinct.size(), a.size());
}

TEST(Corpus, NoiseOnlyTouchesVolatileLowBits) {
  const auto corpus = generate_corpus({});
  const auto& item = corpus.front();
  const auto words = sentence_words(item.text);
  const auto& p = item.payload.bytes;
  for (std::size_t w = 0; w < words.size(); ++w) {
    const auto pattern = word_pattern(words[w], 32);
    ASSERT_EQ(pattern.frame[0], 0x3C);
    ASSERT_EQ(pattern.volatile_octets.size(), static_cast<std::size_t>(kVolatileOctets));
    for (int f = 0; f < 15; ++f) {
      for (std::size_t i = 0; i < 32; ++i) {
        const auto got = p[(w * 15 + static_cast<std::size_t>(f)) * 32 + i];
        const bool is_volatile = std::count(pattern.volatile_octets.begin(), pattern.volatile_octets.end(), i) > 0;
        if (is_volatile) {
          ASSERT_EQ(got | 1, pattern.frame[i] | 1);
        } else {
          ASSERT_EQ(got, pattern.frame[i]);
        }
      }
    }
  }
}

TEST(Corpus, ValidateRejectsNonsense) {
  CorpusSpec bad;
  bad.bytes_per_frame = 1;
  EXPECT_THROW(bad.validate(), Error);
  bad = {};
  bad.frames_per_word = 0;
  EXPECT_THROW(generate_corpus(bad), Error);
}

TEST(Corpus, ManifestRoundTrip) {
  oracle::TempDir tmp("manifest");
  const auto corpus = generate_corpus({});
  write_corpus(corpus, tmp.path());
  const auto loaded = load_corpus_manifest(tmp.path() / "manifest.csv");
  ASSERT_EQ(loaded.size(), corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    EXPECT_EQ(loaded[i].sentence_id, corpus[i].sentence_id);
    EXPECT_EQ(loaded[i].trial, corpus[i].trial);
    EXPECT_EQ(loaded[i].payload.bytes, corpus[i].payload.bytes);
  }
}

TEST(Ratio, Arithmetic) {
  EXPECT_DOUBLE_EQ(compression_ratio(1000, 1000), 1.0);
  EXPECT_DOUBLE_EQ(compression_ratio(1000, 250), 4.0);
  try {
    compression_ratio(10, 0);
    FAIL() << "expected ZeroCompressedSize";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroCompressedSize);
  }
}

TEST(Benchmark, Cardinality) { EXPECT_EQ(full_run().size(), 630u); }

TEST(Benchmark, EmptyCorpusRejected) { EXPECT_THROW(run_benchmark({}, kCompressors, {}), Error); }

TEST(Benchmark, BaselineAndMetricConsistency) {
  for (const auto& r : full_run()) {
    if (r.algorithm == AlgorithmId::None) {
      EXPECT_EQ(r.compressed_chars, r.original_chars);
      EXPECT_DOUBLE_EQ(r.ratio, 1.0);
    }
    EXPECT_EQ(r.sms_count, oracle::sms_parts(r.compressed_chars));
    const double back = r.ratio * static_cast<double>(r.compressed_chars);
    EXPECT_LE(std::fabs(back - static_cast<double>(r.original_chars)),
              std::nextafter(static_cast<double>(r.original_chars), 1e300) - static_cast<double>(r.original_chars));
  }
}

TEST(Benchmark, ThreadCountDoesNotChangeResults) {
  auto corpus = generate_corpus({});
  corpus.resize(12);
  const auto one = run_benchmark(corpus, kCompressors, {}, 1);
  const auto many = run_benchmark(corpus, kCompressors, {}, 5);
  ASSERT_EQ(one.size(), many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].sentence_id, many[i].sentence_id);
    EXPECT_EQ(one[i].algorithm, many[i].algorithm);
    EXPECT_EQ(one[i].compressed_chars, many[i].compressed_chars);
  }
}

TEST(Benchmark, PpmSmallestOnS3) {
  const auto ppm = mean_chars(AlgorithmId::Ppm).at("S3");
  for (const auto alg : kCompressors) {
    if (alg == AlgorithmId::Ppm) continue;
    EXPECT_LT(ppm, mean_chars(alg).at("S3")) << algorithm_name(alg);
  }
}

TEST(Benchmark, CodecsNeverNeedMoreSmsOnRepetitiveSentences) {
  std::map<std::pair<std::string, int>, std::size_t> baseline;
  for (const auto& r : full_run()) {
    if (r.algorithm == AlgorithmId::None) baseline[{r.sentence_id, r.trial}] = r.sms_count;
  }
  const std::set<std::string> repetitive = {"S2", "S3", "S5", "S6", "S8", "S9"};
  for (const auto& r : full_run()) {
    if (!repetitive.count(r.sentence_id)) continue;
    EXPECT_LE(r.sms_count, (baseline[{r.sentence_id, r.trial}])) << r.sentence_id << " " << algorithm_name(r.algorithm);
  }
}

TEST(Report, FilesAndRowCounts) {
  oracle::TempDir tmp("report");
  const auto files = emit_report(full_run(), tmp.path());
  std::set<std::string> names;
  for (const auto& f : files) names.insert(f.filename().string());
  const std::set<std::string> expected = {"results.csv",       "summary.csv",       "chars_S1-S3.svg", "chars_S4-S6.svg",
                                          "chars_S7-S9.svg",   "sms_S1-S3.svg",     "sms_S4-S6.svg",   "sms_S7-S9.svg"};
  EXPECT_EQ(names, expected);

  const auto csv = slurp(tmp.path() / "results.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 631);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "sentence_id,trial,algorithm,original_chars,compressed_chars,ratio,sms_count,encode_micros");
  const auto svg = slurp(tmp.path() / "sms_S1-S3.svg");
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_EQ(svg.find("href"), std::string::npos);
}

TEST(Report, RatioHasFourDecimals) {
  const auto csv = results_csv(full_run());
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> cols;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cols.push_back(c);
    ASSERT_EQ(cols.size(), 8u) << line;
    const auto dot = cols[5].find('.');
    ASSERT_NE(dot, std::string::npos);
    ASSERT_EQ(cols[5].size() - dot - 1, 4u) << line;
  }
}

TEST(Report, EmptyRecordsWriteNothing) {
  oracle::TempDir tmp("empty");
  const auto out = tmp.path() / "report";
  EXPECT_THROW(emit_report({}, out), Error);
  EXPECT_FALSE(fs::exists(out) && !fs::is_empty(out));
}
