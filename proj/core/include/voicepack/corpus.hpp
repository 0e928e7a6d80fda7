#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "voicepack/pipeline.hpp"

namespace voicepack::bench {

/// One row of the test-sentence table. Word and letter counts are carried
/// exactly as published, including S3's "32" words (three clauses of eight
/// words are 24).
struct SentenceInfo {
  std::string_view id;
  std::string_view text;
  int repetitions_within;
  int word_count;
  int letter_count;
};

const std::array<SentenceInfo, 9>& sentence_table();

inline constexpr int kTrialsPerSentence = 10;

/// Parameters of the synthetic stand-in for AMR-encoded speech.
struct CorpusSpec {
  std::uint64_t seed = 42;
  int bytes_per_frame = 32;  // 12.2 kbit/s AMR: 1 header octet + 31 speech octets per 20 ms
  int frames_per_word = 15;
  int noise_octets_per_frame = 2;

  /// Throws InvalidArgument unless all fields are positive and the noise
  /// fits in a frame's non-header octets.
  void validate() const;
};

struct CorpusItem {
  std::string sentence_id;
  std::string text;
  int repetitions_within = 1;
  int trial = 1;
  VoicePayload payload;
  int word_count = 0;
  int letter_count = 0;
};

/// Alphabetic words of a sentence, punctuation dropped.
std::vector<std::string> sentence_words(std::string_view text);

/// Number of parameter octets per word that drift between frames.
inline constexpr int kVolatileOctets = 8;

/// Frame pattern for a spoken word plus the positions of its volatile
/// octets. Depends only on the word text.
struct WordPattern {
  Bytes frame;
  std::vector<std::size_t> volatile_octets;
};

WordPattern word_pattern(std::string_view word, int bytes_per_frame);

/// 9 sentences x 10 trials. Each word contributes its frame pattern
/// frames_per_word times; every frame then has noise_octets_per_frame
/// picks among the word's volatile octets, each flipping the low bit.
/// Picks come from a stream seeded by (seed, sentence, trial).
std::vector<CorpusItem> generate_corpus(const CorpusSpec& spec);

/// Loads real payload files listed in a CSV with header
/// sentence_id,trial,path. Relative paths resolve against the manifest.
std::vector<CorpusItem> load_corpus_manifest(const std::filesystem::path& manifest);

/// Writes each item's payload as <id>_t<NN>.bin plus a matching manifest.csv.
void write_corpus(const std::vector<CorpusItem>& corpus, const std::filesystem::path& out_dir);

}  // namespace voicepack::bench
