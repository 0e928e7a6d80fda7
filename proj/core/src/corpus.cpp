#include "voicepack/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>

#include "voicepack/error.hpp"

namespace voicepack::bench {

namespace fs = std::filesystem;

namespace {

constexpr std::array<SentenceInfo, 9> kSentences = {{
    {"S1", "Quick brown fox jumps over the lazy dog", 1, 8, 32},
    {"S2", "Quick brown fox jumps over the lazy dog, Quick brown fox jumps over the lazy dog", 2, 16, 64},
    {"S3",
     "Quick brown fox jumps over the lazy dog, Quick brown fox jumps over the lazy dog, "
     "Quick brown fox jumps over the lazy dog",
     3, 32, 96},
    {"S4", "This is a audio clip", 1, 5, 16},
    {"S5", "This is a audio clip, This is a audio clip", 2, 10, 32},
    {"S6", "This is a audio clip, This is a audio clip, This is a audio clip", 3, 15, 48},
    {"S7", "Hello world", 1, 2, 10},
    {"S8", "Hello world, Hello world", 2, 4, 20},
    {"S9", "Hello world, Hello world, Hello world", 3, 6, 30},
}};

/// AMR mode 7 (12.2 kbit/s) table-of-contents octet.
constexpr std::uint8_t kFrameHeader = 0x3C;

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : text) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Speech parameter octets are far from uniform; ANDing two uniform octets
/// gives each bit a 1/4 chance of being set.
std::uint8_t skewed_octet(std::mt19937_64& rng) { return static_cast<std::uint8_t>(rng() & rng()); }

Bytes read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Storage, "cannot open " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

const SentenceInfo& lookup(std::string_view id) {
  for (const auto& s : kSentences) {
    if (s.id == id) return s;
  }
  fail(ErrorKind::InvalidArgument, "unknown sentence id " + std::string(id));
}

CorpusItem make_item(const SentenceInfo& info, int trial, Bytes payload, std::string label) {
  CorpusItem item;
  item.sentence_id = std::string(info.id);
  item.text = std::string(info.text);
  item.repetitions_within = info.repetitions_within;
  item.trial = trial;
  item.word_count = info.word_count;
  item.letter_count = info.letter_count;
  item.payload = {std::move(payload), std::move(label)};
  return item;
}

}  // namespace

const std::array<SentenceInfo, 9>& sentence_table() { return kSentences; }

void CorpusSpec::validate() const {
  if (bytes_per_frame < 2 || frames_per_word < 1 || noise_octets_per_frame < 0 ||
      noise_octets_per_frame > bytes_per_frame - 1) {
    fail(ErrorKind::InvalidArgument, "corpus spec out of range");
  }
}

std::vector<std::string> sentence_words(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (const char c : text) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      current.push_back(c);
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

WordPattern word_pattern(std::string_view word, int bytes_per_frame) {
  std::mt19937_64 rng(fnv1a(word));
  WordPattern pattern;
  pattern.frame.resize(static_cast<std::size_t>(bytes_per_frame));
  pattern.frame[0] = kFrameHeader;
  for (std::size_t i = 1; i < pattern.frame.size(); ++i) pattern.frame[i] = skewed_octet(rng);

  std::vector<std::size_t> positions(pattern.frame.size() - 1);
  std::iota(positions.begin(), positions.end(), std::size_t{1});
  const auto take = std::min(positions.size(), static_cast<std::size_t>(kVolatileOctets));
  for (std::size_t i = 0; i < take; ++i) {
    const auto j = i + static_cast<std::size_t>(rng() % (positions.size() - i));
    std::swap(positions[i], positions[j]);
  }
  positions.resize(take);
  pattern.volatile_octets = std::move(positions);
  return pattern;
}

std::vector<CorpusItem> generate_corpus(const CorpusSpec& spec) {
  spec.validate();
  std::vector<CorpusItem> corpus;
  corpus.reserve(kSentences.size() * kTrialsPerSentence);
  for (std::size_t s = 0; s < kSentences.size(); ++s) {
    const auto& info = kSentences[s];
    const auto words = sentence_words(info.text);
    for (int trial = 1; trial <= kTrialsPerSentence; ++trial) {
      std::mt19937_64 noise(splitmix64(spec.seed ^ splitmix64((s + 1) * 1000 + static_cast<std::uint64_t>(trial))));
      Bytes payload;
      payload.reserve(words.size() * static_cast<std::size_t>(spec.frames_per_word * spec.bytes_per_frame));
      for (const auto& word : words) {
        const auto pattern = word_pattern(word, spec.bytes_per_frame);
        for (int f = 0; f < spec.frames_per_word; ++f) {
          auto frame = pattern.frame;
          for (int k = 0; k < spec.noise_octets_per_frame; ++k) {
            const auto pick = noise() % pattern.volatile_octets.size();
            frame[pattern.volatile_octets[pick]] ^= 1;
          }
          payload.insert(payload.end(), frame.begin(), frame.end());
        }
      }
      char label[48];
      std::snprintf(label, sizeof label, "synthetic %s trial %d seed %llu", std::string(info.id).c_str(), trial,
                    static_cast<unsigned long long>(spec.seed));
      corpus.push_back(make_item(info, trial, std::move(payload), label));
    }
  }
  return corpus;
}

std::vector<CorpusItem> load_corpus_manifest(const fs::path& manifest) {
  std::ifstream in(manifest);
  if (!in) fail(ErrorKind::Storage, "cannot open manifest " + manifest.string());
  std::string line;
  if (!std::getline(in, line) || line.rfind("sentence_id,trial,path", 0) != 0) {
    fail(ErrorKind::InvalidArgument, manifest.string() + ": expected header sentence_id,trial,path");
  }
  std::vector<CorpusItem> corpus;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string id, trial, path;
    if (!std::getline(row, id, ',') || !std::getline(row, trial, ',') || !std::getline(row, path)) {
      fail(ErrorKind::InvalidArgument, manifest.string() + ": malformed row '" + line + "'");
    }
    fs::path file(path);
    if (file.is_relative()) file = manifest.parent_path() / file;
    corpus.push_back(make_item(lookup(id), std::stoi(trial), read_file(file), file.string()));
  }
  return corpus;
}

void write_corpus(const std::vector<CorpusItem>& corpus, const fs::path& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) fail(ErrorKind::Storage, "cannot create " + out_dir.string() + ": " + ec.message());
  std::ofstream manifest(out_dir / "manifest.csv");
  if (!manifest) fail(ErrorKind::Storage, "cannot write " + (out_dir / "manifest.csv").string());
  manifest << "sentence_id,trial,path\n";
  for (const auto& item : corpus) {
    char name[32];
    std::snprintf(name, sizeof name, "%s_t%02d.bin", item.sentence_id.c_str(), item.trial);
    std::ofstream out(out_dir / name, std::ios::binary);
    out.write(reinterpret_cast<const char*>(item.payload.bytes.data()),
              static_cast<std::streamsize>(item.payload.bytes.size()));
    if (!out) fail(ErrorKind::Storage, "cannot write " + (out_dir / name).string());
    manifest << item.sentence_id << ',' << item.trial << ',' << name << '\n';
  }
}

}  // namespace voicepack::bench
