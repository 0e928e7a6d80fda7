#include "voicepack/lz77.hpp"

#include <algorithm>
#include <string>

#include "voicepack/error.hpp"

namespace voicepack {

namespace {

constexpr int kHashBits = 16;
constexpr std::int64_t kNone = -1;

class MatchFinder {
 public:
  MatchFinder(ByteView input, const CodecConfig& cfg)
      : input_(input),
        window_(cfg.lz_window()),
        min_match_(static_cast<std::size_t>(cfg.lz_min_match())),
        max_match_(static_cast<std::size_t>(cfg.lz_max_match())),
        hash_len_(std::min<std::size_t>(min_match_, 3)),
        head_(std::size_t{1} << kHashBits, kNone),
        chain_(input.size(), kNone) {}

  struct Match {
    std::size_t offset = 0;
    std::size_t length = 0;
  };

  Match longest(std::size_t pos) const {
    Match best;
    if (pos + min_match_ > input_.size()) return best;
    const std::size_t limit = std::min(max_match_, input_.size() - pos);
    for (auto cand = head_[hash(pos)]; cand != kNone; cand = chain_[static_cast<std::size_t>(cand)]) {
      const auto c = static_cast<std::size_t>(cand);
      if (pos - c > window_) break;
      std::size_t len = 0;
      while (len < limit && input_[c + len] == input_[pos + len]) ++len;
      if (len > best.length) {
        best = {pos - c, len};
        if (len == limit) break;
      }
    }
    if (best.length < min_match_) return {};
    return best;
  }

  void insert(std::size_t pos) {
    if (pos + hash_len_ > input_.size()) return;
    auto& slot = head_[hash(pos)];
    chain_[pos] = slot;
    slot = static_cast<std::int64_t>(pos);
  }

 private:
  std::size_t hash(std::size_t pos) const noexcept {
    std::uint32_t h = 0;
    for (std::size_t i = 0; i < hash_len_; ++i) h = (h << 8) | input_[pos + i];
    return (h * 2654435761u) >> (32 - kHashBits);
  }

  ByteView input_;
  std::size_t window_;
  std::size_t min_match_;
  std::size_t max_match_;
  std::size_t hash_len_;
  std::vector<std::int64_t> head_;
  std::vector<std::int64_t> chain_;
};

}  // namespace

std::vector<LzToken> lz77_parse(ByteView input, const CodecConfig& cfg) {
  std::vector<LzToken> tokens;
  MatchFinder finder(input, cfg);
  std::size_t pos = 0;
  while (pos < input.size()) {
    const auto match = finder.longest(pos);
    if (match.length == 0) {
      tokens.push_back(LzToken::make_literal(input[pos]));
      finder.insert(pos);
      ++pos;
      continue;
    }
    tokens.push_back(LzToken::make_match(static_cast<std::uint32_t>(match.offset),
                                         static_cast<std::uint32_t>(match.length)));
    for (std::size_t i = 0; i < match.length; ++i) finder.insert(pos + i);
    pos += match.length;
  }
  return tokens;
}

Bytes lz77_replay(const std::vector<LzToken>& tokens) {
  Bytes out;
  for (const auto& t : tokens) {
    if (t.kind == LzToken::Kind::Literal) {
      out.push_back(t.literal);
      continue;
    }
    if (t.offset == 0 || t.offset > out.size()) {
      fail(ErrorKind::CorruptStream, "match offset " + std::to_string(t.offset) +
                                         " beyond " + std::to_string(out.size()) + " decoded octets");
    }
    const auto from = out.size() - t.offset;
    for (std::size_t i = 0; i < t.length; ++i) out.push_back(out[from + i]);
  }
  return out;
}

}  // namespace voicepack
