#include "voicepack/lzma.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <span>
#include <string>
#include <vector>

#include "voicepack/error.hpp"
#include "voicepack/lz77.hpp"
#include "voicepack/range_coder.hpp"

namespace voicepack {

namespace {

enum TokenKind : int { kLiteral = 0, kMatch = 1, kRep = 2 };

constexpr int kStates = 9;
constexpr int kLenStates = 4;
constexpr int kEndPosSlot = 14;
constexpr int kAlignBits = 4;
constexpr std::size_t kMaxOverrun = 8;

/// Markov state over the last two token kinds.
struct State {
  int value = 0;
  int last() const noexcept { return value % 3; }
  void push(TokenKind kind) noexcept { value = (value % 3) * 3 + kind; }
};

void encode_reverse(RangeEncoder& enc, std::span<BitProbability> probs, int bits, std::uint32_t value) {
  std::uint32_t node = 1;
  for (int i = 0; i < bits; ++i) {
    const unsigned bit = value & 1u;
    value >>= 1;
    enc.encode_bit(probs[node], bit);
    node = (node << 1) | bit;
  }
}

std::uint32_t decode_reverse(RangeDecoder& dec, std::span<BitProbability> probs, int bits) {
  std::uint32_t node = 1;
  std::uint32_t value = 0;
  for (int i = 0; i < bits; ++i) {
    const unsigned bit = dec.decode_bit(probs[node]);
    node = (node << 1) | bit;
    value |= bit << i;
  }
  return value;
}

/// Match length minus the minimum: 8 short values, 8 medium, 256 long.
class LengthCoder {
 public:
  static constexpr std::uint32_t kLowCount = 8;
  static constexpr std::uint32_t kMidCount = 8;

  void encode(RangeEncoder& enc, std::uint32_t value) {
    if (value < kLowCount) {
      enc.encode_bit(choice_, 0);
      low_.encode(enc, value);
      return;
    }
    enc.encode_bit(choice_, 1);
    value -= kLowCount;
    if (value < kMidCount) {
      enc.encode_bit(choice2_, 0);
      mid_.encode(enc, value);
      return;
    }
    enc.encode_bit(choice2_, 1);
    high_.encode(enc, value - kMidCount);
  }

  std::uint32_t decode(RangeDecoder& dec) {
    if (dec.decode_bit(choice_) == 0) return low_.decode(dec);
    if (dec.decode_bit(choice2_) == 0) return kLowCount + mid_.decode(dec);
    return kLowCount + kMidCount + high_.decode(dec);
  }

 private:
  BitProbability choice_;
  BitProbability choice2_;
  BitTree<3> low_;
  BitTree<3> mid_;
  BitTree<8> high_;
};

/// Offsets coded as a 6-bit slot (magnitude class) plus footer bits.
class DistanceCoder {
 public:
  DistanceCoder() : special_(1u << 10) {}

  void encode(RangeEncoder& enc, std::uint32_t distance, int len_state) {
    const std::uint32_t slot = slot_of(distance);
    slots_[len_state].encode(enc, slot);
    if (slot < 4) return;
    const int footer_bits = static_cast<int>(slot >> 1) - 1;
    const std::uint32_t base = (2u | (slot & 1u)) << footer_bits;
    const std::uint32_t reduced = distance - base;
    if (slot < kEndPosSlot) {
      encode_reverse(enc, special_for(slot), footer_bits, reduced);
      return;
    }
    enc.encode_direct(reduced >> kAlignBits, footer_bits - kAlignBits);
    align_.encode_reverse(enc, reduced & ((1u << kAlignBits) - 1));
  }

  std::uint32_t decode(RangeDecoder& dec, int len_state) {
    const std::uint32_t slot = slots_[len_state].decode(dec);
    if (slot < 4) return slot;
    const int footer_bits = static_cast<int>(slot >> 1) - 1;
    const std::uint32_t base = (2u | (slot & 1u)) << footer_bits;
    if (slot < kEndPosSlot) return base + decode_reverse(dec, special_for(slot), footer_bits);
    const std::uint32_t high = dec.decode_direct(footer_bits - kAlignBits) << kAlignBits;
    return base + high + align_.decode_reverse(dec);
  }

 private:
  static std::uint32_t slot_of(std::uint32_t distance) noexcept {
    if (distance < 4) return distance;
    const auto top = static_cast<std::uint32_t>(std::bit_width(distance)) - 1;
    return 2 * top + ((distance >> (top - 1)) & 1u);
  }

  std::span<BitProbability> special_for(std::uint32_t slot) {
    return std::span<BitProbability>(special_).subspan(64 * (slot - 4), 64);
  }

  std::array<BitTree<6>, kLenStates> slots_{};
  std::vector<BitProbability> special_;
  BitTree<kAlignBits> align_;
};

/// All adaptive probabilities of one stream.
struct Model {
  explicit Model(const CodecConfig& cfg) : min_match(static_cast<std::uint32_t>(cfg.lz_min_match())) {}

  std::uint32_t min_match;
  std::array<BitProbability, kStates> is_match{};
  std::array<BitProbability, kStates> is_rep{};
  // [previous token was a literal ? 0 : 1][top three bits of previous octet]
  std::array<std::array<BitTree<8>, 8>, 2> literal{};
  LengthCoder match_len;
  LengthCoder rep_len;
  DistanceCoder distance;

  BitTree<8>& literal_coder(const State& state, std::uint8_t previous) {
    return literal[state.last() == kLiteral ? 0 : 1][previous >> 5];
  }

  int len_state(std::uint32_t length) const noexcept {
    return static_cast<int>(std::min<std::uint32_t>(length - min_match, kLenStates - 1));
  }
};

}  // namespace

Bytes lzma_encode(ByteView input, const CodecConfig& cfg) {
  const auto tokens = lz77_parse(input, cfg);
  Model model(cfg);
  RangeEncoder enc;
  State state;
  std::uint32_t rep0 = 0;
  std::size_t pos = 0;

  for (const auto& token : tokens) {
    if (token.kind == LzToken::Kind::Literal) {
      enc.encode_bit(model.is_match[state.value], 0);
      model.literal_coder(state, pos ? input[pos - 1] : 0).encode(enc, token.literal);
      state.push(kLiteral);
      ++pos;
      continue;
    }
    enc.encode_bit(model.is_match[state.value], 1);
    if (token.offset == rep0) {
      enc.encode_bit(model.is_rep[state.value], 1);
      model.rep_len.encode(enc, token.length - model.min_match);
      state.push(kRep);
    } else {
      enc.encode_bit(model.is_rep[state.value], 0);
      model.match_len.encode(enc, token.length - model.min_match);
      model.distance.encode(enc, token.offset - 1, model.len_state(token.length));
      rep0 = token.offset;
      state.push(kMatch);
    }
    pos += token.length;
  }
  return std::move(enc).finish();
}

Bytes lzma_decode(ByteView payload, std::size_t expected_len, const CodecConfig& cfg) {
  Model model(cfg);
  RangeDecoder dec(payload);
  State state;
  std::uint32_t rep0 = 0;
  Bytes out;
  out.reserve(expected_len);

  while (out.size() < expected_len) {
    if (dec.decode_bit(model.is_match[state.value]) == 0) {
      const std::uint8_t previous = out.empty() ? 0 : out.back();
      out.push_back(static_cast<std::uint8_t>(model.literal_coder(state, previous).decode(dec)));
      state.push(kLiteral);
    } else {
      std::uint32_t length;
      if (dec.decode_bit(model.is_rep[state.value]) == 1) {
        length = model.rep_len.decode(dec) + model.min_match;
        state.push(kRep);
      } else {
        length = model.match_len.decode(dec) + model.min_match;
        rep0 = model.distance.decode(dec, model.len_state(length)) + 1;
        state.push(kMatch);
      }
      if (rep0 == 0 || rep0 > out.size() || rep0 > cfg.lz_window()) {
        fail(ErrorKind::CorruptStream, "lzma match offset " + std::to_string(rep0) + " out of range");
      }
      if (length > static_cast<std::uint32_t>(cfg.lz_max_match()) || out.size() + length > expected_len) {
        fail(ErrorKind::CorruptStream, "lzma match overruns the declared length");
      }
      const auto from = out.size() - rep0;
      for (std::uint32_t i = 0; i < length; ++i) out.push_back(out[from + i]);
    }
    if (dec.overrun() > kMaxOverrun) fail(ErrorKind::CorruptStream, "lzma stream underrun");
  }
  return out;
}

}  // namespace voicepack
